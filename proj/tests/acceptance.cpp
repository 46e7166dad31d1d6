// Acceptance suite: one line per criterion, PASS or FAIL.
//
//   acceptance            run every criterion
//   acceptance 3 5        run only criteria 3 and 5
//
// Exit status is 0 iff every selected criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <lonely/lonely.hpp>

#include "cli.hpp"

namespace {

using namespace lonely;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

struct CliResult {
  int status;
  std::string out;
  double seconds;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  auto start = std::chrono::steady_clock::now();
  int status = cli::run(args, out, err);
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {status, out.str(), seconds};
}

std::string secs(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << "s";
  return os.str();
}

BigCount json_big(const nlohmann::json& j) {
  return j.is_string() ? BigCount(j.get<std::string>()) : BigCount(j.get<std::uint64_t>());
}

// 1. verify --max-n 12 matches all 13 published rows, under 60 s.
Outcome table_reproduction() {
  Outcome o;
  auto r = run_cli({"verify", "--max-n", "12", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  if (r.status != 0) {
    o.fail("exit " + std::to_string(r.status) + ", " + std::to_string(j["mismatches"].size()) +
           " mismatching cells, first: " +
           (j["mismatches"].empty() ? "" : j["mismatches"][0].get<std::string>()));
  }
  if (r.seconds >= 60.0) o.fail("took " + secs(r.seconds));
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("elapsed ") + secs(r.seconds);
  return o;
}

// 2. count --n 14 single-threaded returns L=763783, M=1910657 in < 10 min.
Outcome performance_bar() {
  Outcome o;
  auto r = run_cli({"count", "--n", "14", "--workers", "1", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  BigCount lonely = json_big(j["lonely"]);
  BigCount married = json_big(j["marriageable"]);
  if (lonely != 763783) o.fail("L14=" + to_decimal(lonely) + " expected 763783");
  if (married != 1910657) o.fail("M14=" + to_decimal(married) + " expected 1910657");
  if (r.seconds >= 600.0) o.fail("took " + secs(r.seconds));
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("elapsed ") + secs(r.seconds);
  return o;
}

// 3. tally == oracle_tally for n <= 9; classify_fast == classify for n <= 10.
Outcome oracle_equivalence() {
  Outcome o;
  for (int n = 0; n <= 9; ++n) {
    if (tally(n) != oracle_tally(n)) o.fail("tally differs from oracle at n=" + std::to_string(n));
  }
  std::size_t checked = 0;
  for (int n = 0; n <= 10; ++n) {
    for_each_noncrossing_partition(n, [&](const Partition& p) {
      ++checked;
      if (!(classify_fast(p) == classify(p))) o.fail("classify_fast disagrees on " + to_string(p));
    });
  }
  if (o.pass) o.detail = std::to_string(checked) + " partitions classified identically";
  return o;
}

// 4. Closed forms equal enumeration for n <= 10, m <= n, k in {0, 1}.
Outcome closed_form_agreement() {
  Outcome o;
  int cells = 0;
  try {
    for (int n = 0; n <= 10; ++n) {
      for (int m = 0; m <= n; ++m) {
        for (int k : {0, 1}) {
          ++cells;
          if (nc_count(n, m, k) != nc_count_enumerated(n, m, k)) {
            o.fail("NC(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(k) +
                   ")");
          }
        }
      }
    }
  } catch (const InternalError& e) {
    o.fail(e.what());
  }
  if (o.pass) o.detail = std::to_string(cells) + " cells agree";
  return o;
}

// 5. Lower bounds, C(n) + 3M(n) <= M(n+2), monotonicity, M(n) > L(n) for n >= 9.
Outcome inequality_suite() {
  Outcome o;
  auto t = tally_range(14);
  auto N = [](int n) { return std::to_string(n); };
  for (int n = 2; n <= 14; ++n)
    if (!(lower_bound_lonely(n) <= t[n].lonely)) o.fail("lonely bound at n=" + N(n));
  for (int n = 3; n <= 14; ++n)
    if (!(lower_bound_marriageable(n) <= t[n].marriageable)) o.fail("marriageable bound at n=" + N(n));
  for (int n = 0; n <= 12; ++n)
    if (!(catalan(n) + 3 * t[n].marriageable <= t[n + 2].marriageable)) o.fail("C+3M at n=" + N(n));
  for (int n = 2; n <= 13; ++n)
    if (!(t[n].lonely < t[n + 1].lonely)) o.fail("L increasing at n=" + N(n));
  for (int n = 3; n <= 13; ++n)
    if (!(t[n].marriageable < t[n + 1].marriageable)) o.fail("M increasing at n=" + N(n));
  for (int n = 9; n <= 14; ++n)
    if (!(t[n].marriageable > t[n].lonely)) o.fail("M > L at n=" + N(n));
  return o;
}

// 6. partition <-> MSL round trip for n <= 8; absolute MSL count == L(n) for
//    n <= 6 via exhaustive lane search.
Outcome bijection_suite() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    for_each_noncrossing_partition(n, [&](const Partition& p) {
      if (msl_to_partition(partition_to_msl(p)) != p) o.fail("round trip fails on " + to_string(p));
    });
  }
  for (int n = 1; n <= 6; ++n) {
    std::set<Msl> brute;
    BigCount absolute = 0;
    for_each_msl(n, [&](Msl m) {
      if (is_absolute(m)) absolute += 1;
      brute.insert(std::move(m));
    });
    std::set<Msl> image;
    for_each_noncrossing_partition(n, [&](const Partition& p) { image.insert(partition_to_msl(p)); });
    if (brute != image) o.fail("MSL set != bijection image at n=" + std::to_string(n));
    if (absolute != tally(n).lonely) o.fail("absolute count != L at n=" + std::to_string(n));
  }
  return o;
}

// 7. f, g, h, i, j, k injective with correctly classified images; h, i, j, k
//    images pairwise disjoint; n <= 7.
Outcome injection_suite() {
  Outcome o;
  for (int n = 0; n <= 7; ++n) {
    std::vector<Partition> lonely, married, all = noncrossing_partitions(n);
    for (const auto& p : all) (classify(p).marriageable() ? married : lonely).push_back(p);

    auto image_of = [&](const std::vector<Partition>& domain, Partition (*map)(const Partition&),
                        Kind kind, const char* name) {
      std::set<Partition> image;
      for (const auto& p : domain) {
        Partition q = map(p);
        if (classify(q).kind != kind) o.fail(std::string(name) + " misclassified image of " + to_string(p));
        image.insert(q);
      }
      if (image.size() != domain.size()) o.fail(std::string(name) + " not injective at n=" + std::to_string(n));
      return image;
    };
    image_of(lonely, map_f, Kind::Lonely, "f");
    image_of(married, map_g, Kind::Marriageable, "g");
    std::vector<std::set<Partition>> images{
        image_of(all, map_h, Kind::Marriageable, "h"), image_of(married, map_i, Kind::Marriageable, "i"),
        image_of(married, map_j, Kind::Marriageable, "j"), image_of(married, map_k, Kind::Marriageable, "k")};
    for (std::size_t a = 0; a < images.size(); ++a) {
      for (std::size_t b = a + 1; b < images.size(); ++b) {
        for (const auto& q : images[a]) {
          if (images[b].count(q)) o.fail("images overlap at " + to_string(q));
        }
      }
    }
  }
  return o;
}

// 8. count --n 16: total = C(16) = 35357670 and L + M = C.
Outcome extension_run() {
  Outcome o;
  auto r = run_cli({"count", "--n", "16", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  BigCount lonely = json_big(j["lonely"]), married = json_big(j["marriageable"]);
  BigCount total = json_big(j["total"]);
  if (total != 35357670) o.fail("total " + to_decimal(total));
  if (lonely + married != total) o.fail("L + M != C");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("L16=") + to_decimal(lonely) +
              " M16=" + to_decimal(married) + " elapsed " + secs(r.seconds);
  return o;
}

// 9. conjectures --max-n 14 reproduces every printed 2-digit ratio cell.
Outcome conjecture_report_cells() {
  Outcome o;
  auto r = run_cli({"conjectures", "--max-n", "14", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  int checked = 0;
  std::vector<std::string> bad;
  auto check = [&](int n, const char* column, const nlohmann::json& got, std::string_view want) {
    if (want.empty()) return;
    ++checked;
    std::string expected = Hundredths::parse(want).str();
    std::string actual = got.is_null() ? "<absent>" : got.get<std::string>();
    if (actual != expected) {
      bad.push_back("n=" + std::to_string(n) + " " + column + " " + actual + "!=" + expected);
    }
  };
  for (int n = 0; n <= 14; ++n) {
    const auto& ref = kReferenceTable[n];
    check(n, "M/L", j[n]["m_over_l"], ref.m_over_l);
    check(n, "M/C", j[n]["m_over_c"], ref.m_over_c);
    if (n >= 1) {
      check(n, "L/L-1", j[n - 1]["next_ratio_l"], ref.ratio_l);
      check(n, "M/M-1", j[n - 1]["next_ratio_m"], ref.ratio_m);
    }
  }
  if (!bad.empty()) {
    std::string list;
    for (const auto& b : bad) list += (list.empty() ? "" : ", ") + b;
    o.fail(std::to_string(bad.size()) + "/" + std::to_string(checked) + " cells differ: " + list);
  } else {
    o.detail = std::to_string(checked) + " cells match";
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "table reproduction (verify --max-n 12, < 60 s)", table_reproduction},
      {2, "performance bar (count --n 14 single-threaded, < 10 min)", performance_bar},
      {3, "oracle equivalence", oracle_equivalence},
      {4, "closed-form agreement", closed_form_agreement},
      {5, "inequality suite", inequality_suite},
      {6, "bijection suite", bijection_suite},
      {7, "injection-map suite", injection_suite},
      {8, "extension run (count --n 16)", extension_run},
      {9, "conjecture report cells", conjecture_report_cells},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name;
    if (!o.detail.empty()) std::cout << " -- " << o.detail;
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
