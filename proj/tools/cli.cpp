#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include <lonely/lonely.hpp>

namespace lonely::cli {
namespace {

using nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

struct Options {
  int n = 0;
  int workers = 1;
  Format format = Format::Text;
  std::string output_path;
  std::optional<std::uint64_t> progress;
  std::string kind_filter;  // enumerate --class
  std::string seq;          // bfile --seq
  bool brute = false;       // intersection --brute
};

int default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

ordered_json json_ratio(const std::optional<Hundredths>& h) {
  if (!h) return nullptr;
  return h->str();
}

std::string csv_ratio(const std::optional<Hundredths>& h) { return h ? h->str() : ""; }

std::string text_ratio(const std::optional<Hundredths>& h) { return h ? h->str() : "-"; }

struct Column {
  std::string header;
  std::vector<std::string> cells;
};

void print_columns(std::ostream& out, const std::vector<Column>& columns) {
  if (columns.empty()) return;
  std::vector<std::size_t> width;
  for (const auto& c : columns) {
    std::size_t w = c.header.size();
    for (const auto& cell : c.cells) w = std::max(w, cell.size());
    width.push_back(w);
  }
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << columns[i].header;
  }
  out << '\n';
  for (std::size_t r = 0; r < columns.front().cells.size(); ++r) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << columns[i].cells[r];
    }
    out << '\n';
  }
}

std::vector<Tally> compute_range(const Options& o) { return tally_range(o.n, o.workers); }

// ---------------------------------------------------------------------------

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  CountJob job{o.n, o.workers, o.progress, {}};
  if (o.progress) {
    job.on_progress = [&err](const Progress& p) {
      err << "progress n=" << p.n << " visited=" << p.visited << "/" << p.total << std::endl;
    };
  }
  Tally t = tally(job);
  switch (o.format) {
    case Format::Text:
      out << "n=" << t.n << " lonely=" << t.lonely << " marriageable=" << t.marriageable
          << " total=" << t.total << '\n';
      break;
    case Format::Json: {
      ordered_json j;
      j["n"] = t.n;
      j["lonely"] = json_count(t.lonely);
      j["marriageable"] = json_count(t.marriageable);
      j["total"] = json_count(t.total);
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "n,lonely,marriageable,total\n"
          << t.n << ',' << t.lonely << ',' << t.marriageable << ',' << t.total << '\n';
      break;
  }
  return kExitOk;
}

void emit_rows(const std::vector<SequenceRow>& rows, Format format, std::ostream& out) {
  switch (format) {
    case Format::Text: {
      std::vector<Column> cols{{"n", {}},   {"L(n)", {}},    {"L/L-1", {}}, {"M(n)", {}},
                               {"M/M-1", {}}, {"C(n)", {}}, {"M/L", {}},   {"M/C", {}}};
      for (const auto& r : rows) {
        cols[0].cells.push_back(std::to_string(r.n));
        cols[1].cells.push_back(to_decimal(r.lonely));
        cols[2].cells.push_back(text_ratio(r.ratio_l));
        cols[3].cells.push_back(to_decimal(r.marriageable));
        cols[4].cells.push_back(text_ratio(r.ratio_m));
        cols[5].cells.push_back(to_decimal(r.catalan));
        cols[6].cells.push_back(text_ratio(r.m_over_l));
        cols[7].cells.push_back(r.m_over_c.str());
      }
      print_columns(out, cols);
      break;
    }
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) {
        ordered_json j;
        j["n"] = r.n;
        j["lonely"] = json_count(r.lonely);
        j["marriageable"] = json_count(r.marriageable);
        j["catalan"] = json_count(r.catalan);
        j["ratio_l"] = json_ratio(r.ratio_l);
        j["ratio_m"] = json_ratio(r.ratio_m);
        j["m_over_l"] = json_ratio(r.m_over_l);
        j["m_over_c"] = r.m_over_c.str();
        arr.push_back(std::move(j));
      }
      out << arr.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "n,lonely,marriageable,catalan,ratio_l,ratio_m,m_over_l,m_over_c\n";
      for (const auto& r : rows) {
        out << r.n << ',' << r.lonely << ',' << r.marriageable << ',' << r.catalan << ','
            << csv_ratio(r.ratio_l) << ',' << csv_ratio(r.ratio_m) << ',' << csv_ratio(r.m_over_l)
            << ',' << r.m_over_c.str() << '\n';
      }
      break;
  }
}

int cmd_table(const Options& o, std::ostream& out) {
  emit_rows(ratio_report(o.n, compute_range(o)), o.format, out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto rows = ratio_report(o.n, compute_range(o));
  auto problems = compare_with_reference(rows);
  if (o.format == Format::Json) {
    ordered_json j;
    j["max_n"] = o.n;
    j["ok"] = problems.empty();
    j["mismatches"] = problems;
    out << j.dump() << '\n';
  } else {
    for (const auto& p : problems) out << "MISMATCH " << p << '\n';
    out << (problems.empty() ? "OK" : "FAILED") << ": rows 0.." << o.n << ", "
        << problems.size() << " mismatching cells\n";
  }
  return problems.empty() ? kExitOk : kExitMismatch;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  auto tallies = compute_range(o);
  struct Row {
    int n;
    std::optional<BigCount> lb_l, lb_m, c_plus_3m, m_plus_2;
    bool ok = true;
  };
  std::vector<Row> rows;
  bool all_ok = true;
  for (int n = 0; n <= o.n; ++n) {
    const Tally& t = tallies[static_cast<std::size_t>(n)];
    Row r{n, {}, {}, {}, {}};
    if (n >= 2) {
      r.lb_l = lower_bound_lonely(n);
      r.ok = r.ok && *r.lb_l <= t.lonely;
    }
    if (n >= 3) {
      r.lb_m = lower_bound_marriageable(n);
      r.ok = r.ok && *r.lb_m <= t.marriageable;
    }
    if (n + 2 <= o.n) {
      r.c_plus_3m = t.total + 3 * t.marriageable;
      r.m_plus_2 = tallies[static_cast<std::size_t>(n + 2)].marriageable;
      r.ok = r.ok && *r.c_plus_3m <= *r.m_plus_2;
    }
    all_ok = all_ok && r.ok;
    rows.push_back(std::move(r));
  }
  auto cell = [](const std::optional<BigCount>& v, const char* none) {
    return v ? to_decimal(*v) : std::string(none);
  };
  switch (o.format) {
    case Format::Text: {
      std::vector<Column> cols{{"n", {}},        {"L(n)", {}},       {"boundL", {}},
                               {"M(n)", {}},     {"boundM", {}},     {"C(n)+3M(n)", {}},
                               {"M(n+2)", {}},   {"ok", {}}};
      for (const auto& r : rows) {
        const Tally& t = tallies[static_cast<std::size_t>(r.n)];
        cols[0].cells.push_back(std::to_string(r.n));
        cols[1].cells.push_back(to_decimal(t.lonely));
        cols[2].cells.push_back(cell(r.lb_l, "-"));
        cols[3].cells.push_back(to_decimal(t.marriageable));
        cols[4].cells.push_back(cell(r.lb_m, "-"));
        cols[5].cells.push_back(cell(r.c_plus_3m, "-"));
        cols[6].cells.push_back(cell(r.m_plus_2, "-"));
        cols[7].cells.push_back(r.ok ? "yes" : "NO");
      }
      print_columns(out, cols);
      break;
    }
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) {
        const Tally& t = tallies[static_cast<std::size_t>(r.n)];
        auto opt = [](const std::optional<BigCount>& v) {
          return v ? json_count(*v) : ordered_json(nullptr);
        };
        ordered_json j;
        j["n"] = r.n;
        j["lonely"] = json_count(t.lonely);
        j["lower_bound_lonely"] = opt(r.lb_l);
        j["marriageable"] = json_count(t.marriageable);
        j["lower_bound_marriageable"] = opt(r.lb_m);
        j["catalan_plus_3m"] = opt(r.c_plus_3m);
        j["marriageable_n_plus_2"] = opt(r.m_plus_2);
        j["ok"] = r.ok;
        arr.push_back(std::move(j));
      }
      out << arr.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "n,lonely,lower_bound_lonely,marriageable,lower_bound_marriageable,catalan_plus_3m,"
             "marriageable_n_plus_2,ok\n";
      for (const auto& r : rows) {
        const Tally& t = tallies[static_cast<std::size_t>(r.n)];
        out << r.n << ',' << t.lonely << ',' << cell(r.lb_l, "") << ',' << t.marriageable << ','
            << cell(r.lb_m, "") << ',' << cell(r.c_plus_3m, "") << ',' << cell(r.m_plus_2, "")
            << ',' << (r.ok ? "true" : "false") << '\n';
      }
      break;
  }
  return all_ok ? kExitOk : kExitMismatch;
}

int cmd_conjectures(const Options& o, std::ostream& out) {
  auto rows = conjecture_report(o.n, compute_range(o));
  switch (o.format) {
    case Format::Text: {
      std::vector<Column> cols{{"n", {}},   {"M>L", {}},         {"M/L", {}},
                               {"M/C", {}}, {"L/C", {}},         {"M(n+1)/M(n)", {}},
                               {"L(n+1)/L(n)", {}}};
      for (const auto& r : rows) {
        cols[0].cells.push_back(std::to_string(r.n));
        cols[1].cells.push_back(r.m_exceeds_l ? "yes" : "no");
        cols[2].cells.push_back(text_ratio(r.m_over_l));
        cols[3].cells.push_back(r.m_over_c.str());
        cols[4].cells.push_back(r.l_over_c.str());
        cols[5].cells.push_back(text_ratio(r.next_ratio_m));
        cols[6].cells.push_back(text_ratio(r.next_ratio_l));
      }
      print_columns(out, cols);
      break;
    }
    case Format::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) {
        ordered_json j;
        j["n"] = r.n;
        j["m_exceeds_l"] = r.m_exceeds_l;
        j["m_over_l"] = json_ratio(r.m_over_l);
        j["m_over_c"] = r.m_over_c.str();
        j["l_over_c"] = r.l_over_c.str();
        j["next_ratio_m"] = json_ratio(r.next_ratio_m);
        j["next_ratio_l"] = json_ratio(r.next_ratio_l);
        arr.push_back(std::move(j));
      }
      out << arr.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "n,m_exceeds_l,m_over_l,m_over_c,l_over_c,next_ratio_m,next_ratio_l\n";
      for (const auto& r : rows) {
        out << r.n << ',' << (r.m_exceeds_l ? "true" : "false") << ',' << csv_ratio(r.m_over_l)
            << ',' << r.m_over_c.str() << ',' << r.l_over_c.str() << ','
            << csv_ratio(r.next_ratio_m) << ',' << csv_ratio(r.next_ratio_l) << '\n';
      }
      break;
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (o.n > kStreamCeiling) detail::fail_ceiling("enumerate", o.n, kStreamCeiling);
  std::optional<Kind> wanted;
  if (o.kind_filter == "lonely") wanted = Kind::Lonely;
  if (o.kind_filter == "marriageable") wanted = Kind::Marriageable;
  for_each_noncrossing_partition(o.n, [&](const Partition& p) {
    if (!wanted) {
      out << to_string(p) << '\n';
      return;
    }
    if (classify_fast(p).kind == *wanted) out << to_string(p) << '\n';
  });
  return kExitOk;
}

int cmd_intersection(const Options& o, std::ostream& out) {
  auto line = [&](const Msl& m) {
    out << to_string(m) << '\t' << to_string(msl_to_partition(m)) << '\t'
        << (is_absolute(m) ? "absolute" : "nonabsolute") << '\n';
  };
  if (o.brute) {
    for_each_msl(o.n, line);
    return kExitOk;
  }
  if (o.n > kStreamCeiling) detail::fail_ceiling("intersection", o.n, kStreamCeiling);
  if (o.n < 1) throw InvalidArgument("intersection requires --n >= 1");
  for_each_noncrossing_partition(o.n, [&](const Partition& p) { line(partition_to_msl(p)); });
  return kExitOk;
}

int cmd_bfile(const Options& o, std::ostream& out) {
  bool lonely_seq = o.seq == "L";
  for (const auto& t : compute_range(o)) {
    out << t.n << ' ' << (lonely_seq ? t.lonely : t.marriageable) << '\n';
  }
  return kExitOk;
}

}  // namespace

ordered_json json_count(const BigCount& value) {
  static const BigCount kExactLimit = BigCount(1) << 53;
  if (value <= kExactLimit) return static_cast<std::uint64_t>(value);
  return to_decimal(value);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lonely and marriageable singles in noncrossing partitions", "lonely"};
  app.require_subcommand(1, 1);

  Options o;
  o.workers = default_workers();
  std::string format = "text";
  std::uint64_t progress = 0;
  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

  auto common = [&](CLI::App* sub, const char* size_flag, const char* size_help) {
    sub->add_option(size_flag, o.n, size_help)->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--workers", o.workers, "Worker threads (default: $" + std::string(kWorkersEnv) +
                                                " or hardware concurrency)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output", o.output_path, "Write the report to this file");
    return sub;
  };

  auto* count = common(app.add_subcommand("count", "Count L(n), M(n), C(n)"), "--n", "Size n");
  count->add_option("--progress", progress, "Report progress to stderr every N partitions")
      ->check(CLI::PositiveNumber);
  common(app.add_subcommand("table", "Print the sequence table for 0..N"), "--max-n", "Largest n");
  common(app.add_subcommand("verify", "Compare 0..N against the published table"), "--max-n",
         "Largest n");
  common(app.add_subcommand("bounds", "Check the lower bounds and C(n)+3M(n) <= M(n+2)"),
         "--max-n", "Largest n");
  common(app.add_subcommand("conjectures", "Print the conjecture quantities for 0..N"), "--max-n",
         "Largest n");
  auto* enumerate =
      common(app.add_subcommand("enumerate", "List noncrossing partitions of [N]"), "--n", "Size n");
  enumerate->add_option("--class", o.kind_filter, "Only lonely or marriageable partitions")
      ->check(CLI::IsMember({"lonely", "marriageable"}));
  auto* intersection = common(
      app.add_subcommand("intersection", "List maximal lane sets with absoluteness"), "--n", "Size n");
  intersection->add_flag("--brute", o.brute, "Use the exhaustive lane search");
  auto* bfile = common(app.add_subcommand("bfile", "Write an OEIS b-file for L or M"), "--max-n",
                       "Largest n");
  bfile->add_option("--seq", o.seq, "Sequence")->required()->check(CLI::IsMember({"L", "M"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  o.format = formats.at(format);
  if (progress > 0) o.progress = progress;

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.output_path.empty()) {
    file.open(o.output_path);
    if (!file) {
      err << "error: cannot open " << o.output_path << '\n';
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string& name = sub->get_name();
    if (name == "count") return cmd_count(o, *sink, err);
    if (name == "table") return cmd_table(o, *sink);
    if (name == "verify") return cmd_verify(o, *sink);
    if (name == "bounds") return cmd_bounds(o, *sink);
    if (name == "conjectures") return cmd_conjectures(o, *sink);
    if (name == "enumerate") return cmd_enumerate(o, *sink);
    if (name == "intersection") return cmd_intersection(o, *sink);
    if (name == "bfile") return cmd_bfile(o, *sink);
  } catch (const CeilingExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCeiling;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lonely::cli
