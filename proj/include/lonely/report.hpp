#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "big_count.hpp"
#include "catalan.hpp"
#include "enumeration.hpp"
#include "error.hpp"

namespace lonely {

/// A nonnegative ratio rounded half-up to two fractional digits, stored as
/// an integer number of hundredths.
class Hundredths {
 public:
  constexpr Hundredths() = default;
  constexpr explicit Hundredths(std::int64_t hundredths) : value_(hundredths) {}

  /// round_half_up(100 * numerator / denominator) / 100, computed exactly.
  static Hundredths ratio(const BigCount& numerator, const BigCount& denominator) {
    if (denominator == 0) throw InvalidArgument("ratio with zero denominator");
    BigCount scaled = (numerator * 200 + denominator) / (denominator * 2);
    return Hundredths(static_cast<std::int64_t>(scaled));
  }

  /// Parses table-style decimals: "3", "0.5", "2.25".
  static Hundredths parse(std::string_view text) {
    auto dot = text.find('.');
    std::string whole(text.substr(0, dot));
    std::string frac = dot == std::string_view::npos ? "" : std::string(text.substr(dot + 1));
    if (whole.empty() || frac.size() > 2) throw InvalidArgument("bad decimal '" + std::string(text) + "'");
    while (frac.size() < 2) frac += '0';
    return Hundredths(std::stoll(whole) * 100 + std::stoll(frac));
  }

  constexpr std::int64_t raw() const { return value_; }

  /// Always two fractional digits: "2.25", "0.50", "4.00".
  std::string str() const {
    std::string frac = std::to_string(value_ % 100);
    if (frac.size() < 2) frac.insert(0, "0");
    return std::to_string(value_ / 100) + "." + frac;
  }

  friend constexpr auto operator<=>(const Hundredths&, const Hundredths&) = default;

 private:
  std::int64_t value_ = 0;
};

/// One row of the sequence table.
struct SequenceRow {
  int n = 0;
  BigCount lonely;
  BigCount marriageable;
  BigCount catalan;
  std::optional<Hundredths> ratio_l;  // L(n) / L(n-1)
  std::optional<Hundredths> ratio_m;  // M(n) / M(n-1)
  std::optional<Hundredths> m_over_l;
  Hundredths m_over_c;
};

namespace detail {

inline std::optional<Hundredths> maybe_ratio(const BigCount& num, const BigCount& den) {
  if (den == 0) return std::nullopt;
  return Hundredths::ratio(num, den);
}

inline void require_coverage(int max_n, const std::vector<Tally>& tallies) {
  if (max_n < 0 || tallies.size() < static_cast<std::size_t>(max_n) + 1) {
    throw InvalidArgument("tallies do not cover 0.." + std::to_string(max_n));
  }
  for (int n = 0; n <= max_n; ++n) {
    if (tallies[static_cast<std::size_t>(n)].n != n) {
      throw InvalidArgument("tally " + std::to_string(n) + " out of order");
    }
  }
}

}  // namespace detail

inline std::vector<SequenceRow> ratio_report(int max_n, const std::vector<Tally>& tallies) {
  detail::require_coverage(max_n, tallies);
  std::vector<SequenceRow> rows;
  for (int n = 0; n <= max_n; ++n) {
    const Tally& t = tallies[static_cast<std::size_t>(n)];
    SequenceRow row;
    row.n = n;
    row.lonely = t.lonely;
    row.marriageable = t.marriageable;
    row.catalan = t.total;
    if (n > 0) {
      const Tally& prev = tallies[static_cast<std::size_t>(n - 1)];
      row.ratio_l = detail::maybe_ratio(t.lonely, prev.lonely);
      row.ratio_m = detail::maybe_ratio(t.marriageable, prev.marriageable);
    }
    row.m_over_l = detail::maybe_ratio(t.marriageable, t.lonely);
    row.m_over_c = Hundredths::ratio(t.marriageable, t.total);
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Quantities behind the five open questions on the growth of L and M:
/// whether M(n) > L(n), the ratios M/L, M/C and L/C, and the consecutive
/// ratios M(n+1)/M(n) and L(n+1)/L(n) (absent on the last row).
struct ConjectureRow {
  int n = 0;
  bool m_exceeds_l = false;
  std::optional<Hundredths> m_over_l;
  Hundredths m_over_c;
  Hundredths l_over_c;
  std::optional<Hundredths> next_ratio_m;
  std::optional<Hundredths> next_ratio_l;
};

inline std::vector<ConjectureRow> conjecture_report(int max_n, const std::vector<Tally>& tallies) {
  detail::require_coverage(max_n, tallies);
  std::vector<ConjectureRow> rows;
  for (int n = 0; n <= max_n; ++n) {
    const Tally& t = tallies[static_cast<std::size_t>(n)];
    ConjectureRow row;
    row.n = n;
    row.m_exceeds_l = t.marriageable > t.lonely;
    row.m_over_l = detail::maybe_ratio(t.marriageable, t.lonely);
    row.m_over_c = Hundredths::ratio(t.marriageable, t.total);
    row.l_over_c = Hundredths::ratio(t.lonely, t.total);
    if (n < max_n) {
      const Tally& next = tallies[static_cast<std::size_t>(n + 1)];
      row.next_ratio_m = detail::maybe_ratio(next.marriageable, t.marriageable);
      row.next_ratio_l = detail::maybe_ratio(next.lonely, t.lonely);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Published reference values, n = 0..14, with ratio cells exactly as printed
// (empty = blank cell).

struct ReferenceRow {
  int n;
  std::uint64_t lonely;
  std::uint64_t marriageable;
  std::uint64_t catalan;
  std::string_view ratio_l;
  std::string_view ratio_m;
  std::string_view m_over_l;
  std::string_view m_over_c;
};

inline constexpr int kReferenceMaxN = 14;

inline constexpr std::array<ReferenceRow, kReferenceMaxN + 1> kReferenceTable{{
    {0, 1, 0, 1, "", "", "0", "0"},
    {1, 1, 0, 1, "1", "", "0", "0"},
    {2, 1, 1, 2, "1", "", "1", "0.5"},
    {3, 4, 1, 5, "4", "1", "0.25", "0.2"},
    {4, 9, 5, 14, "2.25", "5", "0.56", "0.36"},
    {5, 26, 16, 42, "2.89", "3.2", "0.62", "0.38"},
    {6, 77, 55, 132, "2.96", "3.44", "0.71", "0.42"},
    {7, 232, 197, 429, "3.01", "3.58", "0.85", "0.46"},
    {8, 725, 705, 1430, "3.13", "3.58", "0.97", "0.49"},
    {9, 2299, 2563, 4862, "3.17", "3.64", "1.11", "0.53"},
    {10, 7401, 9395, 16796, "3.22", "3.67", "1.27", "0.56"},
    {11, 22118, 36668, 58786, "2.99", "3.90", "1.66", "0.62"},
    {12, 72766, 135246, 208012, "3.29", "3.69", "1.86", "0.65"},
    {13, 235124, 507776, 742900, "3.23", "3.75", "2.16", "0.68"},
    {14, 763783, 1910657, 2674440, "3.25", "3.76", "2.50", "0.71"},
}};

/// Differences between computed rows and the reference table, one message
/// per mismatching cell. Rows past the reference range are only checked for
/// L + M = C.
inline std::vector<std::string> compare_with_reference(const std::vector<SequenceRow>& rows) {
  std::vector<std::string> problems;
  auto cell = [&](int n, const char* column, const std::string& got, const std::string& want) {
    if (got != want) {
      problems.push_back("n=" + std::to_string(n) + " " + column + ": computed " +
                         (got.empty() ? "<blank>" : got) + ", expected " +
                         (want.empty() ? "<blank>" : want));
    }
  };
  auto ratio_cell = [&](int n, const char* column, const std::optional<Hundredths>& got,
                        std::string_view want) {
    std::string got_text = got ? got->str() : "";
    std::string want_text = want.empty() ? "" : Hundredths::parse(want).str();
    cell(n, column, got_text, want_text);
  };
  for (const auto& row : rows) {
    if (row.lonely + row.marriageable != row.catalan) {
      problems.push_back("n=" + std::to_string(row.n) + ": L + M != C");
    }
    if (row.n > kReferenceMaxN) continue;
    const auto& ref = kReferenceTable[static_cast<std::size_t>(row.n)];
    cell(row.n, "L", to_decimal(row.lonely), std::to_string(ref.lonely));
    cell(row.n, "M", to_decimal(row.marriageable), std::to_string(ref.marriageable));
    cell(row.n, "C", to_decimal(row.catalan), std::to_string(ref.catalan));
    ratio_cell(row.n, "L/L-1", row.ratio_l, ref.ratio_l);
    ratio_cell(row.n, "M/M-1", row.ratio_m, ref.ratio_m);
    ratio_cell(row.n, "M/L", row.m_over_l, ref.m_over_l);
    ratio_cell(row.n, "M/C", std::optional<Hundredths>(row.m_over_c), ref.m_over_c);
  }
  return problems;
}

}  // namespace lonely
