#include "posetcodes/closed_form.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace posetcodes::closed_form {

namespace {

long long p2(int e) {
  if (e < 0 || e > 62) throw std::logic_error("closed form: exponent out of range");
  return 1LL << e;
}

void check_n(int n) {
  if (n < 1 || n > 60) throw std::invalid_argument("closed form: n out of range");
}

void check_single_a(int n, int a) {
  check_n(n);
  if (a < 1 || a > n) throw std::invalid_argument("closed form: need 1 <= a <= n");
}

void check_single_b(int n, int m, int b) {
  check_n(n);
  if (m < 1 || m >= n) throw std::invalid_argument("closed form: need 1 <= m < n");
  if (b < 1 || b > n - m) throw std::invalid_argument("closed form: need 1 <= b <= n-m");
}

void check_pair_a(int n, int a1, int a2, int a12) {
  check_n(n);
  if (a12 < 0 || a1 <= a12 || a2 <= a12) {
    throw std::invalid_argument(
        "closed form: the two bottom-level ideals must be incomparable "
        "(a1 > a12 and a2 > a12)");
  }
  if (a1 + a2 - a12 > n) {
    throw std::invalid_argument("closed form: |A1 u A2| exceeds the ground set");
  }
}

void check_pair_b(int n, int m, int b1, int b2, int b12) {
  check_n(n);
  if (m < 1) throw std::invalid_argument("closed form: need m >= 1");
  if (b12 < 0 || b1 <= b12 || b2 <= b12) {
    throw std::invalid_argument(
        "closed form: the two top-level parts must be incomparable "
        "(b1 > b12 and b2 > b12)");
  }
  if (b1 + b2 - b12 > n - m) {
    throw std::invalid_argument("closed form: |B1 u B2| exceeds the top level");
  }
}

/// Merge rows by weight, drop empty rows, fold weight-0 mass into the
/// kernel, and deduce the dimension from the remaining mass.
WeightDistribution normalize(const std::vector<TableRow>& rows, int index_bits) {
  std::map<long long, long long> raw;
  for (const TableRow& row : rows) {
    if (row.freq == 0) continue;
    raw[row.weight] += row.freq;
  }
  return WeightDistribution::from_raw_histogram(raw, index_bits);
}

/// 2^{e-1} as it appears in row weights. The e = 0 case only ever occurs in
/// rows whose frequency carries a (2^e - 1) = 0 factor, which normalization
/// drops; any consistent placeholder works there.
long long half_p2(int e) { return e >= 1 ? p2(e - 1) : 0; }

}  // namespace

std::vector<TableRow> table1_rows(int n, int a) {
  check_single_a(n, a);
  return {
      {"0", 0, 1},
      {"2^{n-1}", p2(n - 1), p2(n - a) - 1},
      {"2^{n-1}-2^{|A|-1}", p2(n - 1) - p2(a - 1), p2(n) - p2(n - a)},
  };
}

std::vector<TableRow> table2_rows(int n, int m, int b) {
  check_single_b(n, m, b);
  return {
      {"0", 0, 1},
      {"2^{n-1}", p2(n - 1), p2(n - m - b) - 1},
      {"2^{n-1}-2^{|B|-1}", p2(n - 1) - p2(b - 1), p2(n - m) - p2(n - m - b)},
      {"2^{n-1}+1-2^{m-1}-2^{|B|}", p2(n - 1) + 1 - p2(m - 1) - p2(b), p2(n - 1 - b)},
      {"2^{n-1}+1-2^{m-1}-2^{|B|-1}", p2(n - 1) + 1 - p2(m - 1) - p2(b - 1),
       p2(n - 1) - p2(n - 1 - b)},
      {"2^{n-1}-2^{m-1}", p2(n - 1) - p2(m - 1), p2(n - 1 - b) - p2(n - m - b)},
      {"2^{n-1}-2^{m-1}-2^{|B|-1}", p2(n - 1) - p2(m - 1) - p2(b - 1),
       p2(n - 1) - p2(n - 1 - b) - p2(n - m) + p2(n - m - b)},
  };
}

namespace {

std::vector<TableRow> table3_rows_impl(int n, int a1, int a2, int a12, bool printed) {
  check_pair_a(n, a1, a2, a12);
  const int s1 = a1 - a12, s2 = a2 - a12;
  const long long free = p2(n - (a1 + a2 - a12));
  // The published rows pair the weight carrying 2^{|A_2|-1} with the
  // (2^{|A_1\A_2|}-1) count; the case analysis behind them (and the
  // enumeration oracle) gives the transposed pairing.
  const long long f_a2 = printed ? free * (p2(s1) - 1) : free * (p2(s2) - 1);
  const long long f_a1 = printed ? free * (p2(s2) - 1) : free * (p2(s1) - 1);
  return {
      {"0", 0, 1},
      {"2^{n-1}", p2(n - 1), free - 1},
      {"2^{n-1}-2^{|A2|-1}", p2(n - 1) - p2(a2 - 1), f_a2},
      {"2^{n-1}-2^{|A1|-1}", p2(n - 1) - p2(a1 - 1), f_a1},
      {"2^{n-1}-2^{|A1|-1}-2^{|A2|-1}", p2(n - 1) - p2(a1 - 1) - p2(a2 - 1),
       free * (p2(s1) - 1) * (p2(s2) - 1)},
      {"2^{n-1}-2^{|A1|-1}-2^{|A2|-1}+2^{|A1nA2|-1}",
       p2(n - 1) - p2(a1 - 1) - p2(a2 - 1) + half_p2(a12),
       free * (p2(a12) - 1) * p2(s1 + s2)},
  };
}

std::vector<TableRow> table4_rows_impl(int n, int m, int b1, int b2, int b12,
                                       bool printed) {
  check_pair_b(n, m, b1, b2, b12);
  const int t1 = b1 - b12, t2 = b2 - b12;
  const int beta = b1 + b2 - b12;
  const long long r = p2(n - m - beta);
  const long long vo = p2(n - 1 - beta);
  const long long ve = vo - r;
  // One published count reads (2^{|B_2\B_2|}-1), which is identically zero;
  // the intended factor is (2^{|B_2\B_1|}-1).
  const long long f_even_b2 = printed ? 0 : ve * (p2(t2) - 1);
  return {
      {"0", 0, 1},
      {"2^{n-1}", p2(n - 1), r - 1},
      {"2^{n-1}-2^{|B1|-1}", p2(n - 1) - p2(b1 - 1), r * (p2(t1) - 1)},
      {"2^{n-1}-2^{|B2|-1}", p2(n - 1) - p2(b2 - 1), r * (p2(t2) - 1)},
      {"2^{n-1}-2^{|B1|-1}-2^{|B2|-1}", p2(n - 1) - p2(b1 - 1) - p2(b2 - 1),
       r * (p2(t1) - 1) * (p2(t2) - 1)},
      {"2^{n-1}-2^{|B1|-1}-2^{|B2|-1}+2^{|B1nB2|-1}",
       p2(n - 1) - p2(b1 - 1) - p2(b2 - 1) + half_p2(b12),
       r * (p2(b12) - 1) * p2(t1 + t2)},
      {"2^{n-1}-2^{m-1}+1-2^{|B1|}-2^{|B2|}+2^{|B1nB2|}",
       p2(n - 1) - p2(m - 1) + 1 - p2(b1) - p2(b2) + p2(b12), vo},
      {"2^{n-1}-2^{m-1}+1-2^{|B2|}-2^{|B1|-1}+2^{|B1nB2|}",
       p2(n - 1) - p2(m - 1) + 1 - p2(b2) - p2(b1 - 1) + p2(b12), vo * (p2(t1) - 1)},
      {"2^{n-1}-2^{m-1}+1-2^{|B1|}-2^{|B2|-1}+2^{|B1nB2|}",
       p2(n - 1) - p2(m - 1) + 1 - p2(b1) - p2(b2 - 1) + p2(b12), vo * (p2(t2) - 1)},
      {"2^{n-1}-2^{m-1}+1-2^{|B1|-1}-2^{|B2|-1}+2^{|B1nB2|}",
       p2(n - 1) - p2(m - 1) + 1 - p2(b1 - 1) - p2(b2 - 1) + p2(b12),
       vo * (p2(t1) - 1) * (p2(t2) - 1)},
      {"2^{n-1}-2^{m-1}+1-2^{|B1|-1}-2^{|B2|-1}+2^{|B1nB2|-1}",
       p2(n - 1) - p2(m - 1) + 1 - p2(b1 - 1) - p2(b2 - 1) + half_p2(b12),
       vo * (p2(b12) - 1) * p2(t1 + t2)},
      {"2^{n-1}-2^{m-1}", p2(n - 1) - p2(m - 1), ve},
      {"2^{n-1}-2^{m-1}-2^{|B1|-1}", p2(n - 1) - p2(m - 1) - p2(b1 - 1),
       ve * (p2(t1) - 1)},
      {"2^{n-1}-2^{m-1}-2^{|B2|-1}", p2(n - 1) - p2(m - 1) - p2(b2 - 1), f_even_b2},
      {"2^{n-1}-2^{m-1}-2^{|B1|-1}-2^{|B2|-1}",
       p2(n - 1) - p2(m - 1) - p2(b1 - 1) - p2(b2 - 1),
       ve * (p2(t1) - 1) * (p2(t2) - 1)},
      {"2^{n-1}-2^{m-1}-2^{|B1|-1}-2^{|B2|-1}+2^{|B1nB2|-1}",
       p2(n - 1) - p2(m - 1) - p2(b1 - 1) - p2(b2 - 1) + half_p2(b12),
       ve * (p2(b12) - 1) * p2(t1 + t2)},
  };
}

std::vector<TableRow> table7_rows_impl(int n, int a1, int a2, int a12, bool printed) {
  check_pair_a(n, a1, a2, a12);
  const int s1 = a1 - a12, s2 = a2 - a12;
  const long long free = p2(n - (a1 + a2 - a12));
  // Same transposition as in the bottom-level defining-set case.
  const long long f_a1 = printed ? free * (p2(s1) - 1) : free * (p2(s2) - 1);
  const long long f_a2 = printed ? free * (p2(s2) - 1) : free * (p2(s1) - 1);
  return {
      {"0", 0, 1},
      {"2^{n-1}", p2(n - 1), p2(n) - 1},
      {"2^{|A1|}+2^{|A2|}-2^{|A1nA2|}-1", p2(a1) + p2(a2) - p2(a12) - 1, 1},
      {"2^{n-1}+2^{|A1|}+2^{|A2|}-2^{|A1nA2|}-1",
       p2(n - 1) + p2(a1) + p2(a2) - p2(a12) - 1, free - 1},
      {"2^{n-1}+2^{|A1|}-2^{|A1nA2|}-1", p2(n - 1) + p2(a1) - p2(a12) - 1, f_a1},
      {"2^{n-1}+2^{|A2|}-2^{|A1nA2|}-1", p2(n - 1) + p2(a2) - p2(a12) - 1, f_a2},
      {"2^{n-1}-2^{|A1nA2|}-1", p2(n - 1) - p2(a12) - 1,
       free * (p2(s1) - 1) * (p2(s2) - 1)},
      {"2^{n-1}-1", p2(n - 1) - 1, free * (p2(a12) - 1) * p2(s1 + s2)},
  };
}

std::vector<TableRow> table8_rows_impl(int n, int m, int b1, int b2, int b12,
                                       bool printed) {
  check_pair_b(n, m, b1, b2, b12);
  const int t1 = b1 - b12, t2 = b2 - b12;
  const int beta = b1 + b2 - b12;
  const long long r = p2(n - m - beta);
  const long long vo = p2(n - 1 - beta);
  const long long ve = vo - r;
  // Published deviations, all adjudicated by enumeration:
  //   - the two odd-block single-miss counts are transposed,
  //   - the odd-block double-miss row weight gains spurious
  //     -2^{|B1|-1}-2^{|B2|-1} terms,
  //   - one even-block count reads (2^{|B_2\B_2|}-1) = 0.
  const long long f_odd_b2 = printed ? vo * (p2(t2) - 1) : vo * (p2(t1) - 1);
  const long long f_odd_b1 = printed ? vo * (p2(t1) - 1) : vo * (p2(t2) - 1);
  const long long w_odd_both =
      printed ? p2(n - 1) + p2(b12) - p2(b1 - 1) - p2(b2 - 1) : p2(n - 1) + p2(b12);
  const long long f_even_b1 = printed ? 0 : ve * (p2(t2) - 1);
  return {
      {"0", 0, 1},
      {"2^{n-1}", p2(n - 1), p2(n) - 1 + vo * (p2(b12) - 1) * p2(t1 + t2)},
      {"2^m-2+2^{|B1|}+2^{|B2|}-2^{|B1nB2|}", p2(m) - 2 + p2(b1) + p2(b2) - p2(b12), 1},
      {"2^{n-1}+2^m-2+2^{|B1|}+2^{|B2|}-2^{|B1nB2|}",
       p2(n - 1) + p2(m) - 2 + p2(b1) + p2(b2) - p2(b12), r - 1},
      {"2^{n-1}+2^m-2+2^{|B2|}-2^{|B1nB2|}",
       p2(n - 1) + p2(m) - 2 + p2(b2) - p2(b12), r * (p2(t1) - 1)},
      {"2^{n-1}+2^m-2+2^{|B1|}-2^{|B1nB2|}",
       p2(n - 1) + p2(m) - 2 + p2(b1) - p2(b12), r * (p2(t2) - 1)},
      {"2^{n-1}+2^m-2-2^{|B1nB2|}", p2(n - 1) + p2(m) - 2 - p2(b12),
       r * (p2(t1) - 1) * (p2(t2) - 1)},
      {"2^{n-1}+2^m-2", p2(n - 1) + p2(m) - 2, r * (p2(b12) - 1) * p2(t1 + t2)},
      {"2^{n-1}-2^{|B1|}-2^{|B2|}+2^{|B1nB2|}",
       p2(n - 1) - p2(b1) - p2(b2) + p2(b12), vo},
      {"2^{n-1}-2^{|B2|}+2^{|B1nB2|}", p2(n - 1) - p2(b2) + p2(b12), f_odd_b2},
      {"2^{n-1}-2^{|B1|}+2^{|B1nB2|}", p2(n - 1) - p2(b1) + p2(b12), f_odd_b1},
      {"2^{n-1}+2^{|B1nB2|}", w_odd_both, vo * (p2(t1) - 1) * (p2(t2) - 1)},
      {"2^{n-1}-2+2^{|B1|}+2^{|B2|}-2^{|B1nB2|}",
       p2(n - 1) - 2 + p2(b1) + p2(b2) - p2(b12), ve},
      {"2^{n-1}-2+2^{|B2|}-2^{|B1nB2|}", p2(n - 1) - 2 + p2(b2) - p2(b12),
       ve * (p2(t1) - 1)},
      {"2^{n-1}-2+2^{|B1|}-2^{|B1nB2|}", p2(n - 1) - 2 + p2(b1) - p2(b12), f_even_b1},
      {"2^{n-1}-2-2^{|B1nB2|}", p2(n - 1) - 2 - p2(b12),
       ve * (p2(t1) - 1) * (p2(t2) - 1)},
      {"2^{n-1}-2", p2(n - 1) - 2, ve * (p2(b12) - 1) * p2(t1 + t2)},
  };
}

}  // namespace

std::vector<TableRow> table3_rows(int n, int a1, int a2, int a12) {
  return table3_rows_impl(n, a1, a2, a12, false);
}
std::vector<TableRow> table3_rows_printed(int n, int a1, int a2, int a12) {
  return table3_rows_impl(n, a1, a2, a12, true);
}
std::vector<TableRow> table4_rows(int n, int m, int b1, int b2, int b12) {
  return table4_rows_impl(n, m, b1, b2, b12, false);
}
std::vector<TableRow> table4_rows_printed(int n, int m, int b1, int b2, int b12) {
  return table4_rows_impl(n, m, b1, b2, b12, true);
}

std::vector<TableRow> table5_rows(int n, int a) {
  check_single_a(n, a);
  return {
      {"0", 0, 1},
      {"2^{n-1}", p2(n - 1), p2(n) - 1},
      {"2^{|A|}-1", p2(a) - 1, 1},
      {"2^{n-1}-1+2^{|A|}", p2(n - 1) - 1 + p2(a), p2(n - a) - 1},
      {"2^{n-1}-1", p2(n - 1) - 1, p2(n) - p2(n - a)},
  };
}

std::vector<TableRow> table6_rows(int n, int m, int b) {
  check_single_b(n, m, b);
  return {
      {"0", 0, 1},
      {"2^{n-1}", p2(n - 1), p2(n) - 1 + p2(n - 1) - p2(n - 1 - b)},
      {"2^m+2^{|B|}-2", p2(m) + p2(b) - 2, 1},
      {"2^{n-1}-2+2^m+2^{|B|}", p2(n - 1) - 2 + p2(m) + p2(b), p2(n - m - b) - 1},
      {"2^{n-1}-2+2^m", p2(n - 1) - 2 + p2(m), p2(n - m) - p2(n - m - b)},
      {"2^{n-1}-2^{|B|}", p2(n - 1) - p2(b), p2(n - 1 - b)},
      {"2^{n-1}-2+2^{|B|}", p2(n - 1) - 2 + p2(b), p2(n - 1 - b) - p2(n - m - b)},
      {"2^{n-1}-2", p2(n - 1) - 2,
       p2(n - 1) - p2(n - 1 - b) - p2(n - m) + p2(n - m - b)},
  };
}

std::vector<TableRow> table7_rows(int n, int a1, int a2, int a12) {
  return table7_rows_impl(n, a1, a2, a12, false);
}
std::vector<TableRow> table7_rows_printed(int n, int a1, int a2, int a12) {
  return table7_rows_impl(n, a1, a2, a12, true);
}
std::vector<TableRow> table8_rows(int n, int m, int b1, int b2, int b12) {
  return table8_rows_impl(n, m, b1, b2, b12, false);
}
std::vector<TableRow> table8_rows_printed(int n, int m, int b1, int b2, int b12) {
  return table8_rows_impl(n, m, b1, b2, b12, true);
}

WeightDistribution table1(int n, int a) { return normalize(table1_rows(n, a), n); }
WeightDistribution table2(int n, int m, int b) {
  return normalize(table2_rows(n, m, b), n);
}
WeightDistribution table3(int n, int a1, int a2, int a12) {
  return normalize(table3_rows(n, a1, a2, a12), n);
}
WeightDistribution table4(int n, int m, int b1, int b2, int b12) {
  return normalize(table4_rows(n, m, b1, b2, b12), n);
}
WeightDistribution table5(int n, int a) { return normalize(table5_rows(n, a), n + 1); }
WeightDistribution table6(int n, int m, int b) {
  return normalize(table6_rows(n, m, b), n + 1);
}
WeightDistribution table7(int n, int a1, int a2, int a12) {
  return normalize(table7_rows(n, a1, a2, a12), n + 1);
}
WeightDistribution table8(int n, int m, int b1, int b2, int b12) {
  return normalize(table8_rows(n, m, b1, b2, b12), n + 1);
}

long long table1_length(int n, int a) {
  check_single_a(n, a);
  return p2(n) - p2(a);
}
long long table2_length(int n, int m, int b) {
  check_single_b(n, m, b);
  return p2(n) - p2(m) - p2(b) + 1;
}
long long table3_length(int n, int a1, int a2, int a12) {
  check_pair_a(n, a1, a2, a12);
  return p2(n) - p2(a1) - p2(a2) + p2(a12);
}
long long table4_length(int n, int m, int b1, int b2, int b12) {
  check_pair_b(n, m, b1, b2, b12);
  return p2(n) - p2(m) - p2(b1) - p2(b2) + p2(b12) + 1;
}
long long table3_length_printed(int n, int a1, int a2, int a12) {
  check_pair_a(n, a1, a2, a12);
  return p2(n) - p2(a1) - p2(a2) - p2(a12);
}
long long table4_length_printed(int n, int m, int b1, int b2, int b12) {
  check_pair_b(n, m, b1, b2, b12);
  return p2(n) - p2(b1) - p2(b2) - p2(b12);
}

namespace {

std::vector<Discrepancy> row_discrepancies(int table,
                                           std::map<std::string, long long> params,
                                           const std::vector<TableRow>& derived,
                                           const std::vector<TableRow>& printed) {
  std::vector<Discrepancy> out;
  for (std::size_t i = 0; i < derived.size(); ++i) {
    if (printed[i].weight != derived[i].weight) {
      out.push_back({table, params, "row weight of " + derived[i].weight_expr,
                     printed[i].weight, derived[i].weight});
    } else if (printed[i].freq != derived[i].freq) {
      out.push_back({table, params, "frequency at " + derived[i].weight_expr,
                     printed[i].freq, derived[i].freq});
    }
  }
  return out;
}

}  // namespace

std::vector<Discrepancy> discrepancies_table3(int n, int a1, int a2, int a12) {
  std::map<std::string, long long> params{
      {"n", n}, {"a1", a1}, {"a2", a2}, {"a12", a12}};
  auto out = row_discrepancies(3, params, table3_rows(n, a1, a2, a12),
                               table3_rows_printed(n, a1, a2, a12));
  out.push_back({3, params, "code length", table3_length_printed(n, a1, a2, a12),
                 table3_length(n, a1, a2, a12)});
  return out;
}

std::vector<Discrepancy> discrepancies_table4(int n, int m, int b1, int b2, int b12) {
  std::map<std::string, long long> params{
      {"n", n}, {"m", m}, {"b1", b1}, {"b2", b2}, {"b12", b12}};
  auto out = row_discrepancies(4, params, table4_rows(n, m, b1, b2, b12),
                               table4_rows_printed(n, m, b1, b2, b12));
  out.push_back({4, params, "code length", table4_length_printed(n, m, b1, b2, b12),
                 table4_length(n, m, b1, b2, b12)});
  return out;
}

std::vector<Discrepancy> discrepancies_table7(int n, int a1, int a2, int a12) {
  std::map<std::string, long long> params{
      {"n", n}, {"a1", a1}, {"a2", a2}, {"a12", a12}};
  return row_discrepancies(7, params, table7_rows(n, a1, a2, a12),
                           table7_rows_printed(n, a1, a2, a12));
}

std::vector<Discrepancy> discrepancies_table8(int n, int m, int b1, int b2, int b12) {
  std::map<std::string, long long> params{
      {"n", n}, {"m", m}, {"b1", b1}, {"b2", b2}, {"b12", b12}};
  return row_discrepancies(8, params, table8_rows(n, m, b1, b2, b12),
                           table8_rows_printed(n, m, b1, b2, b12));
}

}  // namespace posetcodes::closed_form
