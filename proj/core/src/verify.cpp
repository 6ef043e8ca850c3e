#include "posetcodes/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "posetcodes/analysis.hpp"
#include "posetcodes/codebuild.hpp"
#include "posetcodes/genfun.hpp"

namespace posetcodes::verify {

namespace {

using closed_form::Discrepancy;

struct Runner {
  const Options& opt;
  Report report;

  bool enabled(const std::string& tag) const {
    return opt.only.empty() || opt.only == tag;
  }
  void add(const std::string& fixture, const std::string& name, bool pass,
           std::string detail = "") {
    report.checks.push_back({fixture, name, pass, std::move(detail)});
  }
  void note(Discrepancy d) { report.discrepancies.push_back(std::move(d)); }
};

Mask range_mask(int lo, int hi) {
  Mask m = 0;
  for (int e = lo; e <= hi; ++e) m |= singleton(e);
  return m;
}

std::string dist_string(const WeightDistribution& d) {
  std::ostringstream os;
  os << "[k=" << d.dimension();
  for (auto [w, c] : d.entries()) os << " " << w << ":" << c;
  os << "]";
  return os.str();
}

bool same_code(const CodeReport& a, const CodeReport& b) {
  return a.length == b.length && a.dimension == b.dimension &&
         a.distribution == b.distribution;
}

long long entry(const WeightDistribution& d, long long w) {
  auto it = d.entries().find(w);
  return it == d.entries().end() ? 0 : it->second;
}

CodeSpec single_ideal(int m, int n, Mask ideal, CodeKind kind) {
  Poset p = make_hierarchical(m, n);
  return CodeSpec{p, IdealFamily(p, {ideal}), kind};
}

CodeSpec pair_ideal(int m, int n, Mask i1, Mask i2, CodeKind kind) {
  Poset p = make_hierarchical(m, n);
  return CodeSpec{p, IdealFamily(p, {i1, i2}), kind};
}

// Witness realizations of the size parameters. variant 1 embeds the sets
// differently (and bumps m where possible) to exercise the claim that the
// distributions depend on the sizes only.
std::optional<CodeSpec> witness_single_a(int n, int a, CodeKind kind, int variant) {
  if (kind == CodeKind::DefiningSet && a == n) return std::nullopt;  // empty D
  if (variant == 0) return single_ideal(a, n, range_mask(1, a), kind);
  int m = std::min(n, a + 1);
  Mask ideal = range_mask(m - a + 1, m);
  if (m == a) return std::nullopt;  // same realization
  return single_ideal(m, n, ideal, kind);
}

std::optional<CodeSpec> witness_single_b(int n, int m, int b, CodeKind kind,
                                         int variant) {
  Mask lower = range_mask(1, m);
  if (variant == 0) return single_ideal(m, n, lower | range_mask(m + 1, m + b), kind);
  if (b == n - m) return std::nullopt;
  return single_ideal(m, n, lower | range_mask(n - b + 1, n), kind);
}

std::optional<CodeSpec> witness_pair_a(int n, int a1, int a2, int a12, CodeKind kind,
                                       int variant) {
  int un = a1 + a2 - a12;
  int shift = variant == 0 ? 0 : 1;
  int m = un + shift;
  if (m > n) return std::nullopt;
  Mask first = range_mask(1 + shift, a1 + shift);
  Mask second = range_mask(1 + shift, a12 + shift) |
                range_mask(a1 + 1 + shift, un + shift);
  return pair_ideal(m, n, first, second, kind);
}

std::optional<CodeSpec> witness_pair_b(int n, int m, int b1, int b2, int b12,
                                       CodeKind kind, int variant) {
  int beta = b1 + b2 - b12;
  int shift = variant == 0 ? 0 : 1;
  if (beta + shift > n - m) return std::nullopt;
  Mask lower = range_mask(1, m);
  int base = m + shift;
  Mask first = range_mask(base + 1, base + b1);
  Mask second = range_mask(base + 1, base + b12) |
                range_mask(base + b1 + 1, base + b1 + (b2 - b12));
  return pair_ideal(m, n, lower | first, lower | second, kind);
}

// ---------------------------------------------------------------------------
// Worked reference examples.
// ---------------------------------------------------------------------------

void run_ex22(Runner& r) {
  Poset p = Poset::from_covers(4, {{1, 2}, {3, 4}});
  r.add("ex22", "closure of {2} is {1,2}", p.ideal_closure(singleton(2)) == 0b0011u);
  r.add("ex22", "ideals inside <{2}>",
        p.down_ideals(0b0011) == std::vector<Mask>({0, 0b0001, 0b0011}));
  IdealFamily two(p, {0b0011, 0b1100});
  r.add("ex22", "collection of {{1,2},{3,4}}",
        family_downsets(p, two) == std::vector<Mask>({0, 1, 3, 4, 12}));
  IdealFamily three(p, {0b0011, 0b1101});
  std::vector<Mask> got = family_downsets(p, three);
  r.add("ex22", "collection of {{1,2},{1,3,4}}",
        got == std::vector<Mask>({0, 1, 3, 4, 5, 12, 13}));
  r.note({0, {{"n", 4}}, "reference collection for {{1,2},{1,3,4}} omits {1,3}", 6,
          static_cast<long long>(got.size())});
}

void run_poset_figure(Runner& r, const std::string& tag, const Poset& p, Mask i1,
                      Mask i2, const std::vector<Mask>& col1,
                      const std::vector<Mask>& col2,
                      const std::vector<Mask>& family_col) {
  r.add(tag, "first collection", p.down_ideals(i1) == col1);
  r.add(tag, "second collection", p.down_ideals(i2) == col2);
  IdealFamily fam(p, {i1, i2});
  std::vector<Mask> ds = family_downsets(p, fam);
  r.add(tag, "family collection", ds == family_col);
  FamilyHEvaluator ev(p, fam);
  bool all_match = true;
  for (Mask u = 0; u < (Mask{1} << p.size()); ++u) {
    if (ev.eval(u) != eval_H_direct(ds, u)) all_match = false;
  }
  r.add(tag, "inclusion-exclusion matches direct evaluation everywhere", all_match);
}

void run_ex32(Runner& r) {
  run_poset_figure(r, "ex32", Poset::from_covers(4, {{2, 1}, {4, 3}}), 0b0011, 0b1100,
                   {0, 2, 3}, {0, 8, 12}, {0, 2, 3, 8, 12});
}

void run_ex33(Runner& r) {
  run_poset_figure(r, "ex33", Poset::from_covers(4, {{2, 1}, {1, 3}, {1, 4}}), 0b0111,
                   0b1011, {0, 2, 3, 7}, {0, 2, 3, 11}, {0, 2, 3, 7, 11});
}

void run_ex43(Runner& r) {
  Poset p = make_hierarchical(2, 4);
  HierarchicalShape shape{2, 4};
  const std::vector<std::pair<Mask, std::vector<Mask>>> cases = {
      {0b0011, {0, 1, 2, 3}},
      {0b0111, {0, 1, 2, 3, 7}},
      {0b1111, {0, 1, 2, 3, 7, 11, 15}},
  };
  for (auto& [ideal, want] : cases) {
    std::vector<Mask> col = p.down_ideals(ideal);
    r.add("ex43", "collection of " + mask_to_string(ideal), col == want);
    auto [a, b] = decompose_hierarchical_ideal(shape, ideal);
    bool all_match = true;
    for (Mask u = 0; u < 16; ++u) {
      if (eval_H_hier_ideal(shape, a, b, u) != eval_H_direct(col, u)) all_match = false;
    }
    r.add("ex43", "closed form matches direct for " + mask_to_string(ideal), all_match);
  }
}

void run_ex65(Runner& r) {
  Poset p = make_hierarchical(2, 5);
  Mask ideal = p.ideal_closure(singleton(1) | singleton(3) | singleton(4));
  r.add("ex65", "closure of {1,3,4}", ideal == 0b01111u);
  CodeSpec spec{p, IdealFamily(p, {ideal}), CodeKind::DefiningSet};
  CodeReport oracle = oracle_code(spec);
  r.add("ex65", "parameters [25, 5, 11]",
        oracle.length == 25 && oracle.dimension == 5 && oracle.w_min == 11,
        dist_string(oracle.distribution));
  r.add("ex65", "enumerator",
        weight_enumerator_string(oracle) == "1+4z^11+6z^12+12z^13+8z^14+z^16",
        weight_enumerator_string(oracle));
  r.add("ex65", "analytic path agrees", same_code(analytic_code(spec), oracle));
  r.add("ex65", "closed form agrees",
        closed_form::table2(5, 2, 2) == oracle.distribution &&
            closed_form::table2_length(5, 2, 2) == oracle.length);
  Certificate cert = certify(oracle, spec);
  r.add("ex65", "not a Griesmer code and not bound-tight at d+1",
        !cert.is_griesmer && !cert.griesmer_distance_optimal &&
            cert.griesmer_sum_at_d == 23);
}

void run_ex66(Runner& r) {
  Poset p = make_hierarchical(2, 5);
  Mask ideal = p.ideal_closure(0b11101);
  CodeSpec spec{p, IdealFamily(p, {ideal}), CodeKind::BooleanFunction};
  CodeReport oracle = oracle_code(spec);
  r.add("ex66", "parameters [31, 6, 8] with w_max 22",
        oracle.length == 31 && oracle.dimension == 6 && oracle.w_min == 8 &&
            oracle.w_max == 22,
        dist_string(oracle.distribution));
  const auto& d = oracle.distribution;
  r.add("ex66", "undisputed coefficients",
        entry(d, 8) == 2 && entry(d, 10) == 1 && entry(d, 16) == 45 && entry(d, 22) == 1);
  r.add("ex66", "enumerated A_14 and A_18", entry(d, 14) == 7 && entry(d, 18) == 7);
  r.note({6, {{"n", 5}, {"m", 2}, {"b", 3}}, "reference enumerator coefficient A_14",
          11, entry(d, 14)});
  r.note({6, {{"n", 5}, {"m", 2}, {"b", 3}}, "reference enumerator coefficient A_18",
          3, entry(d, 18)});
  r.add("ex66", "analytic path agrees", same_code(analytic_code(spec), oracle));
  r.add("ex66", "closed form agrees", closed_form::table6(5, 2, 3) == d);
  Certificate cert = certify(oracle, spec);
  r.add("ex66", "ratio 8/22 fails the sufficient condition",
        cert.w_min == 8 && cert.w_max == 22 && !cert.ab_sufficient);
  // The reference text calls this code minimal; enumeration finds a
  // half-weight covering pair, so it is not.
  r.add("ex66", "enumerated minimality", !cert.minimal_exhaustive && cert.witness.has_value());
  r.note({6, {{"n", 5}, {"m", 2}, {"b", 3}},
          "minimality claim (enumeration finds a weight-16 codeword covering a "
          "weight-8 codeword)",
          1, 0});
}

// ---------------------------------------------------------------------------
// Exhaustive identity sweeps.
// ---------------------------------------------------------------------------

void run_thm31(Runner& r, std::mt19937_64& rng, int samples) {
  bool ok = true;
  std::string detail;
  long long families_checked = 0;
  for (int sample = 0; sample < samples && ok; ++sample) {
    int n = 1 + static_cast<int>(rng() % 5);
    Poset p = random_poset(rng, n);
    std::vector<Mask> ideals = p.all_ideals();
    std::erase(ideals, Mask{0});
    const std::size_t count = ideals.size();
    std::vector<std::vector<Mask>> families;
    for (std::size_t i = 0; i < count; ++i) {
      families.push_back({ideals[i]});
      for (std::size_t j = i + 1; j < count; ++j) {
        families.push_back({ideals[i], ideals[j]});
        for (std::size_t k = j + 1; k < count; ++k) {
          families.push_back({ideals[i], ideals[j], ideals[k]});
        }
      }
    }
    for (const auto& members : families) {
      IdealFamily fam(p, members);
      FamilyHEvaluator ev(p, fam);
      std::vector<Mask> ds = family_downsets(p, fam);
      if (ev.collection_size() != static_cast<long long>(ds.size())) {
        ok = false;
        detail = "collection size mismatch";
        break;
      }
      for (Mask u = 0; u < (Mask{1} << n); ++u) {
        if (ev.eval(u) != eval_H_direct(ds, u)) {
          ok = false;
          detail = "value mismatch at u=" + mask_to_string(u);
          break;
        }
      }
      ++families_checked;
      if (!ok) break;
    }
  }
  r.add("thm31", "inclusion-exclusion equals direct evaluation on random posets (" +
                     std::to_string(families_checked) + " families)",
        ok, detail);
}

void run_lem42(Runner& r, int n_max) {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= n_max && ok; ++n) {
    for (int m = 1; m <= n && ok; ++m) {
      Poset p = make_hierarchical(m, n);
      HierarchicalShape shape{m, n};
      for (Mask ideal : p.all_ideals()) {
        auto [a, b] = decompose_hierarchical_ideal(shape, ideal);
        std::vector<Mask> col = p.down_ideals(ideal);
        long long want_size = (b == 0) ? (1LL << popcount(a))
                                       : (1LL << m) + (1LL << popcount(b)) - 1;
        if (static_cast<long long>(col.size()) != want_size) {
          ok = false;
          detail = "collection size off at m=" + std::to_string(m) +
                   " n=" + std::to_string(n) + " I=" + mask_to_string(ideal);
          break;
        }
        for (Mask u = 0; u < (Mask{1} << n); ++u) {
          if (eval_H_hier_ideal(shape, a, b, u) != eval_H_direct(col, u)) {
            ok = false;
            detail = "value off at m=" + std::to_string(m) + " n=" + std::to_string(n) +
                     " I=" + mask_to_string(ideal) + " u=" + mask_to_string(u);
            break;
          }
        }
        if (!ok) break;
      }
    }
  }
  r.add("lem42", "two-level closed forms equal direct evaluation for n <= " +
                     std::to_string(n_max),
        ok, detail);
}

void run_walsh(Runner& r, std::mt19937_64& rng) {
  bool ok = true;
  std::string detail;
  auto check_family = [&](const Poset& p, const IdealFamily& fam) {
    int n = p.size();
    FamilyHEvaluator ev(p, fam);
    std::vector<Mask> support = family_downsets(p, fam);
    std::erase(support, Mask{0});
    for (Mask u = 0; u < (Mask{1} << n) && ok; ++u) {
      long long lhs = walsh_transform(support, u, n);
      long long rhs = (u == 0 ? (1LL << n) : 0) + 2 - 2 * ev.eval(u);
      if (lhs != rhs) {
        ok = false;
        detail = "walsh identity off at n=" + std::to_string(n) +
                 " u=" + mask_to_string(u);
      }
    }
  };
  for (int n = 1; n <= 6 && ok; ++n) {
    for (int m = 1; m <= n && ok; ++m) {
      Poset p = make_hierarchical(m, n);
      std::vector<Mask> ideals = p.all_ideals();
      std::erase(ideals, Mask{0});
      for (Mask ideal : ideals) {
        check_family(p, IdealFamily(p, {ideal}));
        if (!ok) break;
      }
      for (std::size_t i = 0; i + 1 < ideals.size() && ok; i += 3) {
        check_family(p, IdealFamily(p, {ideals[i], ideals[i + 1]}));
      }
    }
  }
  for (int sample = 0; sample < 20 && ok; ++sample) {
    int n = 2 + static_cast<int>(rng() % 4);
    Poset p = random_poset(rng, n);
    std::vector<Mask> ideals = p.all_ideals();
    std::erase(ideals, Mask{0});
    if (ideals.size() < 2) continue;
    check_family(p, IdealFamily(p, {ideals[rng() % ideals.size()],
                                    ideals[rng() % ideals.size()]}));
  }
  r.add("walsh", "transform identity against the family generating function", ok, detail);
}

// ---------------------------------------------------------------------------
// Closed-form tables against the enumeration oracle.
// ---------------------------------------------------------------------------

struct SweepStats {
  int compared = 0;
  bool ok = true;
  std::string detail;
};

void compare_case(SweepStats& st, const std::optional<CodeSpec>& spec,
                  const WeightDistribution& table, long long table_length,
                  const std::string& what) {
  if (!spec || !st.ok) return;
  CodeReport oracle = oracle_code(*spec);
  CodeReport analytic = analytic_code(*spec);
  if (!same_code(oracle, analytic)) {
    st.ok = false;
    st.detail = what + ": analytic path disagrees with oracle";
    return;
  }
  if (!(oracle.distribution == table) || oracle.length != table_length) {
    st.ok = false;
    st.detail = what + ": table " + dist_string(table) + " oracle " +
                dist_string(oracle.distribution);
    return;
  }
  ++st.compared;
}

void run_tables(Runner& r, int n_max) {
  using namespace closed_form;
  SweepStats st;
  for (int n = 2; n <= n_max; ++n) {
    for (int a = 1; a <= n; ++a) {
      for (int variant = 0; variant < 2; ++variant) {
        compare_case(st, witness_single_a(n, a, CodeKind::DefiningSet, variant),
                     table1(n, a), table1_length(n, a),
                     "table1(" + std::to_string(n) + "," + std::to_string(a) + ")");
        compare_case(st, witness_single_a(n, a, CodeKind::BooleanFunction, variant),
                     table5(n, a), (1LL << n) - 1,
                     "table5(" + std::to_string(n) + "," + std::to_string(a) + ")");
      }
    }
    for (int m = 1; m < n; ++m) {
      for (int b = 1; b <= n - m; ++b) {
        std::string suffix = "(" + std::to_string(n) + "," + std::to_string(m) + "," +
                             std::to_string(b) + ")";
        for (int variant = 0; variant < 2; ++variant) {
          compare_case(st, witness_single_b(n, m, b, CodeKind::DefiningSet, variant),
                       table2(n, m, b), table2_length(n, m, b), "table2" + suffix);
          compare_case(st, witness_single_b(n, m, b, CodeKind::BooleanFunction, variant),
                       table6(n, m, b), (1LL << n) - 1, "table6" + suffix);
        }
      }
    }
    for (int a1 = 1; a1 <= n; ++a1) {
      for (int a2 = 1; a2 <= n; ++a2) {
        for (int a12 = 0; a12 < std::min(a1, a2); ++a12) {
          if (a1 + a2 - a12 > n) continue;
          std::string suffix = "(" + std::to_string(n) + "," + std::to_string(a1) +
                               "," + std::to_string(a2) + "," + std::to_string(a12) +
                               ")";
          for (int variant = 0; variant < 2; ++variant) {
            compare_case(st, witness_pair_a(n, a1, a2, a12, CodeKind::DefiningSet, variant),
                         table3(n, a1, a2, a12), table3_length(n, a1, a2, a12),
                         "table3" + suffix);
            compare_case(st,
                         witness_pair_a(n, a1, a2, a12, CodeKind::BooleanFunction, variant),
                         table7(n, a1, a2, a12), (1LL << n) - 1, "table7" + suffix);
          }
        }
      }
    }
    for (int m = 1; m <= n - 2; ++m) {
      for (int b1 = 1; b1 <= n - m; ++b1) {
        for (int b2 = 1; b2 <= n - m; ++b2) {
          for (int b12 = 0; b12 < std::min(b1, b2); ++b12) {
            if (b1 + b2 - b12 > n - m) continue;
            std::string suffix = "(" + std::to_string(n) + "," + std::to_string(m) +
                                 "," + std::to_string(b1) + "," + std::to_string(b2) +
                                 "," + std::to_string(b12) + ")";
            for (int variant = 0; variant < 2; ++variant) {
              compare_case(st,
                           witness_pair_b(n, m, b1, b2, b12, CodeKind::DefiningSet, variant),
                           table4(n, m, b1, b2, b12), table4_length(n, m, b1, b2, b12),
                           "table4" + suffix);
              compare_case(
                  st, witness_pair_b(n, m, b1, b2, b12, CodeKind::BooleanFunction, variant),
                  table8(n, m, b1, b2, b12), (1LL << n) - 1, "table8" + suffix);
            }
          }
        }
      }
    }
  }
  r.add("tables",
        "normalized tables match the oracle on " + std::to_string(st.compared) +
            " witness codes (n <= " + std::to_string(n_max) + ")",
        st.ok, st.detail);
  for (const Discrepancy& d : discrepancies_table3(5, 2, 1, 0)) r.note(d);
  for (const Discrepancy& d : discrepancies_table4(5, 2, 1, 1, 0)) r.note(d);
  for (const Discrepancy& d : discrepancies_table7(5, 2, 1, 0)) r.note(d);
  for (const Discrepancy& d : discrepancies_table8(6, 2, 2, 1, 0)) r.note(d);
}

// ---------------------------------------------------------------------------
// Classifier sweeps.
// ---------------------------------------------------------------------------

void run_thm61(Runner& r, int n_max) {
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= n_max && ok; ++n) {
    for (int m = 1; m < n && ok; ++m) {
      for (int b = 1; b <= n - m && ok; ++b) {
        CodeSpec spec =
            single_ideal(m, n, range_mask(1, m) | range_mask(m + 1, m + b),
                         CodeKind::DefiningSet);
        std::vector<BitVec> words = oracle_codewords(spec);
        CodeReport rep = oracle_code(spec);
        Certificate cert = certify(rep, words);
        Thm61Prediction pred = classify_thm61(m, n, b);
        std::map<std::string, long long> params{{"m", m}, {"n", n}, {"b", b}};
        if (pred.griesmer && !cert.is_griesmer) {
          ok = false;
          detail = "Griesmer prediction failed at (" + std::to_string(m) + "," +
                   std::to_string(n) + "," + std::to_string(b) + ")";
          break;
        }
        const bool anomaly = (m == 1 && b == n - 1);
        if (anomaly) {
          // The claimed exclusion realizes the one-weight
          // [2^{n-1}-1, n-1, 2^{n-2}] code, which is minimal.
          if (!cert.minimal_exhaustive) {
            ok = false;
            detail = "expected the (1,n-1) code to be minimal";
            break;
          }
          r.note({0, params,
                  "non-minimality claim at (m,|B|)=(1,n-1): enumerated code is the "
                  "one-weight [2^{n-1}-1,n-1,2^{n-2}] code, which is minimal",
                  0, 1});
          continue;
        }
        if (cert.minimal_exhaustive != pred.minimal) {
          ok = false;
          detail = "minimality mismatch at (" + std::to_string(m) + "," +
                   std::to_string(n) + "," + std::to_string(b) + ")";
          break;
        }
        if (!pred.minimal) {
          if (!cert.witness) {
            ok = false;
            detail = "missing witness";
            break;
          }
          long long wa = words[cert.witness->first].weight();
          long long wb = words[cert.witness->second].weight();
          long long w1 = 1LL << (n - 1);
          long long w3 = w1 + 1 - (1LL << (m - 1)) - (1LL << b);
          long long w5 = w1 - (1LL << (m - 1));
          bool matched = false;
          if (m == 1 && b == n - 2 && wa == w1 && wb == w3) matched = true;
          if (m == 2 && b == n - 2 && wa == w5 && wb == w3) matched = true;
          if (m == n - 1 && b == 1 && wa == w1 && wb == w5) matched = true;
          if (!matched) {
            if (m == n - 1 && b == 1 && !(m == 2 && b == n - 2)) {
              // Weight 2^{n-1} exceeds the code length 2^{n-1}-1, so the
              // claimed heavy half of the pair cannot exist; the enumerated
              // witness starts from weight 2^{n-1}-1 instead.
              r.note({0, params,
                      "witness weight 2^{n-1} claimed for (m,|B|)=(n-1,1) "
                      "exceeds the code length; enumerated witness uses",
                      w1, wa});
            } else {
              ok = false;
              detail = "witness identity failed at (" + std::to_string(m) + "," +
                       std::to_string(n) + "," + std::to_string(b) + "): got (" +
                       std::to_string(wa) + "," + std::to_string(wb) + ")";
              break;
            }
          }
        }
      }
    }
  }
  r.add("thm61", "single-ideal classifier against enumeration (n <= " +
                     std::to_string(n_max) + ")",
        ok, detail);
}

void run_thm62(Runner& r, int n_max) {
  bool ok = true;
  std::string detail;
  for (int n = 4; n <= n_max && ok; ++n) {
    for (int m = 2; m <= n - 2 && ok; ++m) {
      Thm62Prediction pred = classify_thm62(m, n);
      Mask lower = range_mask(1, m);
      CodeSpec spec = pair_ideal(m, n, lower | singleton(m + 1), lower | singleton(m + 2),
                                 CodeKind::DefiningSet);
      CodeReport rep = oracle_code(spec);
      Certificate cert = certify(rep, spec);
      if (rep.length != pred.length || rep.dimension != n || rep.w_min != pred.d ||
          cert.griesmer_distance_optimal != pred.distance_optimal ||
          cert.minimal_exhaustive != pred.minimal) {
        ok = false;
        detail = "(" + std::to_string(m) + "," + std::to_string(n) + "): got [" +
                 std::to_string(rep.length) + "," + std::to_string(rep.dimension) +
                 "," + std::to_string(rep.w_min) + "]";
      }
    }
  }
  r.add("thm62", "pairs of singleton top parts: distance-optimal and minimal", ok,
        detail);
}

void run_thm63(Runner& r, int n_max) {
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= n_max && ok; ++n) {
    for (int m = 1; m < n && ok; ++m) {
      for (int b = 1; b <= n - m && ok; ++b) {
        Thm63Prediction pred = classify_thm63(m, n, b);
        if (!pred.almost_optimal && !pred.ab_violating_minimal) continue;
        CodeSpec spec =
            single_ideal(m, n, range_mask(1, m) | range_mask(m + 1, m + b),
                         CodeKind::BooleanFunction);
        CodeReport rep = oracle_code(spec);
        Certificate cert = certify(rep, spec);
        std::map<std::string, long long> params{{"m", m}, {"n", n}, {"b", b}};
        if (pred.almost_optimal) {
          if (rep.length != (1LL << n) - 1 || rep.dimension != n + 1 ||
              rep.w_min != (1LL << (n - 1)) - 2 || !cert.griesmer_almost_optimal) {
            ok = false;
            detail = "almost-optimal case failed at (" + std::to_string(m) + "," +
                     std::to_string(n) + ")";
          }
          continue;
        }
        const bool anomaly = (m == 2 && b == n - 2);
        if (anomaly) {
          // Two weight-(2^{n-1}-2^b) codewords sum against a full-weight
          // linear-form codeword; the claimed minimality fails.
          if (cert.minimal_exhaustive) {
            ok = false;
            detail = "expected the (2,n-2) function code to be non-minimal";
          } else {
            r.note({0, params,
                    "minimality claim for the function code at (m,|B|)=(2,n-2): "
                    "enumeration finds a covering pair",
                    1, 0});
          }
          continue;
        }
        if (!cert.minimal_exhaustive || cert.ab_sufficient) {
          ok = false;
          detail = "minimal-not-AB case failed at (" + std::to_string(m) + "," +
                   std::to_string(n) + "," + std::to_string(b) + ")";
        }
      }
    }
  }
  r.add("thm63", "function-code classifier against enumeration", ok, detail);
}

void run_thm64(Runner& r, int n_max) {
  bool ok = true;
  std::string detail;
  for (int n = 3; n <= n_max && ok; ++n) {
    for (int m = 1; m < n - 1 && ok; ++m) {
      for (int b1 = 1; b1 < n - m && ok; ++b1) {
        int b2 = n - m - b1;
        if (b2 < 1 || std::max(b1, b2) > n - 2) continue;
        Thm64Prediction pred = classify_thm64(m, n, b1, b2);
        Mask lower = range_mask(1, m);
        CodeSpec spec = pair_ideal(m, n, lower | range_mask(m + 1, m + b1),
                                   lower | range_mask(m + b1 + 1, n),
                                   CodeKind::BooleanFunction);
        CodeReport rep = oracle_code(spec);
        Certificate cert = certify(rep, spec);
        std::map<std::string, long long> params{
            {"m", m}, {"n", n}, {"b1", b1}, {"b2", b2}};
        const bool d_breaks =
            (1LL << b1) + (1LL << b2) > (1LL << (n - 2)) - (1LL << (m - 1)) + 2;
        if (rep.w_min != pred.d) {
          if (d_breaks) {
            r.note({0, params, "minimum-distance formula 2^m-3+2^{b1}+2^{b2}",
                    pred.d, rep.w_min});
          } else {
            ok = false;
            detail = "unexpected distance at (" + std::to_string(m) + "," +
                     std::to_string(n) + "," + std::to_string(b1) + "," +
                     std::to_string(b2) + ")";
            break;
          }
        } else if (d_breaks) {
          ok = false;
          detail = "distance anomaly predicate misfired";
          break;
        }
        const bool minimal_breaks = (m == 1);
        if (cert.minimal_exhaustive == minimal_breaks) {
          ok = false;
          detail = "minimality mismatch at (" + std::to_string(m) + "," +
                   std::to_string(n) + "," + std::to_string(b1) + "," +
                   std::to_string(b2) + ")";
          break;
        }
        if (minimal_breaks) {
          // Every nonzero ideal contains element 1 when m = 1, so the
          // function codeword is covered by the first linear form.
          r.note({0, params,
                  "minimality claim for disjoint top parts with m=1: the function "
                  "codeword is covered by a linear-form codeword",
                  1, 0});
        } else if (cert.ab_sufficient) {
          ok = false;
          detail = "expected the sufficient condition to fail";
          break;
        }
      }
    }
  }
  r.add("thm64", "disjoint-top-part classifier against enumeration", ok, detail);
}

// ---------------------------------------------------------------------------
// Structural properties over a moderate sweep.
// ---------------------------------------------------------------------------

void run_props(Runner& r, std::mt19937_64& rng, int n_max) {
  bool ok = true;
  std::string detail;
  int codes = 0;
  for (int n = 2; n <= n_max && ok; ++n) {
    for (int m = 1; m <= n && ok; ++m) {
      Poset p = make_hierarchical(m, n);
      std::vector<Mask> ideals = p.all_ideals();
      std::erase(ideals, Mask{0});
      for (std::size_t i = 0; i < ideals.size() && ok; i += 2) {
        for (int kind_index = 0; kind_index < 2 && ok; ++kind_index) {
          CodeKind kind =
              kind_index == 0 ? CodeKind::DefiningSet : CodeKind::BooleanFunction;
          IdealFamily fam(p, {ideals[i]});
          if (kind == CodeKind::DefiningSet &&
              family_downsets(p, fam).size() == (std::size_t{1} << n)) {
            continue;
          }
          CodeSpec spec{p, fam, kind};
          std::vector<BitVec> words = oracle_codewords(spec);
          CodeReport rep = oracle_code(spec);
          Certificate cert = certify(rep, words);
          ++codes;
          if (rep.distribution.mass() != (1LL << rep.dimension) ||
              entry(rep.distribution, 0) != 1) {
            ok = false;
            detail = "mass/zero-row failure";
            break;
          }
          if (rep.length < cert.griesmer_sum_at_d) {
            ok = false;
            detail = "Griesmer bound violated";
            break;
          }
          if (cert.ab_sufficient && !cert.minimal_exhaustive) {
            ok = false;
            detail = "sufficient condition outran the exhaustive check";
            break;
          }
          for (int trial = 0; trial < 8; ++trial) {
            const BitVec& a = words[rng() % words.size()];
            const BitVec& b = words[rng() % words.size()];
            if (!std::binary_search(words.begin(), words.end(), a ^ b)) {
              ok = false;
              detail = "codeword set not closed under xor";
              break;
            }
          }
        }
      }
    }
  }
  r.add("props",
        "mass, Griesmer bound, sufficiency implication and linearity on " +
            std::to_string(codes) + " codes",
        ok, detail);
}

}  // namespace

Poset random_poset(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng() % 3 == 0) covers.emplace_back(perm[i], perm[j]);
    }
  }
  return Poset::from_covers(n, covers);
}

bool Report::all_pass(bool strict) const {
  for (const Check& check : checks) {
    if (!check.pass) return false;
  }
  if (strict && !discrepancies.empty()) return false;
  return true;
}

Report run(const Options& options) {
  Runner runner{options, {}};
  std::mt19937_64 rng(options.seed);
  if (runner.enabled("ex22")) run_ex22(runner);
  if (runner.enabled("ex32")) run_ex32(runner);
  if (runner.enabled("ex33")) run_ex33(runner);
  if (runner.enabled("ex43")) run_ex43(runner);
  if (runner.enabled("ex65")) run_ex65(runner);
  if (runner.enabled("ex66")) run_ex66(runner);
  if (runner.enabled("thm31")) run_thm31(runner, rng, options.random_poset_samples);
  if (runner.enabled("lem42")) run_lem42(runner, options.table_sweep_n_max);
  if (runner.enabled("walsh")) run_walsh(runner, rng);
  if (runner.enabled("tables")) run_tables(runner, options.table_sweep_n_max);
  if (runner.enabled("thm61")) run_thm61(runner, options.table_sweep_n_max);
  if (runner.enabled("thm62")) run_thm62(runner, options.table_sweep_n_max);
  if (runner.enabled("thm63")) run_thm63(runner, options.table_sweep_n_max);
  if (runner.enabled("thm64")) run_thm64(runner, options.table_sweep_n_max);
  if (runner.enabled("props")) run_props(runner, rng, 6);
  return std::move(runner.report);
}

}  // namespace posetcodes::verify
