#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "posetcodes/analysis.hpp"
#include "posetcodes/codebuild.hpp"

using namespace posetcodes;

namespace {

Mask m_of(std::initializer_list<int> elements) {
  Mask m = 0;
  for (int e : elements) m |= singleton(e);
  return m;
}

CodeSpec hier_spec(int m, int n, std::vector<Mask> ideals, CodeKind kind) {
  Poset p = make_hierarchical(m, n);
  return CodeSpec{p, IdealFamily(p, std::move(ideals)), kind};
}

/// Independent minimality check straight from the covering definition:
/// bit-by-bit support containment between distinct nonzero codewords.
bool minimal_by_cover(const std::vector<BitVec>& words) {
  for (const BitVec& a : words) {
    if (a.weight() == 0) continue;
    for (const BitVec& b : words) {
      if (b.weight() == 0 || a == b) continue;
      bool contained = true;
      for (std::size_t i = 0; i < a.size() && contained; ++i) {
        if (b.get(i) && !a.get(i)) contained = false;
      }
      if (contained) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("griesmer sums") {
  CHECK(griesmer_sum(5, 11) == 23);
  CHECK(griesmer_sum(3, 4) == 7);
  CHECK(griesmer_sum(1, 9) == 9);
  CHECK(griesmer_sum(5, 12) == 24);
  CHECK_THROWS_AS(griesmer_sum(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(griesmer_sum(3, 0), std::invalid_argument);
}

TEST_CASE("certification of the [25,5,11] code") {
  CodeSpec spec = hier_spec(2, 5, {m_of({1, 2, 3, 4})}, CodeKind::DefiningSet);
  CodeReport report = oracle_code(spec);
  Certificate cert = certify(report, spec);
  CHECK(cert.griesmer_sum_at_d == 23);
  CHECK_FALSE(cert.is_griesmer);
  CHECK_FALSE(cert.griesmer_distance_optimal);  // sum at d+1 is 24 <= 25
  CHECK(cert.ab_sufficient);                    // 22 > 16
  CHECK(cert.minimal_exhaustive);
  CHECK_FALSE(cert.ab_violating_minimal);
}

TEST_CASE("certification of a bound-meeting code") {
  CodeSpec spec = hier_spec(3, 5, {m_of({1, 2, 3, 4})}, CodeKind::DefiningSet);
  CodeReport report = oracle_code(spec);
  CHECK(report.length == 23);
  CHECK(report.dimension == 5);
  CHECK(report.w_min == 11);
  Certificate cert = certify(report, spec);
  CHECK(cert.is_griesmer);
  CHECK(cert.griesmer_distance_optimal);
}

TEST_CASE("certification of the [31,6,8] function code") {
  CodeSpec spec = hier_spec(2, 5, {m_of({1, 2, 3, 4, 5})}, CodeKind::BooleanFunction);
  std::vector<BitVec> words = oracle_codewords(spec);
  CodeReport report = oracle_code(spec);
  Certificate cert = certify(report, words);
  CHECK(cert.w_min == 8);
  CHECK(cert.w_max == 22);
  CHECK_FALSE(cert.ab_sufficient);
  // A full-weight linear-form codeword covers a weight-8 codeword, so the
  // code is not minimal despite the published claim.
  CHECK_FALSE(cert.minimal_exhaustive);
  REQUIRE(cert.witness.has_value());
  const BitVec& a = words[cert.witness->first];
  const BitVec& b = words[cert.witness->second];
  CHECK(a.weight() == 16);
  CHECK(b.weight() == 8);
  CHECK((a ^ b).weight() == a.weight() - b.weight());
  CHECK_FALSE(cert.ab_violating_minimal);
}

TEST_CASE("certify validates its inputs") {
  CodeSpec spec = hier_spec(1, 2, {m_of({1})}, CodeKind::DefiningSet);
  CodeReport report = oracle_code(spec);
  std::vector<BitVec> wrong(2, BitVec(2));
  CHECK_THROWS_AS(certify(report, wrong), std::invalid_argument);
}

TEST_CASE("exhaustive minimality agrees with the covering definition") {
  const std::vector<CodeSpec> specs = {
      hier_spec(2, 5, {m_of({1, 2, 3, 4})}, CodeKind::DefiningSet),
      hier_spec(1, 4, {m_of({1, 2, 3, 4})}, CodeKind::DefiningSet),
      hier_spec(2, 5, {m_of({1, 2, 3, 4, 5})}, CodeKind::BooleanFunction),
      hier_spec(3, 6, {m_of({1, 2, 3, 4, 5, 6})}, CodeKind::BooleanFunction),
      hier_spec(3, 4, {m_of({1, 2, 3, 4})}, CodeKind::DefiningSet),
  };
  for (const CodeSpec& spec : specs) {
    std::vector<BitVec> words = oracle_codewords(spec);
    Certificate cert = certify(oracle_code(spec), words);
    CHECK(cert.minimal_exhaustive == minimal_by_cover(words));
  }
}

TEST_CASE("single-ideal classifier") {
  Thm61Prediction p = classify_thm61(3, 5, 1);
  CHECK(p.griesmer);
  CHECK(p.minimal);
  CHECK_FALSE(classify_thm61(3, 4, 1).minimal);
  CHECK(classify_thm61(2, 6, 2).minimal);
  CHECK_FALSE(classify_thm61(1, 6, 4).minimal);
  CHECK_THROWS_AS(classify_thm61(3, 3, 1), std::invalid_argument);
}

TEST_CASE("paired singleton classifier") {
  Thm62Prediction p = classify_thm62(2, 4);
  CHECK(p.length == 10);
  CHECK(p.d == 4);
  CHECK(p.distance_optimal);
  CHECK(p.minimal);
  CHECK(classify_thm62(2, 5).length == 26);
  CHECK(classify_thm62(2, 5).d == 12);
  CHECK_THROWS_AS(classify_thm62(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(classify_thm62(3, 4), std::invalid_argument);
}

TEST_CASE("function-code classifiers") {
  CHECK(classify_thm63(4, 5, 1).almost_optimal);
  CHECK_FALSE(classify_thm63(1, 2, 1).almost_optimal);  // degenerate dimension
  CHECK(classify_thm63(2, 5, 3).ab_violating_minimal);
  CHECK(classify_thm63(3, 6, 3).ab_violating_minimal);
  CHECK_FALSE(classify_thm63(2, 4, 2).ab_violating_minimal);  // n < 5

  CHECK(classify_thm64(2, 6, 2, 2).d == 9);
  CHECK(classify_thm64(1, 5, 2, 2).d == 7);
  CHECK_THROWS_AS(classify_thm64(2, 6, 2, 1), std::invalid_argument);
}

TEST_CASE("sufficient condition never outruns the exhaustive check") {
  std::mt19937_64 rng(2024);
  for (int n = 2; n <= 6; ++n) {
    for (int m = 1; m <= n; ++m) {
      Poset p = make_hierarchical(m, n);
      std::vector<Mask> ideals = p.all_ideals();
      std::erase(ideals, Mask{0});
      for (std::size_t i = 0; i < ideals.size(); i += 2) {
        for (CodeKind kind : {CodeKind::DefiningSet, CodeKind::BooleanFunction}) {
          IdealFamily fam(p, {ideals[i]});
          if (kind == CodeKind::DefiningSet &&
              family_downsets(p, fam).size() == (std::size_t{1} << n)) {
            continue;
          }
          CodeSpec spec{p, fam, kind};
          CodeReport report = oracle_code(spec);
          Certificate cert = certify(report, spec);
          if (cert.ab_sufficient) CHECK(cert.minimal_exhaustive);
          CHECK(report.length >= cert.griesmer_sum_at_d);
        }
      }
    }
  }
}
