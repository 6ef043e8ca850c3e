#pragma once

#include <optional>
#include <span>
#include <utility>

#include "posetcodes/bitvec.hpp"
#include "posetcodes/codebuild.hpp"

namespace posetcodes {

/// Sum of ceilings of d/2^i for i = 0..k-1 (the Griesmer lower bound on the
/// length of a binary [*, k, d] code).
long long griesmer_sum(int k, long long d);

/// Quality certificate for a constructed code.
///   is_griesmer              length meets the Griesmer sum exactly.
///   griesmer_distance_opt    the bound already forbids d+1 at this length.
///   griesmer_almost_optimal  d+1 is not forbidden but d+2 is.
///   ab_sufficient            2 w_min > w_max (sufficient for minimality).
///   minimal_exhaustive       no pair of distinct nonzero codewords a, b has
///                            wt(a+b) = wt(a) - wt(b).
///   witness                  indices (into the supplied codeword list) of a
///                            violating pair when not minimal.
struct Certificate {
  long long griesmer_sum_at_d = 0;
  bool is_griesmer = false;
  bool griesmer_distance_optimal = false;
  bool griesmer_almost_optimal = false;
  long long w_min = 0;
  long long w_max = 0;
  bool ab_sufficient = false;
  bool minimal_exhaustive = false;
  bool ab_violating_minimal = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Full certification of a report against its codeword list (distinct
/// codewords, zero word included). Rejects zero-dimension reports.
Certificate certify(const CodeReport& report, std::span<const BitVec> codewords);

/// Convenience overload that regenerates the codewords (oracle cap applies).
Certificate certify(const CodeReport& report, const CodeSpec& spec);

// Parameter classifiers for the single- and two-ideal families over the
// two-level poset. Each returns what the closed-form analysis predicts;
// tests check the predictions against certify on the realized codes.

struct Thm61Prediction {
  bool griesmer = false;
  bool minimal = false;
};
Thm61Prediction classify_thm61(int m, int n, int b);

struct Thm62Prediction {
  long long length = 0;
  long long d = 0;
  bool distance_optimal = false;
  bool minimal = false;
};
Thm62Prediction classify_thm62(int m, int n);

struct Thm63Prediction {
  bool almost_optimal = false;        // case m = n-1, b = 1
  bool ab_violating_minimal = false;  // case m + b = n >= 5, max(m,b) <= n-2
};
Thm63Prediction classify_thm63(int m, int n, int b);

struct Thm64Prediction {
  long long d = 0;
  bool ab_violating_minimal = false;
};
Thm64Prediction classify_thm64(int m, int n, int b1, int b2);

}  // namespace posetcodes
