#pragma once

#include <optional>
#include <span>
#include <vector>

#include "posetcodes/mask.hpp"
#include "posetcodes/poset.hpp"

namespace posetcodes {

/// 1 iff u and x are disjoint as subsets.
inline int chi(Mask u, Mask x) { return (u & x) == 0 ? 1 : 0; }

/// Value of the set generating function of X at the sign point determined
/// by u (coordinate i is -1 iff i is in u): sum over x in X of (-1)^{|x∩u|}.
long long eval_H_direct(std::span<const Mask> x_set, Mask u);

/// Same value for the down-set collection of the single two-level ideal
/// A ∪ B, via the closed forms
///   B = ∅ : 2^{|A|} χ(u|A)
///   B ≠ ∅ : 2^m χ(u|[m]) + (-1)^{wt(u∩[m])} (2^{|B|} χ(u|B) - 1)
/// instead of enumerating the collection.
long long eval_H_hier_ideal(const HierarchicalShape& shape, Mask a, Mask b, Mask u);

/// Evaluates the generating function of a family's down-set collection at
/// sign points, by inclusion-exclusion over nonempty subfamilies: the
/// intersection of ideals is again an ideal, so each term reduces to a
/// single-ideal collection. For two-level posets each term is evaluated in
/// O(1) through the closed forms; otherwise the per-term collections are
/// enumerated once at construction.
class FamilyHEvaluator {
 public:
  FamilyHEvaluator(const Poset& poset, const IdealFamily& family);

  long long eval(Mask u) const;

  /// |collection| = eval at the all-plus-one point.
  long long collection_size() const { return collection_size_; }

  int ground_set_size() const { return n_; }

 private:
  struct HierTerm {
    int coeff;
    Mask a, b;
  };
  struct GeneralTerm {
    int coeff;
    std::vector<Mask> collection;
  };

  int n_ = 0;
  long long collection_size_ = 0;
  std::optional<HierarchicalShape> shape_;
  std::vector<HierTerm> hier_terms_;
  std::vector<GeneralTerm> general_terms_;
};

/// One-shot convenience wrapper around FamilyHEvaluator.
long long eval_H_family(const Poset& poset, const IdealFamily& family, Mask u);

/// Brute-force Walsh-Hadamard coefficient of the Boolean function whose
/// support is the given set: sum over all v in F_2^n of (-1)^{f(v) + u·v}.
long long walsh_transform(std::span<const Mask> f_support, Mask u, int n);

}  // namespace posetcodes
