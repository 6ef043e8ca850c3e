#include "posetcodes/genfun.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace posetcodes {

long long eval_H_direct(std::span<const Mask> x_set, Mask u) {
  long long sum = 0;
  for (Mask x : x_set) sum += sign_at(u, x);
  return sum;
}

long long eval_H_hier_ideal(const HierarchicalShape& shape, Mask a, Mask b, Mask u) {
  Mask lower = shape.lower_mask();
  Mask upper = shape.upper_mask();
  if ((a & ~lower) != 0 || (b & ~upper) != 0) {
    throw std::invalid_argument("eval_H_hier_ideal: (A, B) not within the two levels");
  }
  if (b == 0) {
    return (1LL << popcount(a)) * chi(u, a);
  }
  if (a != lower) {
    throw std::invalid_argument(
        "eval_H_hier_ideal: B nonempty requires A to be the whole bottom level");
  }
  long long head = (1LL << shape.m) * chi(u, lower);
  long long tail = (1LL << popcount(b)) * chi(u, b) - 1;
  int sign = (popcount(u & lower) & 1) ? -1 : 1;
  return head + sign * tail;
}

FamilyHEvaluator::FamilyHEvaluator(const Poset& poset, const IdealFamily& family)
    : n_(poset.size()), shape_(poset.hierarchical_shape()) {
  const std::vector<Mask>& ideals = family.ideals();
  if (ideals.size() > 20) {
    throw std::invalid_argument("family evaluator: more than 20 ideals");
  }
  // Inclusion-exclusion over nonempty subfamilies. The intersection of
  // ideals is an ideal, so identical intersections collapse by summing
  // signed coefficients.
  std::vector<std::pair<Mask, int>> terms;  // intersection -> coefficient
  const std::size_t k = ideals.size();
  for (std::uint32_t sel = 1; sel < (std::uint32_t{1} << k); ++sel) {
    Mask inter = full_mask(n_);
    for (std::size_t i = 0; i < k; ++i) {
      if ((sel >> i) & 1u) inter &= ideals[i];
    }
    int coeff = (popcount(sel) & 1) ? 1 : -1;
    auto it = std::find_if(terms.begin(), terms.end(),
                           [inter](const auto& t) { return t.first == inter; });
    if (it == terms.end()) {
      terms.emplace_back(inter, coeff);
    } else {
      it->second += coeff;
    }
  }
  for (auto [inter, coeff] : terms) {
    if (coeff == 0) continue;
    if (shape_) {
      auto [a, b] = decompose_hierarchical_ideal(*shape_, inter);
      hier_terms_.push_back(HierTerm{coeff, a, b});
    } else {
      general_terms_.push_back(GeneralTerm{coeff, poset.down_ideals(inter)});
    }
  }
  collection_size_ = eval(0);
}

long long FamilyHEvaluator::eval(Mask u) const {
  long long sum = 0;
  for (const HierTerm& t : hier_terms_) {
    sum += t.coeff * eval_H_hier_ideal(*shape_, t.a, t.b, u);
  }
  for (const GeneralTerm& t : general_terms_) {
    sum += t.coeff * eval_H_direct(t.collection, u);
  }
  return sum;
}

long long eval_H_family(const Poset& poset, const IdealFamily& family, Mask u) {
  return FamilyHEvaluator(poset, family).eval(u);
}

long long walsh_transform(std::span<const Mask> f_support, Mask u, int n) {
  if (n < 0 || n > kMaxEnumeration) {
    throw std::invalid_argument("walsh_transform: n out of range");
  }
  std::vector<bool> in_support(std::size_t{1} << n, false);
  for (Mask v : f_support) {
    if ((v & ~full_mask(n)) != 0) {
      throw std::invalid_argument("walsh_transform: support point " + mask_to_string(v) +
                                  " outside F_2^" + std::to_string(n));
    }
    in_support[v] = true;
  }
  long long sum = 0;
  for (Mask v = 0; v < (Mask{1} << n); ++v) {
    int exp = (in_support[v] ? 1 : 0) ^ (popcount(u & v) & 1);
    sum += exp ? -1 : 1;
  }
  return sum;
}

}  // namespace posetcodes
