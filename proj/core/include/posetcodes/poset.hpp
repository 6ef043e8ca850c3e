#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "posetcodes/mask.hpp"

namespace posetcodes {

/// Mask width head-room; posets larger than this are rejected outright.
inline constexpr int kMaxGroundSet = 30;
/// General-poset operations that scan 2^n subsets refuse beyond this size.
/// Two-level posets never take those paths.
inline constexpr int kMaxEnumeration = 20;

/// The two-level poset on [n] whose bottom level is [m]: every element of
/// [m] lies below every element of [n]\[m], and each level is an anti-chain.
/// m = n degenerates to an anti-chain on [n].
struct HierarchicalShape {
  int m = 0;
  int n = 0;

  Mask lower_mask() const { return full_mask(m); }
  Mask upper_mask() const { return full_mask(n) & ~full_mask(m); }
};

/// A finite partial order on [n], stored as one down-set mask per element
/// (reflexive, so i is always in down(i)). Construction computes the
/// reflexive-transitive closure of the given cover pairs and rejects cycles.
class Poset {
 public:
  static Poset antichain(int n);

  /// covers: pairs (i, j) meaning i is covered by j (i below j).
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);

  int size() const { return n_; }
  Mask universe() const { return full_mask(n_); }

  /// {j : j below-or-equal element}, as a mask. element is 1-based.
  Mask down(int element) const;

  /// True iff s is down-closed. The empty set counts as down-closed.
  bool is_order_ideal(Mask s) const;

  /// Smallest order ideal containing e: the union of down-sets over e.
  Mask ideal_closure(Mask e) const;

  /// All order ideals contained in the given ideal, ascending by mask,
  /// always including the empty set. Rejects non-ideal input.
  std::vector<Mask> down_ideals(Mask ideal) const;

  /// Every down-closed subset of [n] (including the empty set), ascending.
  std::vector<Mask> all_ideals() const;

  /// Recognize the two-level structure with bottom level exactly [m].
  std::optional<HierarchicalShape> hierarchical_shape() const;

  bool operator==(const Poset& other) const = default;

 private:
  Poset(int n, std::vector<Mask> down);

  int n_ = 0;
  std::vector<Mask> down_;
};

Poset make_hierarchical(int m, int n);

/// A deduplicated list of order ideals of an ambient poset. Order of first
/// occurrence is preserved. The family is never empty.
class IdealFamily {
 public:
  IdealFamily(const Poset& poset, std::vector<Mask> ideals);

  const std::vector<Mask>& ideals() const { return ideals_; }
  std::size_t size() const { return ideals_.size(); }

 private:
  std::vector<Mask> ideals_;
};

/// Union of down_ideals over the family members, ascending, including the
/// empty set.
std::vector<Mask> family_downsets(const Poset& poset, const IdealFamily& family);

/// Split an ideal of the two-level poset into (A, B) with A inside the
/// bottom level and B inside the top level. Valid ideals have B empty or
/// A equal to the whole bottom level; anything else is rejected.
std::pair<Mask, Mask> decompose_hierarchical_ideal(const HierarchicalShape& shape,
                                                   Mask ideal);

}  // namespace posetcodes
