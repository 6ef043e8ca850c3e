#include "posetcodes/poset.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace posetcodes {

namespace {

void check_ground_set(int n) {
  if (n < 1 || n > kMaxGroundSet) {
    throw std::invalid_argument("poset: ground-set size must be in [1, " +
                                std::to_string(kMaxGroundSet) + "], got " +
                                std::to_string(n));
  }
}

void check_subset(Mask s, int n, const char* what) {
  if ((s & ~full_mask(n)) != 0) {
    throw std::invalid_argument(std::string(what) + " " + mask_to_string(s) +
                                " is not a subset of the ground set [" +
                                std::to_string(n) + "]");
  }
}

}  // namespace

Poset::Poset(int n, std::vector<Mask> down) : n_(n), down_(std::move(down)) {}

Poset Poset::antichain(int n) {
  check_ground_set(n);
  std::vector<Mask> down(n);
  for (int i = 0; i < n; ++i) down[i] = Mask{1} << i;
  return Poset(n, std::move(down));
}

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  check_ground_set(n);
  std::vector<Mask> down(n);
  for (int i = 0; i < n; ++i) down[i] = Mask{1} << i;
  for (auto [lo, hi] : covers) {
    if (lo < 1 || lo > n || hi < 1 || hi > n) {
      throw std::invalid_argument("poset: cover pair (" + std::to_string(lo) + "," +
                                  std::to_string(hi) + ") out of range");
    }
    if (lo == hi) {
      throw std::invalid_argument("poset: cover pair may not relate an element to itself");
    }
    down[hi - 1] |= Mask{1} << (lo - 1);
  }
  // Transitive closure to a fixpoint; n is tiny.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < n; ++j) {
      Mask acc = down[j];
      Mask below = down[j];
      while (below != 0) {
        int i = std::countr_zero(below);
        below &= below - 1;
        acc |= down[i];
      }
      if (acc != down[j]) {
        down[j] = acc;
        changed = true;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (mask_contains(down[i], j + 1) && mask_contains(down[j], i + 1)) {
        throw std::invalid_argument("poset: cover relation has a cycle through " +
                                    std::to_string(i + 1) + " and " + std::to_string(j + 1));
      }
    }
  }
  return Poset(n, std::move(down));
}

Mask Poset::down(int element) const {
  if (element < 1 || element > n_) {
    throw std::invalid_argument("poset: element " + std::to_string(element) +
                                " out of range");
  }
  return down_[element - 1];
}

bool Poset::is_order_ideal(Mask s) const {
  check_subset(s, n_, "set");
  Mask rest = s;
  while (rest != 0) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    if ((down_[i] & ~s) != 0) return false;
  }
  return true;
}

Mask Poset::ideal_closure(Mask e) const {
  check_subset(e, n_, "set");
  Mask out = 0;
  while (e != 0) {
    int i = std::countr_zero(e);
    e &= e - 1;
    out |= down_[i];
  }
  return out;
}

std::vector<Mask> Poset::down_ideals(Mask ideal) const {
  if (!is_order_ideal(ideal)) {
    throw std::invalid_argument("down_ideals: " + mask_to_string(ideal) +
                                " is not an order ideal");
  }
  if (popcount(ideal) > kMaxEnumeration) {
    throw std::invalid_argument("down_ideals: ideal too large to enumerate (|I| > " +
                                std::to_string(kMaxEnumeration) + ")");
  }
  std::vector<Mask> out;
  // Submask walk over the ideal; descending order, reversed at the end.
  Mask s = ideal;
  while (true) {
    if (is_order_ideal(s)) out.push_back(s);
    if (s == 0) break;
    s = (s - 1) & ideal;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Mask> Poset::all_ideals() const {
  if (n_ > kMaxEnumeration) {
    throw std::invalid_argument("all_ideals: ground set too large to enumerate");
  }
  return down_ideals(universe());
}

std::optional<HierarchicalShape> Poset::hierarchical_shape() const {
  // Bottom level = elements whose down-set is a singleton.
  int m = 0;
  while (m < n_ && down_[m] == (Mask{1} << m)) ++m;
  Mask lower = full_mask(m);
  for (int j = m; j < n_; ++j) {
    if (down_[j] != (lower | (Mask{1} << j))) return std::nullopt;
  }
  return HierarchicalShape{m, n_};
}

Poset make_hierarchical(int m, int n) {
  check_ground_set(n);
  if (m < 1 || m > n) {
    throw std::invalid_argument("make_hierarchical: need 1 <= m <= n, got m=" +
                                std::to_string(m) + ", n=" + std::to_string(n));
  }
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i <= m; ++i) {
    for (int j = m + 1; j <= n; ++j) covers.emplace_back(i, j);
  }
  return Poset::from_covers(n, covers);
}

IdealFamily::IdealFamily(const Poset& poset, std::vector<Mask> ideals) {
  if (ideals.empty()) throw std::invalid_argument("ideal family: must be nonempty");
  for (Mask ideal : ideals) {
    if (!poset.is_order_ideal(ideal)) {
      throw std::invalid_argument("ideal family: " + mask_to_string(ideal) +
                                  " is not an order ideal");
    }
    if (std::find(ideals_.begin(), ideals_.end(), ideal) == ideals_.end()) {
      ideals_.push_back(ideal);
    }
  }
}

std::vector<Mask> family_downsets(const Poset& poset, const IdealFamily& family) {
  std::vector<Mask> out;
  for (Mask ideal : family.ideals()) {
    std::vector<Mask> part = poset.down_ideals(ideal);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<Mask, Mask> decompose_hierarchical_ideal(const HierarchicalShape& shape,
                                                   Mask ideal) {
  check_subset(ideal, shape.n, "set");
  Mask a = ideal & shape.lower_mask();
  Mask b = ideal & shape.upper_mask();
  if (b != 0 && a != shape.lower_mask()) {
    throw std::invalid_argument(
        "decompose_hierarchical_ideal: " + mask_to_string(ideal) +
        " is not an order ideal of the two-level poset (top elements present "
        "without the full bottom level)");
  }
  return {a, b};
}

}  // namespace posetcodes
