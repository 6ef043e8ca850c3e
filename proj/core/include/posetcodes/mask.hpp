#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace posetcodes {

/// A subset of the ground set [n] = {1,...,n}, stored as a bit mask.
/// Bit i-1 corresponds to element i, so the mask doubles as the
/// characteristic vector of the subset in F_2^n.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

/// (-1)^{|u ∩ x|}: the character value of x at the sign point u.
inline int sign_at(Mask u, Mask x) { return (std::popcount(u & x) & 1) ? -1 : 1; }

inline Mask full_mask(int n) { return n == 0 ? Mask{0} : (~Mask{0} >> (32 - n)); }

inline Mask singleton(int element) { return Mask{1} << (element - 1); }

inline bool mask_contains(Mask s, int element) { return (s >> (element - 1)) & 1u; }

inline std::vector<int> mask_elements(Mask s) {
  std::vector<int> out;
  while (s != 0) {
    int bit = std::countr_zero(s);
    out.push_back(bit + 1);
    s &= s - 1;
  }
  return out;
}

inline std::string mask_to_string(Mask s) {
  std::string out = "{";
  bool first = true;
  for (int e : mask_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace posetcodes
