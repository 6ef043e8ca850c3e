#pragma once

#include <string_view>

#include "posetcodes/codebuild.hpp"
#include "posetcodes/poset.hpp"

namespace posetcodes {

/// Poset text format:
///   "hier:<m>,<n>"                 two-level poset
///   "n=<int>"                      anti-chain
///   "n=<int>; cover=<i><<j>,..."   cover pairs, e.g. "n=4; cover=1<2,3<4"
/// Throws std::invalid_argument on malformed input.
Poset parse_poset(std::string_view spec);

/// Ideal spec: semicolon-separated generator lists, e.g. "1,3,4;2".
/// Each list is closed downward before use, so generators need not be
/// ideals themselves.
IdealFamily parse_ideal_family(const Poset& poset, std::string_view spec);

/// "D" or "f".
CodeKind parse_kind(std::string_view kind);

}  // namespace posetcodes
