#pragma once

#include <map>
#include <string>

namespace posetcodes {

/// Weight distribution of a binary linear code: weight -> number of
/// codewords, always including the zero codeword as {0: 1}. The total mass
/// is exactly 2^dimension.
class WeightDistribution {
 public:
  /// Default: the zero code {0}, one codeword of weight 0.
  WeightDistribution() : entries_{{0, 1}} {}

  /// Build from final entries. Validates positivity, the {0:1} entry and
  /// the total mass.
  static WeightDistribution from_entries(std::map<long long, long long> entries,
                                         int dimension);

  /// Build from a raw tally over an index space of size 2^index_bits, where
  /// several indices may map to the same codeword. The tally at weight 0 is
  /// the kernel size Z; it must divide every other tally (fibers of a linear
  /// map all have size Z), and the result is the deduplicated distribution
  /// with dimension index_bits - log2(Z).
  static WeightDistribution from_raw_histogram(const std::map<long long, long long>& raw,
                                               int index_bits);

  const std::map<long long, long long>& entries() const { return entries_; }
  int dimension() const { return dimension_; }

  /// Least nonzero weight with positive frequency; 0 for the zero code.
  long long w_min() const;
  long long w_max() const;
  long long mass() const;

  bool operator==(const WeightDistribution& other) const = default;

 private:
  std::map<long long, long long> entries_;
  int dimension_ = 0;
};

/// Canonical ascending polynomial string, e.g. "1+4z^11+6z^12+z^16".
/// Zero coefficients are omitted; a unit coefficient prints bare.
std::string weight_enumerator_string(const WeightDistribution& dist);

}  // namespace posetcodes
