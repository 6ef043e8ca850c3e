#include "posetcodes/distribution.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace posetcodes {

WeightDistribution WeightDistribution::from_entries(std::map<long long, long long> entries,
                                                    int dimension) {
  WeightDistribution d;
  long long mass = 0;
  for (auto [w, freq] : entries) {
    if (w < 0) throw std::invalid_argument("weight distribution: negative weight");
    if (freq <= 0) throw std::invalid_argument("weight distribution: nonpositive frequency");
    mass += freq;
  }
  auto it = entries.find(0);
  if (it == entries.end() || it->second != 1) {
    throw std::invalid_argument("weight distribution: zero codeword must appear exactly once");
  }
  if (dimension < 0 || dimension > 62 || mass != (1LL << dimension)) {
    throw std::invalid_argument("weight distribution: mass " + std::to_string(mass) +
                                " does not match dimension " + std::to_string(dimension));
  }
  d.entries_ = std::move(entries);
  d.dimension_ = dimension;
  return d;
}

WeightDistribution WeightDistribution::from_raw_histogram(
    const std::map<long long, long long>& raw, int index_bits) {
  long long mass = 0;
  for (auto [w, freq] : raw) {
    if (freq < 0) throw std::invalid_argument("raw histogram: negative frequency");
    mass += freq;
  }
  if (index_bits < 0 || mass != (1LL << index_bits)) {
    throw std::invalid_argument("raw histogram: mass does not fill the index space");
  }
  auto it = raw.find(0);
  long long kernel = (it == raw.end()) ? 0 : it->second;
  if (kernel < 1 || std::popcount(static_cast<unsigned long long>(kernel)) != 1) {
    throw std::invalid_argument("raw histogram: weight-0 tally must be a positive power of two");
  }
  int kernel_bits = std::countr_zero(static_cast<unsigned long long>(kernel));
  std::map<long long, long long> entries;
  for (auto [w, freq] : raw) {
    if (freq == 0) continue;
    if (freq % kernel != 0) {
      throw std::invalid_argument("raw histogram: tally at weight " + std::to_string(w) +
                                  " is not a multiple of the kernel size");
    }
    entries[w] = freq / kernel;
  }
  return from_entries(std::move(entries), index_bits - kernel_bits);
}

long long WeightDistribution::w_min() const {
  for (auto [w, freq] : entries_) {
    if (w > 0) return w;
  }
  return 0;
}

long long WeightDistribution::w_max() const {
  if (entries_.empty()) return 0;
  return entries_.rbegin()->first;
}

long long WeightDistribution::mass() const {
  long long m = 0;
  for (auto [w, freq] : entries_) m += freq;
  return m;
}

std::string weight_enumerator_string(const WeightDistribution& dist) {
  std::string out = "1";
  for (auto [w, freq] : dist.entries()) {
    if (w == 0) continue;
    out += "+";
    if (freq != 1) out += std::to_string(freq);
    out += "z";
    if (w != 1) out += "^" + std::to_string(w);
  }
  return out;
}

}  // namespace posetcodes
