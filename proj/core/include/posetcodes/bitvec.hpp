#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace posetcodes {

/// Packed bit vector used for codewords. Coordinates are indexed from 0;
/// bit j lives in word j/64 at position j%64.
class BitVec {
 public:
  BitVec() = default;

  explicit BitVec(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  long long weight() const {
    long long w = 0;
    for (std::uint64_t word : words_) w += std::popcount(word);
    return w;
  }

  BitVec& operator^=(const BitVec& other) {
    if (other.nbits_ != nbits_) throw std::invalid_argument("BitVec: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }

  bool operator==(const BitVec& other) const = default;

  /// Numeric order, treating coordinate 0 as the least significant bit.
  friend bool operator<(const BitVec& a, const BitVec& b) {
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    }
    return false;
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace posetcodes
