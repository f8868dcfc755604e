#pragma once

// Orderings of integer-like strings over the digit codes {0,1,2}.
//
// Base 3/2 strings use the codes as digits; base 1.5 strings use them for
// 0, H, 1. Both bases therefore share one set of strings and, since a base
// 1.5 value is exactly half the base 3/2 value of the same codes, one
// ascending order.
//
// Dictionary order (length, then lexicographic, "0" first) coincides with
// the numeric order of the strings read in ternary, so a string's dictionary
// index is its ternary value.

#include "exactnum.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace threehalves::detail {

using Codes = std::vector<std::uint8_t>;

/// Ternary digits of idx, most significant first ("0" for 0).
inline Codes ternaryDigits(std::uint64_t idx) {
  Codes out;
  do {
    out.push_back(static_cast<std::uint8_t>(idx % 3));
    idx /= 3;
  } while (idx != 0);
  std::reverse(out.begin(), out.end());
  return out;
}

inline std::uint64_t ternaryIndex(std::span<const std::uint8_t> codes) {
  constexpr std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / 3;
  std::uint64_t idx = 0;
  for (auto c : codes) {
    if (idx > limit || idx * 3 > std::numeric_limits<std::uint64_t>::max() - c)
      throw std::overflow_error("ternary value exceeds 64 bits");
    idx = idx * 3 + c;
  }
  return idx;
}

/// Odometer increment of a ternary string (dictionary successor).
inline void ternaryIncrement(Codes &codes) {
  std::size_t i = codes.size();
  while (i > 0) {
    --i;
    if (codes[i] < 2) {
      ++codes[i];
      return;
    }
    codes[i] = 0;
  }
  codes.insert(codes.begin(), 1);
}

/// Numerator P of the base 3/2 value P / 2^(len-1).
inline BigInt scaledValue32(std::span<const std::uint8_t> codes) {
  BigInt acc = 0;
  BigInt two = 1;
  for (auto c : codes) {
    acc = acc * 3 + two * c;
    two *= 2;
  }
  return acc;
}

/// True when the base 3/2 value of the codes is an integer; with
/// `even` set, when it is an even integer (base 1.5 value integral).
inline bool isIntegerValue32(std::span<const std::uint8_t> codes, bool even = false) {
  const std::size_t shift = codes.size() - 1 + (even ? 1 : 0);
  if (codes.size() <= 38) {
    std::uint64_t acc = 0, two = 1;
    for (auto c : codes) {
      acc = acc * 3 + two * c;
      two *= 2;
    }
    return (acc & ((std::uint64_t{1} << shift) - 1)) == 0;
  }
  BigInt p = scaledValue32(codes);
  return (p % (BigInt(1) << shift)) == 0;
}

/// All strings whose ascending rank is final for a given maximum length L:
/// those with base 3/2 value below (3/2)^L, the smallest value of a string
/// of length L+1. Entries are sorted by value; each is stored as
/// (2^(L-1) * value32, dictionary index).
class AscendingTable {
public:
  static constexpr unsigned kMaxLength = 38;

  explicit AscendingTable(unsigned maxLength) : maxLength_(maxLength) {
    if (maxLength < 1 || maxLength > kMaxLength)
      throw std::length_error("ascending enumeration length out of range");
    build();
  }

  /// Smallest table with at least `count` final entries.
  static AscendingTable withFinalCount(std::size_t count) {
    for (unsigned len = 1;; ++len) {
      AscendingTable t(len);
      if (t.finalCount() >= count)
        return t;
    }
  }

  /// Smallest table that ranks every string of length <= len. The largest
  /// such value is below 4 * (3/2)^len < (3/2)^(len+4).
  static AscendingTable coveringLength(unsigned len) { return AscendingTable(len + 4); }

  unsigned maxLength() const { return maxLength_; }
  std::size_t finalCount() const { return entries_.size(); }

  std::uint64_t dictIndexAt(std::size_t rank) const { return entries_.at(rank).second; }
  std::uint64_t keyAt(std::size_t rank) const { return entries_.at(rank).first; }

  bool isIntegerAt32(std::size_t rank) const { return divisible(keyAt(rank), maxLength_ - 1); }
  bool isIntegerAt15(std::size_t rank) const { return divisible(keyAt(rank), maxLength_); }

  /// Value of the entry at `rank` in base 3/2.
  ExactRational value32At(std::size_t rank) const {
    return ExactRational(BigInt(keyAt(rank)), BigInt(1) << (maxLength_ - 1));
  }

  /// Ascending rank of a string, if it lies below the final cutoff.
  std::optional<std::size_t> rankOf(std::span<const std::uint8_t> codes) const {
    if (codes.size() > maxLength_)
      return std::nullopt;
    std::uint64_t key = 0;
    const std::size_t len = codes.size();
    for (std::size_t j = 0; j < len; ++j)
      key += codes[j] * weights_[len - 1 - j];
    if (2 * key >= cutoff_)
      return std::nullopt;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const auto &e, std::uint64_t k) { return e.first < k; });
    if (it == entries_.end() || it->first != key)
      throw std::logic_error("ascending table is missing a string below its cutoff");
    return static_cast<std::size_t>(it - entries_.begin());
  }

private:
  static bool divisible(std::uint64_t key, unsigned bits) {
    return (key & ((std::uint64_t{1} << bits) - 1)) == 0;
  }

  void build() {
    const unsigned L = maxLength_;
    weights_.resize(L);
    cutoff_ = 1;
    for (unsigned i = 0; i < L; ++i) {
      // 3^i * 2^(L-1-i)
      std::uint64_t w = std::uint64_t{1} << (L - 1 - i);
      for (unsigned j = 0; j < i; ++j)
        w *= 3;
      weights_[i] = w;
      cutoff_ *= 3;
    }
    // cutoff_ = 3^L; an entry is final when 2 * key < 3^L.
    entries_.emplace_back(0, 0);
    for (unsigned len = 1; len <= L; ++len)
      for (std::uint8_t lead = 1; lead <= 2; ++lead)
        descend(len - 1, lead * weights_[len - 1], lead);
    std::sort(entries_.begin(), entries_.end());
    for (std::size_t i = 1; i < entries_.size(); ++i)
      if (entries_[i].first == entries_[i - 1].first)
        throw std::logic_error("two integer-like strings share a value");
  }

  // `pos` is the position just filled; digits at lower positions remain.
  void descend(unsigned pos, std::uint64_t key, std::uint64_t idx) {
    if (2 * key >= cutoff_)
      return;
    if (pos == 0) {
      entries_.emplace_back(key, idx);
      return;
    }
    for (std::uint8_t c = 0; c <= 2; ++c)
      descend(pos - 1, key + c * weights_[pos - 1], idx * 3 + c);
  }

  unsigned maxLength_;
  std::uint64_t cutoff_ = 0;
  std::vector<std::uint64_t> weights_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries_;
};

} // namespace threehalves::detail
