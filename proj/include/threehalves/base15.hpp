#pragma once

// Base 1.5 with the digits 0, H (one half) and 1. Position i weighs
// (3/2)^i. Doubling a base 1.5 value and relabelling 0, H, 1 as 0, 1, 2
// gives the base 3/2 numeral of the doubled value.

#include "base32.hpp"
#include "ordering.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace threehalves {

enum class Digit15 : std::uint8_t { Zero = 0, Half = 1, One = 2 };

struct Numeral15 {
  std::vector<Digit15> digits{Digit15::Zero};
  std::vector<Digit15> frac;

  friend bool operator==(const Numeral15 &, const Numeral15 &) = default;
};

inline char toChar(Digit15 d) {
  switch (d) {
  case Digit15::Zero: return '0';
  case Digit15::Half: return 'H';
  case Digit15::One: return '1';
  }
  return '?';
}

inline std::string toString(const Numeral15 &s) {
  std::string out;
  for (auto d : s.digits)
    out += toChar(d);
  if (!s.frac.empty()) {
    out += '.';
    for (auto d : s.frac)
      out += toChar(d);
  }
  return out;
}

inline Numeral15 parse15(std::string_view text) {
  Numeral15 s{{}, {}};
  bool frac = false;
  for (char c : text) {
    auto &dst = frac ? s.frac : s.digits;
    switch (c) {
    case '0': dst.push_back(Digit15::Zero); break;
    case 'H':
    case 'h': dst.push_back(Digit15::Half); break;
    case '1': dst.push_back(Digit15::One); break;
    case '.':
      if (!frac) {
        frac = true;
        break;
      }
      [[fallthrough]];
    default:
      throw std::invalid_argument("invalid base 1.5 digit '" + std::string(1, c) + "'");
    }
  }
  if (s.digits.empty())
    throw std::invalid_argument("numeral has no integer digits: '" + std::string(text) + "'");
  if (s.digits.size() > 1 && s.digits.front() == Digit15::Zero)
    throw std::invalid_argument("numeral has a leading zero: '" + std::string(text) + "'");
  return s;
}

inline Numeral32 map15to32(const Numeral15 &s) {
  Numeral32 out{{}, {}};
  for (auto d : s.digits)
    out.digits.push_back(static_cast<std::uint8_t>(d));
  for (auto d : s.frac)
    out.frac.push_back(static_cast<std::uint8_t>(d));
  return out;
}

inline Numeral15 map32to15(const Numeral32 &s) {
  Numeral15 out{{}, {}};
  for (auto d : s.digits)
    out.digits.push_back(static_cast<Digit15>(d));
  for (auto d : s.frac)
    out.frac.push_back(static_cast<Digit15>(d));
  return out;
}

inline ExactRational value15(const Numeral15 &s) { return value32(map15to32(s)) / ExactRational(2); }

/// Digit sum with H counted as 1/2.
inline ExactRational digitSum15(const Numeral15 &s) {
  std::uint64_t halves = 0;
  for (auto d : s.digits)
    halves += static_cast<std::uint8_t>(d);
  return ExactRational(halves, 2);
}

/// Adds one to an integer-valued numeral: the rightmost 0 (a 0 is padded
/// on the left if there is none) and every digit to its right cycle
/// 0 -> 1 -> H -> 0.
inline Numeral15 increment15(const Numeral15 &s) {
  if (!s.frac.empty())
    throw std::invalid_argument("increment15: numeral has fractional digits");
  if (!detail::isIntegerValue32(map15to32(s).digits, true))
    throw std::invalid_argument("increment15: value of " + toString(s) + " is not an integer");
  Numeral15 out = s;
  std::size_t i = out.digits.size();
  while (i-- > 0) {
    Digit15 &d = out.digits[i];
    if (d == Digit15::Zero) {
      d = Digit15::One;
      return out;
    }
    d = d == Digit15::One ? Digit15::Half : Digit15::Zero;
  }
  out.digits.insert(out.digits.begin(), Digit15::One);
  return out;
}

/// The integer-like numeral with value n: the base 3/2 numeral of 2n with
/// digits relabelled.
inline Numeral15 encodeInteger15(std::uint64_t n) {
  if (n > std::numeric_limits<std::uint64_t>::max() / 2)
    throw std::overflow_error("encodeInteger15: value too large");
  return map32to15(encode32(2 * n));
}

/// Integer-like numerals in dictionary order (0 < H < 1).
inline std::vector<Numeral15> dictionary15(std::size_t count) {
  std::vector<Numeral15> out;
  out.reserve(count);
  for (Dictionary32Enumerator e; out.size() < count; e.next())
    out.push_back(map32to15(e.current()));
  return out;
}

/// Integer-like numerals sorted by value.
inline std::vector<Numeral15> ascending15(std::size_t count) {
  std::vector<Numeral15> out;
  out.reserve(count);
  for (auto &s : ascending32(count))
    out.push_back(map32to15(s));
  return out;
}

/// Positions of integers among the ascending numerals (A320035).
inline std::vector<std::uint64_t> intIndicesAscending15(std::size_t count) {
  for (unsigned len = 1;; ++len) {
    detail::AscendingTable table(len);
    std::vector<std::uint64_t> out;
    for (std::size_t r = 0; r < table.finalCount() && out.size() < count; ++r)
      if (table.isIntegerAt15(r))
        out.push_back(r);
    if (out.size() == count)
      return out;
  }
}

/// Positions of integers among the dictionary-ordered numerals (A265316).
inline std::vector<std::uint64_t> intIndicesDict15(std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (Dictionary32Enumerator e; out.size() < count; e.next())
    if (detail::isIntegerValue32(e.current().digits, true))
      out.push_back(e.index());
  return out;
}

/// The permutations relating the two orders on [0, count):
///   dictToAscending(n) = k when A_k = B_n   (A320274)
///   ascendingToDict(n) = k when B_k = A_n   (A320273)
class OrderPermutations {
public:
  explicit OrderPermutations(std::size_t count) {
    const unsigned dictLen = static_cast<unsigned>(detail::ternaryDigits(count ? count - 1 : 0).size());
    table_ = detail::AscendingTable::withFinalCount(count);
    if (table_->maxLength() < dictLen + 4)
      table_ = detail::AscendingTable::coveringLength(dictLen);
    toDict_.reserve(count);
    toAscending_.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
      toDict_.push_back(table_->dictIndexAt(k));
    for (std::size_t n = 0; n < count; ++n) {
      auto rank = table_->rankOf(detail::ternaryDigits(n));
      if (!rank)
        throw std::logic_error("dictionary string missing from ascending table");
      toAscending_.push_back(*rank);
    }
  }

  std::size_t size() const { return toDict_.size(); }
  std::uint64_t dictToAscending(std::size_t n) const { return toAscending_.at(n); }
  std::uint64_t ascendingToDict(std::size_t n) const { return toDict_.at(n); }

  /// permA at an arbitrary dictionary index, when the table ranks that string.
  std::optional<std::uint64_t> rankOfDictIndex(std::uint64_t d) const {
    auto r = table_->rankOf(detail::ternaryDigits(d));
    return r ? std::optional<std::uint64_t>(*r) : std::nullopt;
  }
  /// permB at any rank below the table's final count.
  std::uint64_t dictIndexOfRank(std::size_t rank) const { return table_->dictIndexAt(rank); }
  std::size_t rankedCount() const { return table_->finalCount(); }

  const std::vector<std::uint64_t> &dictToAscendingTable() const { return toAscending_; }
  const std::vector<std::uint64_t> &ascendingToDictTable() const { return toDict_; }

private:
  std::optional<detail::AscendingTable> table_;
  std::vector<std::uint64_t> toDict_;
  std::vector<std::uint64_t> toAscending_;
};

inline std::uint64_t permA(std::uint64_t n) { return OrderPermutations(n + 1).dictToAscending(n); }
inline std::uint64_t permB(std::uint64_t n) { return OrderPermutations(n + 1).ascendingToDict(n); }

/// Positive integers whose base 1.5 numeral has an even number of H
/// digits, i.e. an integral digit sum (A256785).
inline std::vector<std::uint64_t> evenHFilter(std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::uint64_t n = 1; out.size() < count; ++n) {
    std::size_t halves = 0;
    for (auto d : encodeInteger15(n).digits)
      halves += d == Digit15::Half;
    if (halves % 2 == 0)
      out.push_back(n);
  }
  return out;
}

} // namespace threehalves
