#pragma once

// Radix-point expansions of positive rationals in base 3/2 over restricted
// digit alphabets. Output is truncated to exactly D fractional digits and
// carries the exact value that the digits do not yet account for.

#include "base15.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace threehalves {

enum class ExpansionPolicy {
  Greedy01,     ///< digits {0,1}, largest power first
  Lazy01,       ///< digits {0,1}, a 1 only when the tail cannot cover the rest
  OnlyH0,       ///< digits {0,H}, largest half-power first
  OnlyH1,       ///< digits {H,1}: (3/2)^k as an H tail plus the {0,H} digits of the rest
  MinLeftover,  ///< digits {0,H,1}, largest of (3/2)^k and (3/2)^k/2 first
  FiniteInteger ///< the finite integer-like numeral; integers only
};

inline std::string_view policyName(ExpansionPolicy p) {
  switch (p) {
  case ExpansionPolicy::Greedy01: return "greedy01";
  case ExpansionPolicy::Lazy01: return "lazy01";
  case ExpansionPolicy::OnlyH0: return "h0";
  case ExpansionPolicy::OnlyH1: return "h1";
  case ExpansionPolicy::MinLeftover: return "minleft";
  case ExpansionPolicy::FiniteInteger: return "finite";
  }
  return "?";
}

inline ExpansionPolicy parsePolicy(std::string_view name) {
  for (auto p : {ExpansionPolicy::Greedy01, ExpansionPolicy::Lazy01, ExpansionPolicy::OnlyH0,
                 ExpansionPolicy::OnlyH1, ExpansionPolicy::MinLeftover, ExpansionPolicy::FiniteInteger})
    if (policyName(p) == name)
      return p;
  throw std::invalid_argument("unknown expansion policy '" + std::string(name) + "'");
}

/// Digits each policy may emit, as base 1.5 digits.
inline std::vector<Digit15> policyAlphabet(ExpansionPolicy p) {
  using enum Digit15;
  switch (p) {
  case ExpansionPolicy::Greedy01:
  case ExpansionPolicy::Lazy01: return {Zero, One};
  case ExpansionPolicy::OnlyH0: return {Zero, Half};
  case ExpansionPolicy::OnlyH1: return {Half, One};
  default: return {Zero, Half, One};
  }
}

struct Expansion {
  Numeral15 numeral;
  ExactRational remainder;
};

struct Expansion32 {
  Numeral32 numeral;
  ExactRational remainder;
};

namespace detail {

/// Digits keyed by position (0 = units, negative = fractional).
using Placements = std::map<long, Digit15>;

/// Largest k with scale * (3/2)^k <= r, together with that power. r > 0.
inline std::pair<long, ExactRational> topPosition(const ExactRational &r, const ExactRational &scale) {
  const ExactRational up(3, 2), down(2, 3);
  long k = 0;
  ExactRational p = scale;
  if (p <= r) {
    for (ExactRational next = p * up; next <= r; next *= up) {
      p = next;
      ++k;
    }
  } else {
    while (p > r) {
      p *= down;
      --k;
    }
  }
  return {k, p};
}

/// Scans positions from `top` down to -D, placing `digit` (worth
/// scale * (3/2)^k) whenever it fits in the remainder.
inline void scanGreedy(ExactRational &r, Digit15 digit, const ExactRational &scale, long D, Placements &out) {
  if (r.sign() <= 0)
    return;
  auto [k, p] = topPosition(r, scale);
  const ExactRational down(2, 3);
  for (; k >= -D && r.sign() > 0; --k, p *= down) {
    if (p <= r) {
      if (out.contains(k))
        throw std::logic_error("expansion placed two digits at one position");
      out[k] = digit;
      r -= p;
    }
  }
}

inline Numeral15 assemble(const Placements &placed, long D) {
  long top = 0;
  if (!placed.empty())
    top = std::max(top, placed.rbegin()->first);
  Numeral15 s{{}, {}};
  for (long k = top; k >= -D; --k) {
    auto it = placed.find(k);
    Digit15 d = it == placed.end() ? Digit15::Zero : it->second;
    if (k >= 0) {
      if (!(s.digits.empty() && d == Digit15::Zero && k > 0))
        s.digits.push_back(d);
    } else {
      s.frac.push_back(d);
    }
  }
  if (s.digits.empty())
    s.digits.push_back(Digit15::Zero);
  return s;
}

} // namespace detail

/// Expands x > 0 under `policy` with exactly D fractional digits.
inline Expansion expand(const ExactRational &x, ExpansionPolicy policy, unsigned fracDigits) {
  if (x.sign() <= 0)
    throw std::invalid_argument("expand: input must be positive, got " + x.str());
  const long D = static_cast<long>(fracDigits);
  const ExactRational one(1), half(1, 2);
  detail::Placements placed;
  ExactRational r = x;

  switch (policy) {
  case ExpansionPolicy::Greedy01:
    detail::scanGreedy(r, Digit15::One, one, D, placed);
    break;

  case ExpansionPolicy::OnlyH0:
    detail::scanGreedy(r, Digit15::Half, half, D, placed);
    break;

  case ExpansionPolicy::Lazy01: {
    auto [k, p] = detail::topPosition(r, one);
    const ExactRational down(2, 3);
    // The digits strictly below position k sum to at most 2 * (3/2)^k.
    for (; k >= -D && r.sign() > 0; --k, p *= down) {
      if (r > ExactRational(2) * p) {
        placed[k] = Digit15::One;
        r -= p;
      }
    }
    break;
  }

  case ExpansionPolicy::OnlyH1: {
    auto [k, p] = detail::topPosition(r, one);
    ExactRational d = r - p;
    // (3/2)^k is an H at every position below k; truncated at -D it
    // leaves (3/2)^min(k, -D) unrepresented.
    for (long i = k - 1; i >= -D; --i)
      placed[i] = Digit15::Half;
    detail::Placements rest;
    detail::scanGreedy(d, Digit15::Half, half, D, rest);
    for (auto [pos, digit] : rest) {
      if (pos >= k)
        throw std::logic_error("h1 expansion: remainder digit at or above the leading power");
      placed[pos] = Digit15::One;
    }
    r = d + powBase(threeHalves(), std::min(k, -D));
    break;
  }

  case ExpansionPolicy::MinLeftover:
    while (r.sign() > 0) {
      auto [k1, p1] = detail::topPosition(r, one);
      auto [kh, ph] = detail::topPosition(r, half);
      if (p1 == ph)
        throw std::logic_error("minleft: a power and a half-power coincide");
      const bool useOne = p1 > ph;
      const long k = useOne ? k1 : kh;
      if (k < -D)
        break;
      if (placed.contains(k))
        throw std::logic_error("minleft: two digits at one position");
      placed[k] = useOne ? Digit15::One : Digit15::Half;
      r -= useOne ? p1 : ph;
    }
    break;

  case ExpansionPolicy::FiniteInteger: {
    if (!x.isInteger())
      throw std::invalid_argument("finite expansion is only defined for integers, got " + x.str());
    Numeral15 s = encodeInteger15(toUint64(x));
    s.frac.assign(fracDigits, Digit15::Zero);
    return {s, ExactRational()};
  }
  }

  return {detail::assemble(placed, D), r};
}

/// Expansion of x in base 3/2 over doubled digits, obtained from the base
/// 1.5 expansion of x/2: {0,1} -> {0,2}, {0,H} -> {0,1}, {H,1} -> {1,2}.
inline Expansion32 expandDoubled32(const ExactRational &x, ExpansionPolicy policy, unsigned fracDigits) {
  Expansion e = expand(x / ExactRational(2), policy, fracDigits);
  return {map15to32(e.numeral), e.remainder * ExactRational(2)};
}

} // namespace threehalves
