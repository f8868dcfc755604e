#pragma once

// The a <- b exploding-dots machine. Boxes are numbered from the right
// starting at 0; whenever a box holds at least b dots, b of them are
// removed and a dots are added to the box on its left. The stable state,
// read left to right, is the base b/a representation of the initial count.

#include "exactnum.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace threehalves {

struct MachineConfig {
  std::uint32_t a = 2; ///< dots added to the left per explosion
  std::uint32_t b = 3; ///< dots removed per explosion

  void validate() const {
    if (a < 1 || b <= a)
      throw std::invalid_argument("machine needs b > a >= 1, got a=" + std::to_string(a) +
                                  " b=" + std::to_string(b));
  }

  ExactRational base() const { return ExactRational(b, a); }

  friend bool operator==(const MachineConfig &, const MachineConfig &) = default;
};

/// A digit string in base b/a. Digits are stored most significant first.
struct Numeral {
  MachineConfig config;
  std::vector<std::uint32_t> intDigits{0};
  std::vector<std::uint32_t> fracDigits;

  friend bool operator==(const Numeral &, const Numeral &) = default;
};

struct Explosion {
  std::size_t box = 0;
  std::uint64_t before = 0; ///< count in `box` before the explosion
  std::uint64_t after = 0;
};

struct MachineState {
  std::vector<std::uint64_t> boxes; ///< index 0 is the rightmost box
  std::vector<Explosion> trace;
};

struct MachineRun {
  Numeral numeral;
  MachineState state;
};

namespace detail {

/// Stabilizes boxes by always exploding the lowest over-full box. When
/// `trace` is null the explosions of one box are applied in bulk.
inline void stabilize(std::vector<std::uint64_t> &boxes, const MachineConfig &cfg,
                      std::vector<Explosion> *trace) {
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    if (boxes[k] < cfg.b)
      continue;
    if (k + 1 == boxes.size())
      boxes.push_back(0);
    if (trace) {
      while (boxes[k] >= cfg.b) {
        trace->push_back({k, boxes[k], boxes[k] - cfg.b});
        boxes[k] -= cfg.b;
        boxes[k + 1] += cfg.a;
      }
    } else {
      std::uint64_t q = boxes[k] / cfg.b;
      boxes[k] -= q * cfg.b;
      boxes[k + 1] += q * cfg.a;
    }
  }
}

inline std::vector<std::uint32_t> boxesToDigits(const std::vector<std::uint64_t> &boxes) {
  std::size_t top = boxes.size();
  while (top > 1 && boxes[top - 1] == 0)
    --top;
  std::vector<std::uint32_t> digits;
  digits.reserve(top);
  for (std::size_t i = top; i-- > 0;)
    digits.push_back(static_cast<std::uint32_t>(boxes[i]));
  if (digits.empty())
    digits.push_back(0);
  return digits;
}

/// sum of digits[j] * (b/a)^(len-1-j) scaled by a^(len-1), via Horner.
inline BigInt scaledHorner(const std::vector<std::uint32_t> &digits, const MachineConfig &cfg) {
  BigInt acc = 0;
  BigInt apow = 1;
  for (std::uint32_t d : digits) {
    acc = acc * cfg.b + apow * d;
    apow *= cfg.a;
  }
  return acc;
}

} // namespace detail

/// Places n dots in box 0 and runs the machine to a stable state. The trace
/// lists single explosions in canonical order (lowest over-full box first);
/// it is only recorded when `withTrace` is set.
inline MachineRun runMachine(std::uint64_t n, const MachineConfig &cfg, bool withTrace = false) {
  cfg.validate();
  MachineRun run;
  run.state.boxes = {n};
  detail::stabilize(run.state.boxes, cfg, withTrace ? &run.state.trace : nullptr);
  run.numeral.config = cfg;
  run.numeral.intDigits = detail::boxesToDigits(run.state.boxes);
  return run;
}

/// Exact value: sum of d_i (b/a)^i over all positions, fractional ones included.
inline ExactRational valueOfNumeral(const Numeral &x) {
  std::vector<std::uint32_t> all = x.intDigits;
  all.insert(all.end(), x.fracDigits.begin(), x.fracDigits.end());
  const std::size_t m = all.size() - 1;
  BigInt num = detail::scaledHorner(all, x.config);
  BigInt den = boost::multiprecision::pow(BigInt(x.config.a), static_cast<unsigned>(m));
  ExactRational v(std::move(num), std::move(den));
  if (!x.fracDigits.empty())
    v *= powBase(x.config.base(), -static_cast<long>(x.fracDigits.size()));
  return v;
}

/// Adds n dots to box 0 of the stable state `x` and re-stabilizes.
inline Numeral addDots(const Numeral &x, std::uint64_t n) {
  if (!x.fracDigits.empty())
    throw std::invalid_argument("addDots: numeral has fractional digits");
  x.config.validate();
  std::vector<std::uint64_t> boxes(x.intDigits.rbegin(), x.intDigits.rend());
  boxes[0] += n;
  detail::stabilize(boxes, x.config, nullptr);
  return Numeral{x.config, detail::boxesToDigits(boxes), {}};
}

/// Renders digits as contiguous characters, with '.' before fractional
/// digits. Only bases with b <= 10 have a single-character digit syntax.
inline std::string toString(const Numeral &x) {
  if (x.config.b > 10)
    throw std::domain_error("cannot render digits of a machine with b > 10");
  std::string s;
  for (auto d : x.intDigits)
    s += static_cast<char>('0' + d);
  if (!x.fracDigits.empty()) {
    s += '.';
    for (auto d : x.fracDigits)
      s += static_cast<char>('0' + d);
  }
  return s;
}

inline Numeral parseNumeral(std::string_view text, const MachineConfig &cfg) {
  cfg.validate();
  if (cfg.b > 10)
    throw std::domain_error("cannot parse digits of a machine with b > 10");
  Numeral x{cfg, {}, {}};
  bool frac = false;
  for (char c : text) {
    if (c == '.' && !frac) {
      frac = true;
      continue;
    }
    if (c < '0' || c >= static_cast<char>('0' + cfg.b))
      throw std::invalid_argument("invalid digit '" + std::string(1, c) + "' for base " +
                                  std::to_string(cfg.b) + "/" + std::to_string(cfg.a));
    (frac ? x.fracDigits : x.intDigits).push_back(static_cast<std::uint32_t>(c - '0'));
  }
  if (x.intDigits.empty())
    throw std::invalid_argument("numeral has no integer digits: '" + std::string(text) + "'");
  if (x.intDigits.size() > 1 && x.intDigits.front() == 0)
    throw std::invalid_argument("numeral has a leading zero: '" + std::string(text) + "'");
  return x;
}

/// "box k: c → c−b, box k+1 += a"
inline std::string formatExplosion(const Explosion &e, const MachineConfig &cfg) {
  return "box " + std::to_string(e.box) + ": " + std::to_string(e.before) + " → " +
         std::to_string(e.after) + ", box " + std::to_string(e.box + 1) + " += " + std::to_string(cfg.a);
}

} // namespace threehalves
