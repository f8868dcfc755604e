#pragma once

// Greedy partition of the non-negative integers into 3-free layers, the
// base 3/2 layers S_k = S_0 + 2k, and the cross-sequence of first terms.

#include "base15.hpp"
#include "base32.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace threehalves {

/// Layer assignment of [0, bound]. layers[j] is ascending.
struct Partition {
  std::uint64_t bound = 0;
  std::vector<std::uint32_t> layerOf;
  std::vector<std::vector<std::uint64_t>> layers;
};

/// Processes n = 0..bound in order and puts n into the first layer holding
/// no x < y with 2y - x = n, opening a new layer when every existing one
/// would complete a progression.
inline Partition greedyPartition(std::uint64_t bound) {
  Partition p;
  p.bound = bound;
  p.layerOf.resize(bound + 1);
  for (std::uint64_t n = 0; n <= bound; ++n) {
    std::uint32_t j = 0;
    for (; j < p.layers.size(); ++j) {
      const auto &layer = p.layers[j];
      // Only y >= n/2 can pair with some x = 2y - n >= 0.
      auto y = std::lower_bound(layer.begin(), layer.end(), (n + 1) / 2);
      bool blocked = false;
      for (; y != layer.end(); ++y) {
        const std::uint64_t x = 2 * *y - n;
        if (p.layerOf[x] == j) {
          blocked = true;
          break;
        }
      }
      if (!blocked)
        break;
    }
    if (j == p.layers.size())
      p.layers.emplace_back();
    p.layers[j].push_back(n);
    p.layerOf[n] = j;
  }
  return p;
}

/// Greedy partition with at least `layers` layers of at least `terms`
/// elements each, doubling the bound from `start` as needed.
inline Partition greedyPartitionCovering(std::size_t layers, std::size_t terms, std::uint64_t start = 1024) {
  for (std::uint64_t bound = std::max<std::uint64_t>(start, 1);; bound *= 2) {
    Partition p = greedyPartition(bound);
    if (p.layers.size() >= layers &&
        std::all_of(p.layers.begin(), p.layers.begin() + static_cast<std::ptrdiff_t>(layers),
                    [&](const auto &l) { return l.size() >= terms; }))
      return p;
  }
}

/// Sum of d_i 3^i: the digit string read in ternary.
inline std::uint64_t ternaryValue(const Numeral32 &s) { return detail::ternaryIndex(s.digits); }

/// S_k in dictionary order: every string of S_0 (0/1 strings) plus 2k dots.
struct ScriptLayer {
  std::uint64_t k = 0;
  std::vector<Numeral32> elements;
};

/// Elements of S_k of length at most maxLen, in dictionary order. Adding
/// dots never shortens a string, so only S_0 inputs of length <= maxLen
/// are needed.
inline ScriptLayer scriptLayerUpToLength(std::uint64_t k, std::size_t maxLen) {
  ScriptLayer out{k, {}};
  std::vector<std::pair<std::uint64_t, Numeral32>> keyed;
  Numeral32 s; // "0"
  for (;;) {
    if (s.digits.size() > maxLen)
      break;
    Numeral32 t = addDots32(s, 2 * k);
    if (t.digits.size() <= maxLen)
      keyed.emplace_back(ternaryValue(t), std::move(t));
    // Binary successor.
    std::size_t i = s.digits.size();
    while (i > 0 && s.digits[i - 1] == 1)
      s.digits[--i] = 0;
    if (i == 0)
      s.digits.insert(s.digits.begin(), 1);
    else
      s.digits[i - 1] = 1;
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
  for (auto &[key, t] : keyed)
    out.elements.push_back(std::move(t));
  return out;
}

/// First `count` elements of S_k in dictionary order.
inline ScriptLayer scriptLayer(std::uint64_t k, std::size_t count) {
  for (std::size_t len = 1;; ++len) {
    ScriptLayer l = scriptLayerUpToLength(k, len);
    if (l.elements.size() >= count) {
      l.elements.resize(count);
      return l;
    }
  }
}

/// True when no three distinct elements satisfy x + z = 2y.
template <typename T> bool isThreeFree(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 2; j < values.size(); ++j) {
      T twiceMid = values[i] + values[j];
      // Look for y strictly between with 2y = x + z.
      auto lo = values.begin() + static_cast<std::ptrdiff_t>(i) + 1;
      auto hi = values.begin() + static_cast<std::ptrdiff_t>(j);
      auto it = std::lower_bound(lo, hi, twiceMid, [](const T &y, const T &t) { return y + y < t; });
      if (it != hi && *it + *it == twiceMid)
        return false;
    }
  return true;
}

struct TwoOutOfThreeReport {
  bool holds = true;          ///< no suffix is preceded by three distinct digits
  std::size_t lastDigits = 0; ///< distinct final digits
  std::size_t suffixes = 0;   ///< suffixes examined
  std::size_t realized = 0;   ///< suffixes preceded by exactly two digits
  std::string witness;        ///< first violating suffix, if any
};

/// Checks that the last digit takes at most two values and that, for every
/// suffix x, the digits immediately before x take at most two values.
/// Strings are compared as if padded on the left with zeros.
inline TwoOutOfThreeReport twoOutOfThree(const std::vector<Numeral32> &strings) {
  if (strings.empty())
    throw std::invalid_argument("twoOutOfThree: empty set");
  std::size_t maxLen = 0;
  for (const auto &s : strings)
    maxLen = std::max(maxLen, s.digits.size());
  std::vector<std::string> padded;
  padded.reserve(strings.size());
  for (const auto &s : strings)
    padded.push_back(std::string(maxLen - s.digits.size(), '0') + toString(s));

  TwoOutOfThreeReport rep;
  std::set<char> last;
  for (const auto &p : padded)
    last.insert(p.back());
  rep.lastDigits = last.size();
  if (last.size() > 2) {
    rep.holds = false;
    rep.witness = "<last digit>";
  }
  for (std::size_t m = 1; m < maxLen; ++m) {
    std::map<std::string, std::set<char>> before;
    for (const auto &p : padded)
      before[p.substr(maxLen - m)].insert(p[maxLen - m - 1]);
    for (const auto &[suffix, digits] : before) {
      ++rep.suffixes;
      if (digits.size() == 2)
        ++rep.realized;
      if (digits.size() > 2 && rep.holds) {
        rep.holds = false;
        rep.witness = suffix;
      }
    }
  }
  return rep;
}

enum class CrossMethod { Greedy, Reinterpret, DictIndex15, HalfA261691 };

inline std::string_view crossMethodName(CrossMethod m) {
  switch (m) {
  case CrossMethod::Greedy: return "greedy";
  case CrossMethod::Reinterpret: return "reinterpret";
  case CrossMethod::DictIndex15: return "dictindex15";
  case CrossMethod::HalfA261691: return "halfa261691";
  }
  return "?";
}

inline CrossMethod parseCrossMethod(std::string_view name) {
  for (auto m : {CrossMethod::Greedy, CrossMethod::Reinterpret, CrossMethod::DictIndex15, CrossMethod::HalfA261691})
    if (crossMethodName(m) == name)
      return m;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

/// First terms of the Stanley cross-sequence (A265316).
inline std::vector<std::uint64_t> crossSequence(std::size_t count, CrossMethod method) {
  std::vector<std::uint64_t> out;
  switch (method) {
  case CrossMethod::Greedy: {
    Partition p = greedyPartitionCovering(count, 1);
    for (std::size_t j = 0; j < count; ++j)
      out.push_back(p.layers[j].front());
    break;
  }
  case CrossMethod::Reinterpret:
    for (std::uint64_t n = 0; n < count; ++n)
      out.push_back(ternaryValue(encode32(2 * n)));
    break;
  case CrossMethod::DictIndex15:
    out = intIndicesDict15(count);
    break;
  case CrossMethod::HalfA261691: {
    auto all = dictIntIndices32(2 * count);
    for (std::size_t i = 0; i < all.size(); i += 2)
      out.push_back(all[i]);
    break;
  }
  }
  return out;
}

struct LayerComparison {
  std::uint64_t k = 0;
  std::vector<std::uint64_t> greedy;
  std::vector<std::uint64_t> reinterpreted; ///< ternary values of S_k
  std::optional<std::size_t> firstDivergence;
  bool agrees() const { return !firstDivergence; }
};

struct ConjectureReport {
  std::uint64_t bound = 0; ///< greedy partition bound used
  std::vector<LayerComparison> layers;
  bool allAgree() const {
    return std::all_of(layers.begin(), layers.end(), [](const auto &l) { return l.agrees(); });
  }
};

/// Compares, for k = 0..kMax, the first `terms` elements of greedy layer k
/// with S_k read in ternary.
inline ConjectureReport verifyConjecture(std::uint64_t kMax, std::size_t terms, std::uint64_t greedyBound = 100000) {
  ConjectureReport rep;
  Partition p = greedyPartitionCovering(kMax + 1, terms, greedyBound);
  rep.bound = p.bound;
  for (std::uint64_t k = 0; k <= kMax; ++k) {
    LayerComparison c;
    c.k = k;
    c.greedy.assign(p.layers[k].begin(), p.layers[k].begin() + static_cast<std::ptrdiff_t>(terms));
    for (const auto &s : scriptLayer(k, terms).elements)
      c.reinterpreted.push_back(ternaryValue(s));
    for (std::size_t i = 0; i < terms; ++i)
      if (c.greedy[i] != c.reinterpreted[i]) {
        c.firstDivergence = i;
        break;
      }
    rep.layers.push_back(std::move(c));
  }
  return rep;
}

} // namespace threehalves
