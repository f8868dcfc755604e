#pragma once

// Bounded checks of the structural properties of both numeral systems and
// of the 3-free layers. Each suite returns the number of instances checked
// and, on failure, a witness.

#include "base15.hpp"
#include "base32.hpp"
#include "expansions.hpp"
#include "machine.hpp"
#include "stanley.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace threehalves {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checked = 0;
  std::string witness;
};

struct SuiteParams {
  std::optional<std::uint64_t> limit; ///< suite-specific size; default when unset
  std::uint64_t seed = 20181103;
};

namespace lemmas {

namespace detail {

inline SuiteResult fail(SuiteResult r, std::string witness) {
  r.passed = false;
  r.witness = std::move(witness);
  return r;
}

/// value * 2^bits as an integer; the value must be a dyadic with denominator
/// dividing 2^bits.
inline BigInt scaledDyadic(const ExactRational &v, unsigned bits) {
  BigInt scale = BigInt(1) << bits;
  if (scale % v.denominator() != 0)
    throw std::logic_error("value " + v.str() + " is not a dyadic of the expected precision");
  return v.numerator() * (scale / v.denominator());
}

inline std::string lastDigits(const Numeral32 &s, std::size_t k) {
  std::string t = toString(s);
  if (t.size() < k)
    t.insert(0, k - t.size(), '0');
  return t.substr(t.size() - k);
}

} // namespace detail

/// value(runMachine(n)) == n for n <= limit in bases 2/1, 3/2 and 6/4.
inline SuiteResult roundTrip(std::uint64_t limit = 100000) {
  SuiteResult r{"roundtrip", true, 0, {}};
  for (MachineConfig cfg : {MachineConfig{1, 2}, MachineConfig{2, 3}, MachineConfig{4, 6}})
    for (std::uint64_t n = 0; n <= limit; ++n, ++r.checked)
      if (valueOfNumeral(runMachine(n, cfg).numeral) != ExactRational(n))
        return detail::fail(r, "n=" + std::to_string(n) + " a=" + std::to_string(cfg.a));
  return r;
}

/// Exploding boxes in random order and random batch sizes reaches the same
/// stable state as the canonical schedule.
inline SuiteResult confluence(std::uint64_t limit, std::uint64_t seed) {
  SuiteResult r{"confluence", true, 0, {}};
  std::mt19937_64 rng(seed);
  for (MachineConfig cfg : {MachineConfig{1, 2}, MachineConfig{2, 3}, MachineConfig{4, 6}})
    for (std::uint64_t n = 0; n <= limit; ++n, ++r.checked) {
      std::vector<std::uint64_t> boxes{n};
      for (;;) {
        std::vector<std::size_t> full;
        for (std::size_t k = 0; k < boxes.size(); ++k)
          if (boxes[k] >= cfg.b)
            full.push_back(k);
        if (full.empty())
          break;
        std::size_t k = full[rng() % full.size()];
        std::uint64_t times = 1 + rng() % (boxes[k] / cfg.b);
        if (k + 1 == boxes.size())
          boxes.push_back(0);
        boxes[k] -= times * cfg.b;
        boxes[k + 1] += times * cfg.a;
      }
      while (boxes.size() > 1 && boxes.back() == 0)
        boxes.pop_back();
      auto canonical = runMachine(n, cfg).numeral.intDigits;
      std::vector<std::uint32_t> random(boxes.rbegin(), boxes.rend());
      if (canonical != random)
        return detail::fail(r, "n=" + std::to_string(n) + " a=" + std::to_string(cfg.a));
    }
  return r;
}

/// value32 and value15 take distinct values on distinct strings of length
/// at most maxLen.
inline SuiteResult injectivity(std::uint64_t maxLen = 12) {
  SuiteResult r{"injectivity", true, 0, {}};
  for (bool half : {false, true}) {
    std::vector<BigInt> keys;
    Dictionary32Enumerator e;
    for (; e.current().digits.size() <= maxLen; e.next()) {
      const auto &s = e.current();
      ExactRational v = half ? value15(map32to15(s)) : value32(s);
      keys.push_back(detail::scaledDyadic(v, static_cast<unsigned>(maxLen)));
    }
    r.checked += keys.size();
    std::sort(keys.begin(), keys.end());
    auto dup = std::adjacent_find(keys.begin(), keys.end());
    if (dup != keys.end())
      return detail::fail(r, std::string(half ? "base 1.5" : "base 3/2") + " scaled value " + dup->str());
  }
  return r;
}

/// The last k digits of encode32(n) have minimal period exactly 3^k on
/// [0, 4 * 3^k], for k = 1..maxK.
inline SuiteResult lastDigitPeriod(std::uint64_t maxK = 5) {
  SuiteResult r{"period", true, 0, {}};
  for (std::size_t k = 1; k <= maxK; ++k) {
    std::uint64_t period = 1;
    for (std::size_t i = 0; i < k; ++i)
      period *= 3;
    const std::uint64_t top = 4 * period;
    std::vector<std::string> tails;
    for (std::uint64_t n = 0; n <= top; ++n)
      tails.push_back(detail::lastDigits(encode32(n), k));
    auto isPeriod = [&](std::uint64_t p) {
      for (std::uint64_t n = 0; n + p <= top; ++n)
        if (tails[n] != tails[n + p])
          return false;
      return true;
    };
    ++r.checked;
    if (!isPeriod(period))
      return detail::fail(r, "k=" + std::to_string(k) + " is not periodic with 3^k");
    for (std::uint64_t p = 1; p < period; ++p)
      if (isPeriod(p))
        return detail::fail(r, "k=" + std::to_string(k) + " has smaller period " + std::to_string(p));
  }
  return r;
}

/// Dropping the last digit of encode32(n) gives encode32(m) for an integer
/// m < n. By induction on n this covers every proper prefix.
inline SuiteResult prefixClosure(std::uint64_t limit = 100000) {
  SuiteResult r{"prefix", true, 0, {}};
  for (std::uint64_t n = 1; n <= limit; ++n, ++r.checked) {
    Numeral32 s = encode32(n);
    if (s.digits.size() == 1)
      continue;
    s.digits.pop_back();
    ExactRational v = value32(s);
    if (!v.isInteger() || encode32(toUint64(v)) != s)
      return detail::fail(r, "n=" + std::to_string(n));
  }
  return r;
}

/// Leading digits: base 3/2 numerals of n >= 2 start with 2, of n >= 8 with
/// 210 or 212; base 1.5 numerals of n >= 1 start with 1, of n > 3 with 1H0
/// or 1H1.
inline SuiteResult leadingDigits(std::uint64_t limit = 100000) {
  SuiteResult r{"leading", true, 0, {}};
  for (std::uint64_t n = 1; n <= limit; ++n, ++r.checked) {
    std::string s = toString(encode32(n));
    std::string h = toString(encodeInteger15(n));
    bool ok = (n < 2 || s[0] == '2') && (n < 8 || s.rfind("210", 0) == 0 || s.rfind("212", 0) == 0) &&
              h[0] == '1' && (n <= 3 || h.rfind("1H0", 0) == 0 || h.rfind("1H1", 0) == 0);
    if (!ok)
      return detail::fail(r, "n=" + std::to_string(n) + " " + s + " " + h);
  }
  return r;
}

/// Dictionary order in base 1.5 goes up, up, down: for 3k+3 < limit,
/// B_3k < B_3k+1 < B_3k+2 > B_3k+3 and B_3k+2 = B_3k+1 + 1/2 = B_3k + 1.
inline SuiteResult upUpDown(std::uint64_t limit = 10000) {
  SuiteResult r{"up-up-down", true, 0, {}};
  auto dict = dictionary15(limit);
  std::vector<ExactRational> v;
  v.reserve(dict.size());
  for (const auto &s : dict)
    v.push_back(value15(s));
  const ExactRational half(1, 2);
  for (std::uint64_t k = 0; 3 * k + 3 < limit; ++k, ++r.checked) {
    const auto &a = v[3 * k], &b = v[3 * k + 1], &c = v[3 * k + 2], &d = v[3 * k + 3];
    if (!(a < b && b < c && c > d && c == b + half && c == a + ExactRational(1)))
      return detail::fail(r, "k=" + std::to_string(k) + " at " + toString(dict[3 * k]));
  }
  return r;
}

/// value32(map15to32(s)) == 2 value15(s) for all strings of length <= maxLen.
inline SuiteResult isomorphism(std::uint64_t maxLen = 10) {
  SuiteResult r{"isomorphism", true, 0, {}};
  for (Dictionary32Enumerator e; e.current().digits.size() <= maxLen; e.next(), ++r.checked) {
    Numeral15 s = map32to15(e.current());
    if (value32(map15to32(s)) != ExactRational(2) * value15(s))
      return detail::fail(r, toString(s));
  }
  return r;
}

/// digitSum32(2n) == 2 * (digit sum of the base 1.5 numeral of n).
inline SuiteResult digitSumRelation(std::uint64_t limit = 10000) {
  SuiteResult r{"digit-sum", true, 0, {}};
  for (std::uint64_t n = 0; n <= limit; ++n, ++r.checked)
    if (ExactRational(digitSum32(2 * n)) != ExactRational(2) * digitSum15(encodeInteger15(n)))
      return detail::fail(r, "n=" + std::to_string(n));
  return r;
}

/// Repeated increment15 from "0" agrees with encodeInteger15 and adds one
/// to the value each time.
inline SuiteResult increment(std::uint64_t limit = 100000) {
  SuiteResult r{"increment", true, 0, {}};
  Numeral15 s;
  for (std::uint64_t n = 1; n <= limit; ++n, ++r.checked) {
    ExactRational before = value15(s);
    s = increment15(s);
    if (s != encodeInteger15(n) || value15(s) != before + ExactRational(1))
      return detail::fail(r, "n=" + std::to_string(n) + " got " + toString(s));
  }
  return r;
}

/// For random p/q with p, q <= 1000 and D <= 40, every policy satisfies
/// value + remainder == x with remainder >= 0, uses only its own digits and
/// emits exactly D fractional digits. Also checks that expanding 2x over
/// doubled digits is the digit map of the expansion of x, and that the
/// {0,1} greedy expansion of 2x is the {0,H} expansion of x with H -> 1.
inline SuiteResult expansionExactness(std::uint64_t count = 200, std::uint64_t seed = 20181103) {
  SuiteResult r{"exactness", true, 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 1000), digits(0, 40);
  const ExpansionPolicy policies[] = {ExpansionPolicy::Greedy01, ExpansionPolicy::Lazy01, ExpansionPolicy::OnlyH0,
                                      ExpansionPolicy::OnlyH1, ExpansionPolicy::MinLeftover,
                                      ExpansionPolicy::FiniteInteger};
  for (std::uint64_t i = 0; i < count; ++i) {
    const ExactRational x(num(rng), num(rng));
    const unsigned D = static_cast<unsigned>(digits(rng));
    const std::string tag = "x=" + x.str() + " D=" + std::to_string(D);
    for (auto policy : policies) {
      if (policy == ExpansionPolicy::FiniteInteger && !x.isInteger())
        continue;
      ++r.checked;
      Expansion e = expand(x, policy, D);
      const std::string where = tag + " policy=" + std::string(policyName(policy));
      if (e.numeral.frac.size() != D)
        return detail::fail(r, where + ": wrong fractional length");
      if (e.remainder.sign() < 0 || value15(e.numeral) + e.remainder != x)
        return detail::fail(r, where + ": value + remainder != x");
      // Zeros ahead of the leading digit are padding, not expansion digits.
      auto alphabet = policyAlphabet(policy);
      std::vector<Digit15> all = e.numeral.digits;
      all.insert(all.end(), e.numeral.frac.begin(), e.numeral.frac.end());
      auto lead = std::find_if(all.begin(), all.end(), [](Digit15 d) { return d != Digit15::Zero; });
      for (auto it = lead; it != all.end(); ++it)
        if (std::find(alphabet.begin(), alphabet.end(), *it) == alphabet.end())
          return detail::fail(r, where + ": digit outside alphabet");

      Expansion32 doubled = expandDoubled32(ExactRational(2) * x, policy, D);
      if (doubled.numeral != map15to32(e.numeral) || doubled.remainder != ExactRational(2) * e.remainder)
        return detail::fail(r, where + ": doubling does not commute");
    }
    Expansion g = expand(ExactRational(2) * x, ExpansionPolicy::Greedy01, D);
    Expansion h = expand(x, ExpansionPolicy::OnlyH0, D);
    for (auto *part : {&h.numeral.digits, &h.numeral.frac})
      for (auto &d : *part)
        if (d == Digit15::Half)
          d = Digit15::One;
    if (g.numeral != h.numeral)
      return detail::fail(r, tag + ": greedy01(2x) differs from h0(x) with H -> 1");
  }
  return r;
}

/// Every base 3/2 string of length <= maxLen lies in exactly one S_k.
inline SuiteResult scriptCover(std::uint64_t maxLen = 8) {
  SuiteResult r{"script-cover", true, 0, {}};
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < maxLen; ++i)
    total *= 3;
  // Strings of length <= maxLen have value below 4 (3/2)^maxLen, and every
  // element of S_k has value at least 2k.
  const ExactRational ceiling = ExactRational(4) * powBase(threeHalves(), static_cast<long>(maxLen));
  std::vector<std::uint32_t> hits(total, 0);
  for (std::uint64_t k = 0; ExactRational(2 * k) < ceiling; ++k)
    for (const auto &s : scriptLayerUpToLength(k, maxLen).elements)
      ++hits.at(ternaryValue(s));
  for (std::uint64_t i = 0; i < total; ++i, ++r.checked)
    if (hits[i] != 1)
      return detail::fail(r, toString(Numeral32{::threehalves::detail::ternaryDigits(i), {}}) + " lies in " +
                                 std::to_string(hits[i]) + " layers");
  return r;
}

/// For k <= maxK, the first `terms` elements of S_k are 3-free both as base
/// 3/2 values and read in ternary, and satisfy the two-out-of-three property.
inline SuiteResult scriptThreeFree(std::uint64_t maxK = 10, std::size_t terms = 100) {
  SuiteResult r{"three-free", true, 0, {}};
  for (std::uint64_t k = 0; k <= maxK; ++k, ++r.checked) {
    auto layer = scriptLayer(k, terms);
    std::vector<ExactRational> values;
    std::vector<std::uint64_t> ternary;
    for (const auto &s : layer.elements) {
      values.push_back(value32(s));
      ternary.push_back(ternaryValue(s));
    }
    if (!isThreeFree(values))
      return detail::fail(r, "S_" + std::to_string(k) + " base 3/2 values");
    if (!isThreeFree(ternary))
      return detail::fail(r, "S_" + std::to_string(k) + " ternary values");
    auto two = twoOutOfThree(layer.elements);
    if (!two.holds)
      return detail::fail(r, "S_" + std::to_string(k) + " two-out-of-three at suffix " + two.witness);
  }
  return r;
}

/// The last ternary digits of a, a+d, a+2d are all equal or all distinct.
inline SuiteResult apDigits(std::uint64_t count = 10000, std::uint64_t seed = 20181103) {
  SuiteResult r{"ap-digits", true, 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> start(0, 1000000000), step(1, 1000000000);
  for (std::uint64_t i = 0; i < count; ++i, ++r.checked) {
    std::uint64_t a = start(rng), d = step(rng);
    unsigned x = a % 3, y = (a + d) % 3, z = (a + 2 * d) % 3;
    bool same = x == y && y == z;
    bool distinct = x != y && y != z && x != z;
    if (!same && !distinct)
      return detail::fail(r, "a=" + std::to_string(a) + " d=" + std::to_string(d));
  }
  return r;
}

/// Greedy layers are a partition of [0, limit] into 3-free sets, and layer
/// 0 is exactly the integers with no ternary digit 2.
inline SuiteResult greedyLayers(std::uint64_t limit = 10000) {
  SuiteResult r{"greedy-layers", true, 0, {}};
  Partition p = greedyPartition(limit);
  std::vector<std::uint32_t> seen(limit + 1, 0);
  for (std::size_t j = 0; j < p.layers.size(); ++j) {
    ++r.checked;
    if (!isThreeFree(p.layers[j]))
      return detail::fail(r, "layer " + std::to_string(j) + " has a progression");
    for (auto n : p.layers[j])
      ++seen[n];
  }
  for (std::uint64_t n = 0; n <= limit; ++n) {
    if (seen[n] != 1)
      return detail::fail(r, std::to_string(n) + " is not in exactly one layer");
    bool noTwo = true;
    for (std::uint64_t m = n; m; m /= 3)
      noTwo = noTwo && m % 3 != 2;
    if (noTwo != (p.layerOf[n] == 0))
      return detail::fail(r, std::to_string(n) + " layer 0 membership disagrees with its ternary digits");
  }
  return r;
}

} // namespace lemmas

struct SuiteEntry {
  std::string_view name;
  std::function<SuiteResult(const SuiteParams &)> run;
};

/// Registry used by `verify lemmas`; defaults are the full acceptance sizes.
inline const std::vector<SuiteEntry> &lemmaSuites() {
  static const std::vector<SuiteEntry> all = {
      {"roundtrip", [](const SuiteParams &p) { return lemmas::roundTrip(p.limit.value_or(100000)); }},
      {"confluence", [](const SuiteParams &p) { return lemmas::confluence(p.limit.value_or(10000), p.seed); }},
      {"injectivity", [](const SuiteParams &p) { return lemmas::injectivity(p.limit.value_or(12)); }},
      {"period", [](const SuiteParams &p) { return lemmas::lastDigitPeriod(p.limit.value_or(5)); }},
      {"prefix", [](const SuiteParams &p) { return lemmas::prefixClosure(p.limit.value_or(100000)); }},
      {"leading", [](const SuiteParams &p) { return lemmas::leadingDigits(p.limit.value_or(100000)); }},
      {"up-up-down", [](const SuiteParams &p) { return lemmas::upUpDown(p.limit.value_or(10000)); }},
      {"isomorphism", [](const SuiteParams &p) { return lemmas::isomorphism(p.limit.value_or(10)); }},
      {"digit-sum", [](const SuiteParams &p) { return lemmas::digitSumRelation(p.limit.value_or(10000)); }},
      {"increment", [](const SuiteParams &p) { return lemmas::increment(p.limit.value_or(100000)); }},
      {"exactness", [](const SuiteParams &p) { return lemmas::expansionExactness(p.limit.value_or(200), p.seed); }},
      {"script-cover", [](const SuiteParams &p) { return lemmas::scriptCover(p.limit.value_or(8)); }},
      {"three-free", [](const SuiteParams &p) { return lemmas::scriptThreeFree(p.limit.value_or(10), 100); }},
      {"ap-digits", [](const SuiteParams &p) { return lemmas::apDigits(p.limit.value_or(10000), p.seed); }},
      {"greedy-layers", [](const SuiteParams &p) { return lemmas::greedyLayers(p.limit.value_or(10000)); }},
  };
  return all;
}

} // namespace threehalves
