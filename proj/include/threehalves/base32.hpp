#pragma once

// Base 3/2: the 2 <- 3 machine, digits {0,1,2}.

#include "machine.hpp"
#include "ordering.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace threehalves {

inline constexpr MachineConfig kBase32{2, 3};

/// A base 3/2 numeral. Digits most significant first; `frac` is only
/// populated by expansions.
struct Numeral32 {
  std::vector<std::uint8_t> digits{0};
  std::vector<std::uint8_t> frac;

  friend bool operator==(const Numeral32 &, const Numeral32 &) = default;
};

inline Numeral toMachineNumeral(const Numeral32 &s) {
  return Numeral{kBase32, {s.digits.begin(), s.digits.end()}, {s.frac.begin(), s.frac.end()}};
}

inline Numeral32 fromMachineNumeral(const Numeral &x) {
  if (x.config != kBase32)
    throw std::invalid_argument("numeral is not in base 3/2");
  return Numeral32{{x.intDigits.begin(), x.intDigits.end()}, {x.fracDigits.begin(), x.fracDigits.end()}};
}

inline Numeral32 encode32(std::uint64_t n) { return fromMachineNumeral(runMachine(n, kBase32).numeral); }

inline ExactRational value32(const Numeral32 &s) { return valueOfNumeral(toMachineNumeral(s)); }

inline Numeral32 addDots32(const Numeral32 &s, std::uint64_t n) {
  return fromMachineNumeral(addDots(toMachineNumeral(s), n));
}

inline std::string toString(const Numeral32 &s) { return toString(toMachineNumeral(s)); }

inline Numeral32 parse32(std::string_view text) { return fromMachineNumeral(parseNumeral(text, kBase32)); }

inline std::uint64_t digitSum32(std::uint64_t n) {
  std::uint64_t sum = 0;
  for (auto d : encode32(n).digits)
    sum += d;
  return sum;
}

/// Integer-like base 3/2 strings in dictionary order: "0", then by length,
/// then lexicographically with 0 < 1 < 2.
class Dictionary32Enumerator {
public:
  const Numeral32 &current() const { return current_; }
  std::uint64_t index() const { return index_; }

  void next() {
    detail::ternaryIncrement(current_.digits);
    ++index_;
  }

private:
  Numeral32 current_;
  std::uint64_t index_ = 0;
};

inline std::vector<Numeral32> dictionary32(std::size_t count) {
  std::vector<Numeral32> out;
  out.reserve(count);
  for (Dictionary32Enumerator e; out.size() < count; e.next())
    out.push_back(e.current());
  return out;
}

/// Integer-like strings sorted by base 3/2 value.
inline std::vector<Numeral32> ascending32(std::size_t count) {
  auto table = detail::AscendingTable::withFinalCount(count);
  std::vector<Numeral32> out;
  out.reserve(count);
  for (std::size_t r = 0; r < count; ++r)
    out.push_back(Numeral32{detail::ternaryDigits(table.dictIndexAt(r)), {}});
  return out;
}

/// Positions of integers in the ascending enumeration (A320272).
inline std::vector<std::uint64_t> ascendingIntIndices32(std::size_t count) {
  for (unsigned len = 1;; ++len) {
    detail::AscendingTable table(len);
    std::vector<std::uint64_t> out;
    for (std::size_t r = 0; r < table.finalCount() && out.size() < count; ++r)
      if (table.isIntegerAt32(r))
        out.push_back(r);
    if (out.size() == count)
      return out;
  }
}

/// Positions of integers in the dictionary enumeration (A261691).
inline std::vector<std::uint64_t> dictIntIndices32(std::size_t count) {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (Dictionary32Enumerator e; out.size() < count; e.next())
    if (detail::isIntegerValue32(e.current().digits))
      out.push_back(e.index());
  return out;
}

} // namespace threehalves
