#pragma once

// Named sequences exported by the command-line tool.

#include "base15.hpp"
#include "base32.hpp"
#include "stanley.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace threehalves {

struct SequenceInfo {
  std::string_view id;
  std::string_view description;
};

inline const std::vector<SequenceInfo> &supportedSequences() {
  static const std::vector<SequenceInfo> all = {
      {"a005836", "greedy 3-free layer S_0 (no digit 2 in ternary)"},
      {"a024629", "n in base 3/2, digits read as a decimal numeral"},
      {"a244040", "digit sum of n in base 3/2"},
      {"a256785", "positive n with an even number of H digits in base 1.5"},
      {"a261691", "indices of integers among base 3/2 strings in dictionary order"},
      {"a265316", "first terms of the greedy 3-free layers"},
      {"a320035", "indices of integers among base 1.5 strings in ascending order"},
      {"a320272", "indices of integers among base 3/2 strings in ascending order"},
      {"a320273", "b(n) = k when B_k = A_n"},
      {"a320274", "a(n) = k when A_k = B_n"},
      {"a323398", "greedy 3-free layer S_1"},
      {"a323418", "greedy 3-free layer S_2"},
      {"a323419", "greedy 3-free layer S_3"},
  };
  return all;
}

inline std::string supportedSequenceList() {
  std::string out;
  for (const auto &s : supportedSequences())
    out += (out.empty() ? "" : ", ") + std::string(s.id);
  return out;
}

/// First `count` terms of sequence `id`. `method` only applies to a265316
/// and defaults to the greedy partition.
inline std::vector<BigInt> sequenceTerms(std::string_view id, std::size_t count,
                                         std::optional<CrossMethod> method = std::nullopt) {
  auto widen = [](const auto &v) { return std::vector<BigInt>(v.begin(), v.end()); };
  auto layer = [&](std::size_t k) {
    Partition p = greedyPartitionCovering(k + 1, count);
    return widen(std::vector<std::uint64_t>(p.layers[k].begin(),
                                            p.layers[k].begin() + static_cast<std::ptrdiff_t>(count)));
  };
  if (method && id != "a265316")
    throw std::invalid_argument("--method only applies to a265316");

  std::vector<BigInt> out;
  if (id == "a024629") {
    for (std::uint64_t n = 0; n < count; ++n)
      out.emplace_back(toString(encode32(n)));
  } else if (id == "a244040") {
    for (std::uint64_t n = 0; n < count; ++n)
      out.emplace_back(digitSum32(n));
  } else if (id == "a256785") {
    out = widen(evenHFilter(count));
  } else if (id == "a261691") {
    out = widen(dictIntIndices32(count));
  } else if (id == "a265316") {
    out = widen(crossSequence(count, method.value_or(CrossMethod::Greedy)));
  } else if (id == "a320035") {
    out = widen(intIndicesAscending15(count));
  } else if (id == "a320272") {
    out = widen(ascendingIntIndices32(count));
  } else if (id == "a320273") {
    out = widen(OrderPermutations(count).ascendingToDictTable());
  } else if (id == "a320274") {
    out = widen(OrderPermutations(count).dictToAscendingTable());
  } else if (id == "a005836") {
    out = layer(0);
  } else if (id == "a323398") {
    out = layer(1);
  } else if (id == "a323418") {
    out = layer(2);
  } else if (id == "a323419") {
    out = layer(3);
  } else {
    throw std::invalid_argument("unknown sequence '" + std::string(id) + "'; supported: " + supportedSequenceList());
  }
  return out;
}

} // namespace threehalves
