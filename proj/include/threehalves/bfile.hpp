#pragma once

// OEIS b-file interchange: one "index value" pair per line, indices
// consecutive from the offset. Lines starting with '#' and blank lines are
// skipped on import.

#include "exactnum.hpp"

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace threehalves {

struct BFile {
  std::int64_t offset = 0;
  std::vector<BigInt> values;

  friend bool operator==(const BFile &, const BFile &) = default;
};

inline void writeBFile(std::ostream &os, const BFile &b) {
  std::int64_t i = b.offset;
  for (const auto &v : b.values)
    os << i++ << ' ' << v.str() << '\n';
}

inline std::string toBFileText(const BFile &b) {
  std::ostringstream os;
  writeBFile(os, b);
  return os.str();
}

inline BFile readBFile(std::istream &is) {
  BFile b;
  std::string line;
  std::size_t lineNo = 0;
  bool first = true;
  auto fail = [&](const std::string &why) {
    throw std::runtime_error("b-file line " + std::to_string(lineNo) + ": " + why);
  };
  while (std::getline(is, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#')
      continue;
    std::istringstream fields(line);
    std::string idx, val, extra;
    if (!(fields >> idx >> val) || (fields >> extra))
      fail("expected 'index value'");
    std::int64_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoll(idx, &used);
      if (used != idx.size())
        fail("bad index '" + idx + "'");
    } catch (const std::logic_error &) {
      fail("bad index '" + idx + "'");
    }
    if (val.empty() || val.find_first_not_of("0123456789") != std::string::npos)
      fail("value is not a non-negative integer: '" + val + "'");
    if (first) {
      b.offset = index;
      first = false;
    } else if (index != b.offset + static_cast<std::int64_t>(b.values.size())) {
      fail("index " + idx + " is not consecutive");
    }
    b.values.emplace_back(val);
  }
  return b;
}

inline BFile parseBFile(const std::string &text) {
  std::istringstream is(text);
  return readBFile(is);
}

} // namespace threehalves
