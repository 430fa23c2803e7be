#pragma once

#include <compare>
#include <cstddef>

namespace spanmt {

// Half-open [start, end) interval in code point offsets.
struct Interval {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  bool empty() const { return end <= start; }
  bool contains(std::size_t pos) const { return pos >= start && pos < end; }

  auto operator<=>(const Interval&) const = default;
};

}  // namespace spanmt
