#pragma once

#include <cstdint>

namespace liedual {

/// Closed integer interval [lo, hi]; lo > hi is the empty window.
struct Window {
  std::int64_t lo;
  std::int64_t hi;

  Window(std::int64_t l, std::int64_t h) : lo(l), hi(h) {}

  bool empty() const { return lo > hi; }
  bool contains(std::int64_t n) const { return lo <= n && n <= hi; }
  std::int64_t size() const { return empty() ? 0 : hi - lo + 1; }
  bool operator==(const Window&) const = default;
};

}  // namespace liedual
