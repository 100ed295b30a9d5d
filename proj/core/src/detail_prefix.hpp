#pragma once

#include <map>

#include "hopfrb/tensor.hpp"

namespace hopfrb::detail {

/// Visits every entry of a sparse tensor whose index starts with `prefix`.
/// Keys are lexicographic, so this is a range scan, not a full sweep.
template <typename F>
void for_prefix(const std::map<Index, Scalar>& entries, Index prefix, F&& f) {
  auto lo = entries.lower_bound(prefix);
  if (prefix.empty()) {
    for (auto it = lo; it != entries.end(); ++it) f(it->first, it->second);
    return;
  }
  ++prefix.back();
  auto hi = entries.lower_bound(prefix);
  for (auto it = lo; it != hi; ++it) f(it->first, it->second);
}

}  // namespace hopfrb::detail
