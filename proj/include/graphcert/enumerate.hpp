#pragma once

#include <cstdint>
#include <functional>

#include "graphcert/graph.hpp"

namespace graphcert {

inline constexpr int kEnumerateMaxN = 8;

// Streams every labeled graph on n vertices in upper-triangle bitmask order
// (bit for pair (u,v), u < v, at position u*n - u*(u+1)/2 + v - u - 1, mask
// counting upward), optionally filtered to connected graphs.  stride > 1
// visits every stride-th mask.  Returns the number of graphs delivered.
long long enumerate_small_graphs(int n, bool connected_only,
                                 const std::function<void(const Graph&)>& fn,
                                 std::uint64_t stride = 1);

}  // namespace graphcert
