#include "graphcert/enumerate.hpp"

#include <numeric>

#include "graphcert/errors.hpp"

namespace graphcert {

long long enumerate_small_graphs(int n, bool connected_only,
                                 const std::function<void(const Graph&)>& fn,
                                 std::uint64_t stride) {
    if (n < 1) throw InvalidParameterError("enumeration needs n >= 1");
    if (n > kEnumerateMaxN)
        throw SizeGuardError("exhaustive enumeration guarded at n <= " +
                             std::to_string(kEnumerateMaxN));
    if (stride < 1) throw InvalidParameterError("stride must be >= 1");

    int bits = n * (n - 1) / 2;
    std::vector<Edge> pairs;
    pairs.reserve(bits);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

    long long delivered = 0;
    std::vector<int> parent(n);
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask >> bits == 0; mask += stride) {
        // Union-find connectivity straight off the mask; building Graph
        // objects only for survivors keeps the n=7..8 sweeps cheap.
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int comps = n;
        edges.clear();
        for (int b = 0; b < bits; ++b)
            if (mask >> b & 1) {
                edges.push_back(pairs[b]);
                int ra = find(pairs[b].first), rb = find(pairs[b].second);
                if (ra != rb) {
                    parent[rb] = ra;
                    --comps;
                }
            }
        if (connected_only && comps != 1) continue;
        fn(Graph::from_edges(n, edges));
        ++delivered;
    }
    return delivered;
}

}  // namespace graphcert
