#include "graphcert/random.hpp"

#include <set>

#include "graphcert/errors.hpp"

namespace graphcert {

Graph random_graph(int n, int delta_min, RandomModel model, double p,
                   std::uint64_t seed) {
    if (n < 1 || n > kMaxVertices)
        throw InvalidParameterError("order out of range");
    if (!(p > 0.0 && p < 1.0))
        throw InvalidParameterError("edge probability must be in (0, 1)");
    if (delta_min < 0 || delta_min >= n)
        throw InvalidParameterError("delta_min must be in [0, n)");
    if (model == RandomModel::bipartite_gnp && n % 2 != 0)
        throw InvalidParameterError("bipartite model needs even order");

    int half = n / 2;
    auto same_side = [&](int u, int v) {
        return model == RandomModel::bipartite_gnp &&
               (u < half) == (v < half);
    };

    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < kGenerationRetryCap; ++attempt) {
        std::set<Edge> edges;
        std::vector<int> degree(n, 0);
        auto add = [&](int u, int v) {
            edges.insert(u < v ? Edge{u, v} : Edge{v, u});
            ++degree[u];
            ++degree[v];
        };
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (same_side(u, v)) continue;
                if (rng.next_unit() < p) add(u, v);
            }

        bool repaired = true;
        for (int v = 0; v < n && repaired; ++v)
            while (degree[v] < delta_min) {
                std::vector<int> candidates;
                for (int u = 0; u < n; ++u) {
                    if (u == v || same_side(u, v)) continue;
                    if (!edges.count(u < v ? Edge{u, v} : Edge{v, u}))
                        candidates.push_back(u);
                }
                if (candidates.empty()) {
                    repaired = false;
                    break;
                }
                add(v, candidates[rng.next_below(candidates.size())]);
            }
        if (!repaired) continue;

        Graph g = Graph::from_edges(n, {edges.begin(), edges.end()});
        if (is_connected(g)) return g;
    }
    throw GenerationError("no connected graph with delta >= " +
                          std::to_string(delta_min) + " after " +
                          std::to_string(kGenerationRetryCap) + " attempts");
}

}  // namespace graphcert
