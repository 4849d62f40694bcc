#include "graphcert/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "graphcert/errors.hpp"

namespace graphcert {

void Graph::build_adjacency() {
    adj_.assign(n_, {});
    words_ = (n_ + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ull << (v % 64);
        bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ull << (u % 64);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
}

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 1 || n > kMaxVertices)
        throw InvalidParameterError("graph order must be in [1, " +
                                    std::to_string(kMaxVertices) + "], got " +
                                    std::to_string(n));
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidParameterError("edge {" + std::to_string(u) + "," +
                                        std::to_string(v) +
                                        "} out of range for order " +
                                        std::to_string(n));
        if (u == v)
            throw InvalidParameterError("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw InvalidParameterError("duplicate edge {" +
                                    std::to_string(dup->first) + "," +
                                    std::to_string(dup->second) + "}");
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.build_adjacency();
    return g;
}

Graph Graph::complete(int n) {
    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return from_edges(n, std::move(e));
}

Graph Graph::complete_bipartite(int a, int b) {
    if (a < 1 || b < 1)
        throw InvalidParameterError("complete bipartite sides must be >= 1");
    std::vector<Edge> e;
    e.reserve(static_cast<std::size_t>(a) * b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) e.emplace_back(u, v);
    return from_edges(a + b, std::move(e));
}

Graph Graph::path(int n) {
    std::vector<Edge> e;
    for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return from_edges(n, std::move(e));
}

Graph Graph::cycle(int n) {
    if (n < 3) throw InvalidParameterError("cycle needs order >= 3");
    std::vector<Edge> e;
    for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    e.emplace_back(0, n - 1);
    return from_edges(n, std::move(e));
}

Graph Graph::star(int n) {
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.emplace_back(0, v);
    return from_edges(n, std::move(e));
}

Graph Graph::empty_graph(int n) { return from_edges(n, {}); }

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_)
        throw InvalidParameterError("vertex " + std::to_string(v) +
                                    " out of range");
    return adj_[v];
}

int Graph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw InvalidParameterError("vertex out of range in has_edge");
    if (u == v) return false;
    return bits_[static_cast<std::size_t>(u) * words_ + v / 64] >>
               (v % 64) & 1;
}

int Graph::min_degree() const {
    int d = n_ > 0 ? n_ : 0;
    for (int v = 0; v < n_; ++v) d = std::min(d, static_cast<int>(adj_[v].size()));
    return n_ > 0 ? d : 0;
}

Graph construct(FamilyKind kind, const std::vector<int>& params) {
    auto need = [&](std::size_t c) {
        if (params.size() != c)
            throw InvalidParameterError("family constructor expects " +
                                        std::to_string(c) + " parameter(s), got " +
                                        std::to_string(params.size()));
    };
    switch (kind) {
        case FamilyKind::complete: need(1); return Graph::complete(params[0]);
        case FamilyKind::complete_bipartite:
            need(2);
            return Graph::complete_bipartite(params[0], params[1]);
        case FamilyKind::path: need(1); return Graph::path(params[0]);
        case FamilyKind::cycle: need(1); return Graph::cycle(params[0]);
        case FamilyKind::star: need(1); return Graph::star(params[0]);
        case FamilyKind::empty: need(1); return Graph::empty_graph(params[0]);
    }
    throw InvalidParameterError("unknown family");
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    for (const auto& [u, v] : b.edges())
        e.emplace_back(u + a.n(), v + a.n());
    return Graph::from_edges(a.n() + b.n(), std::move(e));
}

Graph join(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    for (const auto& [u, v] : b.edges())
        e.emplace_back(u + a.n(), v + a.n());
    for (int u = 0; u < a.n(); ++u)
        for (int v = a.n(); v < a.n() + b.n(); ++v) e.emplace_back(u, v);
    return Graph::from_edges(a.n() + b.n(), std::move(e));
}

Graph delete_edges(const Graph& g, const std::vector<Edge>& to_delete) {
    std::vector<Edge> norm;
    norm.reserve(to_delete.size());
    for (auto [u, v] : to_delete) {
        if (u > v) std::swap(u, v);
        if (!g.has_edge(u, v)) throw MissingEdgeError(u, v);
        norm.emplace_back(u, v);
    }
    std::sort(norm.begin(), norm.end());
    auto dup = std::adjacent_find(norm.begin(), norm.end());
    if (dup != norm.end())
        throw InvalidParameterError("edge {" + std::to_string(dup->first) + "," +
                                    std::to_string(dup->second) +
                                    "} listed twice for deletion");
    std::vector<Edge> kept;
    kept.reserve(g.edges().size() - norm.size());
    std::set_difference(g.edges().begin(), g.edges().end(), norm.begin(),
                        norm.end(), std::back_inserter(kept));
    return Graph::from_edges(g.n(), std::move(kept));
}

std::vector<int> components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    int next = 0;
    std::deque<int> queue;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        queue.push_back(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u))
                if (comp[v] == -1) {
                    comp[v] = next;
                    queue.push_back(v);
                }
        }
        ++next;
    }
    return comp;
}

bool is_connected(const Graph& g) {
    for (int c : components(g))
        if (c != 0) return false;
    return true;
}

GraphProfile classify(const Graph& g) {
    GraphProfile p;
    p.n = g.n();
    p.m = g.m();
    p.min_degree = g.min_degree();

    // BFS 2-coloring per component.
    std::vector<int> color(g.n(), -1), comp(g.n(), -1);
    std::vector<std::pair<int, int>> comp_counts;  // (#color0, #color1)
    bool bipartite = true;
    std::deque<int> queue;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(comp_counts.size());
        comp_counts.emplace_back(0, 0);
        comp[s] = id;
        color[s] = 0;
        ++comp_counts[id].first;
        queue.push_back(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (comp[v] == -1) {
                    comp[v] = id;
                    color[v] = 1 - color[u];
                    (color[v] == 0 ? comp_counts[id].first
                                   : comp_counts[id].second)++;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    bipartite = false;
                }
            }
        }
    }
    p.connected = comp_counts.size() <= 1;
    p.bipartite = bipartite;
    if (!bipartite) return p;

    // Each component's coloring may be kept or flipped independently; find a
    // combination putting exactly n/2 vertices on side 0.  Subset-sum over
    // the per-component side-0 counts, preferring "keep" for determinism.
    p.side.assign(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) p.side[v] = color[v];
    if (g.n() % 2 != 0) return p;
    int target = g.n() / 2;
    int c = static_cast<int>(comp_counts.size());
    // reach[i][t]: processing components i..c-1 can add t to side 0.
    std::vector<std::vector<char>> reach(c + 1,
                                         std::vector<char>(target + 1, 0));
    reach[c][0] = 1;
    for (int i = c - 1; i >= 0; --i)
        for (int t = 0; t <= target; ++t) {
            auto [keep, flip] = comp_counts[i];
            reach[i][t] = (t >= keep && reach[i + 1][t - keep]) ||
                          (t >= flip && reach[i + 1][t - flip]);
        }
    if (!reach[0][target]) return p;
    p.balanced_bipartite = true;
    std::vector<char> flipped(c, 0);
    int t = target;
    for (int i = 0; i < c; ++i) {
        auto [keep, flip] = comp_counts[i];
        if (t >= keep && reach[i + 1][t - keep]) {
            t -= keep;
        } else {
            flipped[i] = 1;
            t -= flip;
        }
    }
    for (int v = 0; v < g.n(); ++v)
        p.side[v] = flipped[comp[v]] ? 1 - color[v] : color[v];
    return p;
}

std::uint64_t graph_fingerprint(const Graph& g) {
    std::uint64_t h = 1469598103934665603ull;  // FNV offset basis
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;  // FNV prime
        }
    };
    mix(static_cast<std::uint64_t>(g.n()));
    for (const auto& [u, v] : g.edges()) {
        mix(static_cast<std::uint64_t>(u));
        mix(static_cast<std::uint64_t>(v));
    }
    return h;
}

std::string graph_fingerprint_hex(const Graph& g) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = graph_fingerprint(g);
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[i] = digits[h & 0xf];
    return s;
}

}  // namespace graphcert
