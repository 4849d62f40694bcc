#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace graphcert {

// Normalized edge: first < second.
using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1.  Immutable after construction;
// edges are kept sorted so that equal graphs compare equal and every
// traversal of the edge list is deterministic.
class Graph {
public:
    Graph() = default;

    // Validates vertex range, rejects loops and duplicate edges.
    static Graph from_edges(int n, std::vector<Edge> edges);

    static Graph complete(int n);
    // Sides {0..a-1} and {a..a+b-1}.
    static Graph complete_bipartite(int a, int b);
    static Graph path(int n);
    static Graph cycle(int n);  // n >= 3
    static Graph star(int n);   // center 0
    static Graph empty_graph(int n);

    int n() const { return n_; }
    long long m() const { return static_cast<long long>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    int min_degree() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;            // sorted, u < v
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
    std::vector<uint64_t> bits_;         // row-major adjacency bitset
    int words_ = 0;                      // words per bitset row

    void build_adjacency();
};

// Largest order accepted anywhere.  Keeps dense adjacency structures and
// n^2 distance matrices within sane memory bounds.
inline constexpr int kMaxVertices = 10000;

enum class FamilyKind { complete, complete_bipartite, path, cycle, star, empty };

// params: complete_bipartite takes {a, b}; everything else {n}.
Graph construct(FamilyKind kind, const std::vector<int>& params);

// Vertices of `b` are relabeled to follow those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);
// Disjoint union plus every edge between the two vertex sets.
Graph join(const Graph& a, const Graph& b);
// Every listed edge must be present.
Graph delete_edges(const Graph& g, const std::vector<Edge>& to_delete);

// Component id per vertex, numbered in BFS order from vertex 0 upward.
std::vector<int> components(const Graph& g);
bool is_connected(const Graph& g);

struct GraphProfile {
    int n = 0;
    long long m = 0;
    int min_degree = 0;
    bool connected = false;
    bool bipartite = false;
    // Equal-sized sides achievable by some proper 2-coloring.  For
    // disconnected inputs the component colorings are combined so a balanced
    // split is found whenever one exists.
    bool balanced_bipartite = false;
    // Side assignment (0/1) witnessing the flags above; empty if not
    // bipartite.  Balanced whenever balanced_bipartite is true.
    std::vector<int> side;
};

GraphProfile classify(const Graph& g);

// FNV-1a over (n, sorted edge list); stable across runs and platforms.
std::uint64_t graph_fingerprint(const Graph& g);
std::string graph_fingerprint_hex(const Graph& g);

}  // namespace graphcert
