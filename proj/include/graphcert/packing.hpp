#pragma once

#include <json.hpp>
#include <optional>
#include <set>
#include <vector>

#include "graphcert/graph.hpp"
#include "graphcert/rational.hpp"

namespace graphcert {

struct Partition {
    // Blocks sorted internally; block order by smallest member.
    std::vector<std::vector<int>> blocks;
    long long crossing = 0;
    Rational objective;  // crossing / (s - 1)
    int s() const { return static_cast<int>(blocks.size()); }
};

// Validates that `blocks` partition V(g) with s >= 2; computes the crossing
// count and objective exactly.
Partition partition_ratio(const Graph& g, std::vector<std::vector<int>> blocks);

inline constexpr int kPartitionEnumMaxN = 12;

struct NuFResult {
    Rational value;
    Partition argmin;
};

// Minimum of partition_ratio over all partitions with s >= 2, by
// restricted-growth-string enumeration with branch-and-bound.  Ties broken
// by smallest s, then lexicographically first growth string.
NuFResult nu_f_exact(const Graph& g, int max_n = kPartitionEnumMaxN);

using TreeEdges = std::vector<Edge>;

struct PackingCertificate {
    enum class Kind { trees_found, violating_partition };
    Kind kind = Kind::trees_found;
    std::vector<TreeEdges> trees;      // trees_found: k edge-disjoint spanning trees
    std::optional<Partition> witness;  // violating_partition: objective < k
};

// Decides whether g packs k edge-disjoint spanning trees, by matroid-union
// augmentation over k forests.  Either outcome carries a certificate; the
// violating partition is extracted from the saturated vertex sets of failed
// augmentations and has objective < k exactly.
PackingCertificate tau_packing(const Graph& g, int k);

// Largest number of edge-disjoint spanning trees, scanned upward from k=1.
int tau(const Graph& g);

// Maximum spanning forest of g minus all tree edges (greedy union-find over
// the sorted residual edge list).
std::vector<Edge> residual_max_forest(const Graph& g,
                                      const std::vector<TreeEdges>& trees);

struct PCertificate {
    std::vector<TreeEdges> trees;
    std::vector<Edge> forest;
    long long forest_edges = 0;
    long long largest_component_edges = 0;
    // Conditions checked: (a) trees, (b) forest size, (c) component size,
    // the last vacuous when the forest is itself a spanning tree.
    bool checked_trees = false;
    bool checked_forest_size = false;
    bool checked_component = false;
    bool component_vacuous = false;
};

enum class PVerdict { verified, refuted, unknown };

struct PResult {
    PVerdict verdict = PVerdict::unknown;
    // 1 = sufficient-condition shortcut (a (k+1)-tree packing exists),
    // 2 = constructive packing + residual improvement, 3 = exhaustive
    // packing enumeration, 0 = undecided.
    int tier = 0;
    std::optional<PCertificate> certificate;
};

inline constexpr int kExhaustiveMaxN = 7;
inline constexpr int kExhaustiveMaxM = 14;

// Decides the packing property: (a) k edge-disjoint spanning trees exist,
// (b) a further edge-disjoint forest F has more than (d-1)/d * (n-1) edges,
// (c) if F is not itself a spanning tree, some component of F has >= d
// edges.  Existential over the choice of trees and F jointly.  `refuted`
// is only returned after exhaustive enumeration of all k-tree packings
// (n <= 7, m <= 14); elsewhere a failed search yields `unknown`.
// budget caps tier-2 exchange attempts; <= 0 selects the default n*m.
PResult verify_P(const Graph& g, int k, int d, long long budget = 0);

enum class FangYangOutcome { implication_holds, vacuous, counterexample };

// Tests the implication "nu_f > k + (d-1)/d  =>  property above" on one
// graph with exact rationals on the hypothesis side.  `counterexample`
// requires a tier-3 refutation; an undecided verify_P raises UndecidedError.
FangYangOutcome fang_yang_check(const Graph& g, int k, int d);

// Independent revalidation; throws CertificateError on any defect.
void validate_tree_packing(const Graph& g, const std::vector<TreeEdges>& trees);
void validate_partition_witness(const Graph& g, const Partition& p, int k);
void validate_p_certificate(const Graph& g, int k, int d,
                            const PCertificate& cert);

nlohmann::json to_json(const Rational& r);  // {"num": .., "den": ..}
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const PackingCertificate& c);
nlohmann::json to_json(const PCertificate& c);

}  // namespace graphcert
