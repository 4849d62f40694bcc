#pragma once

#include <string>
#include <vector>

#include "graphcert/distance.hpp"
#include "graphcert/graph.hpp"
#include "graphcert/rational.hpp"

namespace graphcert {

// Two one-parameter families sitting at the edge of the spectral conditions:
//   g1_join:      K_{k-1} joined with (K_{n-k} u K_1); one vertex of degree
//                 k-1, diameter 2.
//   g2_bipartite: K_{n/2,n/2} minus a star from one X-vertex to n/2-k+1
//                 Y-vertices; deg(u) = k-1, diameter 3.
enum class ExtremalFamily { g1_join, g2_bipartite };

struct ExtremalSpec {
    ExtremalFamily family = ExtremalFamily::g1_join;
    int k = 2;
    int n = 0;

    // g1_join: k >= 2 and n >= k+1; g2_bipartite: k >= 2, n even, n/2 >= k+1.
    void validate() const;
    // Sharp order threshold of the corresponding spectral bound:
    // n >= 2k+6 (g1) resp. n >= 4k+4 (g2).
    bool in_bound_hypothesis() const;
};

// Vertex labels: g1_join puts the K_{k-1} block first (0..k-2), then K_{n-k}
// (k-1..n-2), then the pendant-block vertex n-1.  g2_bipartite puts u at 0,
// the rest of X at 1..n/2-1, the deleted Y-neighbors at n/2..n/2+t-1 and the
// kept Y-neighbors last (t = n/2-k+1).
Graph build_extremal(const ExtremalSpec& spec);

// Block-constant row sums of the distance matrix.  Entries are exact
// integers once equitability has been verified.
struct QuotientMatrix {
    std::vector<int> block_sizes;
    int dim = 0;
    std::vector<long long> entries;  // row-major, dim x dim
    long long at(int i, int j) const { return entries[i * dim + j]; }
};

// Blocks in construction order (see build_extremal).  Verifies that every
// vertex of block i has the same distance sum into block j; a violation
// means the constructor mislabeled something, reported as CrossCheckError.
QuotientMatrix distance_quotient(const ExtremalSpec& spec,
                                 const DistanceMatrix& d);

// Perron root of the quotient matrix, bracketed by bisection on the
// characteristic polynomial in exact rational arithmetic, then cross-checked
// against power iteration on the full matrix (the enclosures must overlap).
// Returns the intersection of the two enclosures.
SpectralEstimate exact_rho_extremal(const ExtremalSpec& spec,
                                    double tol = kDefaultTol);

// One row of a bound sweep: certified enclosure vs the family's ceiling
// (n+2 for g1_join, 3n/2+1 for g2_bipartite).
struct LemmaBoundRow {
    ExtremalFamily family;
    int k = 0;
    int n = 0;
    SpectralEstimate rho;
    Rational bound;
    // pass: rho.hi < bound; fail: rho.lo >= bound; indeterminate otherwise.
    enum class Verdict { pass, fail, indeterminate } verdict = Verdict::indeterminate;
    bool in_hypothesis = false;
    std::string error;  // nonempty if the row aborted; verdict meaningless
};

// Sweeps (k, n) over inclusive ranges; for g2_bipartite odd n are skipped.
// Per-row errors are recorded, the sweep continues.
std::vector<LemmaBoundRow> check_lemma_bounds(ExtremalFamily family, int k_lo,
                                              int k_hi, int n_lo, int n_hi,
                                              double tol = kDefaultTol);

Rational lemma_bound_value(ExtremalFamily family, int n);

}  // namespace graphcert
