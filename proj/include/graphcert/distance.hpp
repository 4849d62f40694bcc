#pragma once

#include <cstdint>
#include <vector>

#include "graphcert/graph.hpp"
#include "graphcert/rational.hpp"

namespace graphcert {

// Pairwise shortest-path distances of a connected graph, entries exact.
class DistanceMatrix {
public:
    static DistanceMatrix from_graph(const Graph& g);

    int n() const { return n_; }
    int at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
    long long row_sum(int i) const { return row_sums_[i]; }
    long long max_row_sum() const;
    int max_entry() const;  // diameter

    // Structural sanity: symmetry, zero diagonal, positive off-diagonal,
    // d(i,j)=1 iff edge, triangle inequality (the last only for n <= 64,
    // it is cubic).  Throws CrossCheckError on violation.
    void self_check(const Graph& g) const;

private:
    int n_ = 0;
    std::vector<std::int32_t> d_;
    std::vector<long long> row_sums_;
};

inline DistanceMatrix apsp(const Graph& g) { return DistanceMatrix::from_graph(g); }

// Sum of distances over unordered pairs.
long long wiener(const DistanceMatrix& d);
inline long long wiener(const Graph& g) { return wiener(apsp(g)); }

// Enclosure of a Perron value.  lo comes from Rayleigh quotients and
// Collatz-Wielandt minima, hi from Collatz-Wielandt maxima, so
// lo <= rho <= hi at every iterate.  Accumulations run in long double with
// compensated summation; the residual rounding error is orders of magnitude
// below the 1e-9 tolerances used here, and the final bounds are rounded
// outward.
struct SpectralEstimate {
    double lo = 0.0;
    double hi = 0.0;
    double value = 0.0;  // interval midpoint
    long long iterations = 0;
    double width() const { return hi - lo; }
};

inline constexpr double kDefaultTol = 1e-9;
inline constexpr long long kMaxPowerIterations = 100000;

// Power iteration from the all-ones vector (deterministic).  Throws
// ConvergenceError with the best bracket if the width does not reach tol.
SpectralEstimate distance_spectral_radius(const DistanceMatrix& d,
                                          double tol = kDefaultTol);
SpectralEstimate distance_spectral_radius(const Graph& g,
                                          double tol = kDefaultTol);

// 2W/n, exact.  Always <= rho_D.
Rational rayleigh_lower_bound(const DistanceMatrix& d);

enum class BoundMode { general, balanced_bipartite };

// Lower bound on the Wiener index from order and size alone:
//   general             n(n-1) - m
//   balanced_bipartite  (5n/2 - 2) n/2 - 2m
Rational wiener_floor(int n, long long m, BoundMode mode);
// Same, with the mode's hypotheses checked against the graph
// (connected; balanced bipartite for the second mode).
Rational wiener_floor(const Graph& g, BoundMode mode);

// Edge counts forced by a spectral ceiling: any connected graph (balanced
// bipartite in the second mode) with rho_D < n+2 (resp. < 3n/2 + 1) has
// m strictly greater than this value.
//   general             n(n-4)/2
//   balanced_bipartite  n(n-3)/4
Rational edge_count_floor(int n, BoundMode mode);

enum class IntervalOrder { leq, gt, indeterminate };

// Certified comparison of the underlying values from their enclosures:
// leq when a.hi <= b.lo, gt when a.lo > b.hi.
IntervalOrder compare_leq(const SpectralEstimate& a, const SpectralEstimate& b);

}  // namespace graphcert
