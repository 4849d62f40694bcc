#include "graphcert/distance.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "graphcert/errors.hpp"

namespace graphcert {

DistanceMatrix DistanceMatrix::from_graph(const Graph& g) {
    DistanceMatrix dm;
    int n = g.n();
    dm.n_ = n;
    dm.d_.assign(static_cast<std::size_t>(n) * n, -1);
    dm.row_sums_.assign(n, 0);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        auto* row = dm.d_.data() + static_cast<std::size_t>(s) * n;
        row[s] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u))
                if (row[v] < 0) {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
        }
        long long sum = 0;
        for (int v = 0; v < n; ++v) {
            if (row[v] < 0) throw DisconnectedGraphError(s, v);
            sum += row[v];
        }
        dm.row_sums_[s] = sum;
    }
    return dm;
}

long long DistanceMatrix::max_row_sum() const {
    long long best = 0;
    for (long long s : row_sums_) best = std::max(best, s);
    return best;
}

int DistanceMatrix::max_entry() const {
    std::int32_t best = 0;
    for (std::int32_t v : d_) best = std::max(best, v);
    return best;
}

void DistanceMatrix::self_check(const Graph& g) const {
    if (g.n() != n_) throw CrossCheckError("distance matrix order mismatch");
    for (int i = 0; i < n_; ++i) {
        if (at(i, i) != 0) throw CrossCheckError("nonzero diagonal distance");
        for (int j = 0; j < n_; ++j) {
            if (at(i, j) != at(j, i))
                throw CrossCheckError("asymmetric distance matrix");
            if (i != j && at(i, j) < 1)
                throw CrossCheckError("nonpositive off-diagonal distance");
            if (i != j && (at(i, j) == 1) != g.has_edge(i, j))
                throw CrossCheckError("distance-1 pairs do not match edges");
        }
    }
    if (n_ <= 64)
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                for (int k = 0; k < n_; ++k)
                    if (at(i, j) > at(i, k) + at(k, j))
                        throw CrossCheckError("triangle inequality violated");
}

long long wiener(const DistanceMatrix& d) {
    long long total = 0;
    for (int i = 0; i < d.n(); ++i) total += d.row_sum(i);
    return total / 2;
}

namespace {

// Compensated accumulation; keeps summation error near one ulp regardless
// of the number of terms.
struct KahanSum {
    long double sum = 0.0L, carry = 0.0L;
    void add(long double x) {
        long double y = x - carry;
        long double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

double round_down(long double x) {
    double d = static_cast<double>(x);
    if (static_cast<long double>(d) > x)
        d = std::nextafter(d, -std::numeric_limits<double>::infinity());
    return d;
}

double round_up(long double x) {
    double d = static_cast<double>(x);
    if (static_cast<long double>(d) < x)
        d = std::nextafter(d, std::numeric_limits<double>::infinity());
    return d;
}

}  // namespace

SpectralEstimate distance_spectral_radius(const DistanceMatrix& d, double tol) {
    if (!(tol > 0.0))
        throw InvalidParameterError("tolerance must be positive");
    int n = d.n();
    if (n == 1) return {0.0, 0.0, 0.0, 0};

    std::vector<long double> x(n, 1.0L), y(n);
    long double lo_best = 0.0L;
    long double hi_best = std::numeric_limits<long double>::infinity();
    for (long long iter = 1; iter <= kMaxPowerIterations; ++iter) {
        for (int i = 0; i < n; ++i) {
            KahanSum s;
            for (int j = 0; j < n; ++j)
                s.add(static_cast<long double>(d.at(i, j)) * x[j]);
            y[i] = s.sum;
        }
        // Collatz-Wielandt bounds at the current positive iterate.
        long double rmin = std::numeric_limits<long double>::infinity();
        long double rmax = 0.0L;
        for (int i = 0; i < n; ++i) {
            long double r = y[i] / x[i];
            rmin = std::min(rmin, r);
            rmax = std::max(rmax, r);
        }
        // Rayleigh quotient; tighter from below since D is symmetric.
        KahanSum num, den;
        for (int i = 0; i < n; ++i) {
            num.add(x[i] * y[i]);
            den.add(x[i] * x[i]);
        }
        lo_best = std::max({lo_best, rmin, num.sum / den.sum});
        hi_best = std::min(hi_best, rmax);
        if (hi_best - lo_best <= static_cast<long double>(tol)) {
            SpectralEstimate est;
            est.lo = round_down(lo_best);
            est.hi = round_up(hi_best);
            est.value = 0.5 * (est.lo + est.hi);
            est.iterations = iter;
            return est;
        }
        long double ymax = *std::max_element(y.begin(), y.end());
        for (int i = 0; i < n; ++i) x[i] = y[i] / ymax;
    }
    throw ConvergenceError(round_down(lo_best), round_up(hi_best),
                           kMaxPowerIterations);
}

SpectralEstimate distance_spectral_radius(const Graph& g, double tol) {
    return distance_spectral_radius(apsp(g), tol);
}

Rational rayleigh_lower_bound(const DistanceMatrix& d) {
    return Rational(BigInt(2) * wiener(d), BigInt(d.n()));
}

Rational wiener_floor(int n, long long m, BoundMode mode) {
    if (n < 1) throw InvalidParameterError("order must be positive");
    if (mode == BoundMode::general)
        return Rational(BigInt(n) * (n - 1) - m);
    if (n % 2 != 0)
        throw ModeMismatchError("balanced bipartite bound needs even order");
    // (5n/2 - 2) * n/2 - 2m
    return Rational(BigInt(5) * n - 4) * Rational(BigInt(n), BigInt(4)) -
           2 * Rational(BigInt(m));
}

Rational wiener_floor(const Graph& g, BoundMode mode) {
    if (!is_connected(g))
        throw ModeMismatchError("Wiener floor requires a connected graph");
    if (mode == BoundMode::balanced_bipartite) {
        GraphProfile p = classify(g);
        if (!p.balanced_bipartite)
            throw ModeMismatchError(
                "graph is not balanced bipartite; general mode applies");
    }
    return wiener_floor(g.n(), g.m(), mode);
}

Rational edge_count_floor(int n, BoundMode mode) {
    if (n < 1) throw InvalidParameterError("order must be positive");
    if (mode == BoundMode::general)
        return Rational(BigInt(n) * (n - 4), BigInt(2));
    if (n % 2 != 0)
        throw ModeMismatchError("balanced bipartite bound needs even order");
    return Rational(BigInt(n) * (n - 3), BigInt(4));
}

IntervalOrder compare_leq(const SpectralEstimate& a, const SpectralEstimate& b) {
    if (a.hi <= b.lo) return IntervalOrder::leq;
    if (a.lo > b.hi) return IntervalOrder::gt;
    return IntervalOrder::indeterminate;
}

}  // namespace graphcert
