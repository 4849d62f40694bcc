#include "graphcert/extremal.hpp"

#include <algorithm>

#include "graphcert/errors.hpp"

namespace graphcert {

void ExtremalSpec::validate() const {
    if (k < 2) throw InvalidParameterError("extremal families need k >= 2");
    if (family == ExtremalFamily::g1_join) {
        if (n < k + 1)
            throw InvalidParameterError("g1_join needs n >= k+1, got n=" +
                                        std::to_string(n) + ", k=" +
                                        std::to_string(k));
    } else {
        if (n % 2 != 0)
            throw InvalidParameterError("g2_bipartite needs even n");
        if (n / 2 < k + 1)
            throw InvalidParameterError("g2_bipartite needs n/2 >= k+1, got n=" +
                                        std::to_string(n) + ", k=" +
                                        std::to_string(k));
    }
}

bool ExtremalSpec::in_bound_hypothesis() const {
    return family == ExtremalFamily::g1_join ? n >= 2 * k + 6 : n >= 4 * k + 4;
}

Graph build_extremal(const ExtremalSpec& spec) {
    spec.validate();
    if (spec.family == ExtremalFamily::g1_join) {
        Graph tail = disjoint_union(Graph::complete(spec.n - spec.k),
                                    Graph::complete(1));
        return join(Graph::complete(spec.k - 1), tail);
    }
    int half = spec.n / 2;
    int t = half - spec.k + 1;  // deleted star leaves
    Graph base = Graph::complete_bipartite(half, half);
    std::vector<Edge> star;
    for (int j = 0; j < t; ++j) star.emplace_back(0, half + j);
    return delete_edges(base, star);
}

namespace {

std::vector<int> block_sizes_for(const ExtremalSpec& spec) {
    if (spec.family == ExtremalFamily::g1_join)
        return {spec.k - 1, spec.n - spec.k, 1};
    int half = spec.n / 2;
    int t = half - spec.k + 1;
    return {1, half - 1, t, spec.k - 1};
}

}  // namespace

QuotientMatrix distance_quotient(const ExtremalSpec& spec,
                                 const DistanceMatrix& d) {
    QuotientMatrix q;
    q.block_sizes = block_sizes_for(spec);
    q.dim = static_cast<int>(q.block_sizes.size());
    q.entries.assign(static_cast<std::size_t>(q.dim) * q.dim, 0);

    std::vector<int> start(q.dim + 1, 0);
    for (int b = 0; b < q.dim; ++b) start[b + 1] = start[b] + q.block_sizes[b];
    if (start[q.dim] != d.n())
        throw CrossCheckError("block sizes do not cover the vertex set");

    for (int bi = 0; bi < q.dim; ++bi)
        for (int bj = 0; bj < q.dim; ++bj) {
            long long common = -1;
            for (int u = start[bi]; u < start[bi + 1]; ++u) {
                long long sum = 0;
                for (int v = start[bj]; v < start[bj + 1]; ++v)
                    sum += d.at(u, v);
                if (common == -1) common = sum;
                if (sum != common)
                    throw CrossCheckError(
                        "distance partition not equitable: block " +
                        std::to_string(bi) + " has mixed sums into block " +
                        std::to_string(bj));
            }
            q.entries[bi * q.dim + bj] = common;
        }
    return q;
}

namespace {

// Monic characteristic polynomial of an integer matrix, exact
// (Faddeev-LeVerrier).  coeffs[i] multiplies x^i; coeffs[dim] = 1.
std::vector<Rational> characteristic_polynomial(const QuotientMatrix& q) {
    int d = q.dim;
    std::vector<Rational> b(q.entries.begin(), q.entries.end());
    std::vector<Rational> mat(static_cast<std::size_t>(d) * d);  // M_i
    std::vector<Rational> coeffs(d + 1);
    coeffs[d] = 1;
    // M_1 = B, c_{d-1} = -tr(M_1); M_{i+1} = B (M_i + c_{d-i} I).
    mat = b;
    for (int i = 1; i <= d; ++i) {
        Rational tr = 0;
        for (int j = 0; j < d; ++j) tr += mat[j * d + j];
        coeffs[d - i] = -tr / i;
        if (i == d) break;
        std::vector<Rational> shifted = mat;
        for (int j = 0; j < d; ++j) shifted[j * d + j] += coeffs[d - i];
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                Rational s = 0;
                for (int t = 0; t < d; ++t)
                    s += b[r * d + t] * shifted[t * d + c];
                mat[r * d + c] = s;
            }
    }
    return coeffs;
}

Rational horner(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational v = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        v = v * x + coeffs[i];
    return v;
}

// x exceeds the largest root of a real-rooted monic polynomial iff the
// polynomial and all its derivatives are positive at x.
bool beyond_largest_root(const std::vector<std::vector<Rational>>& derivs,
                         const Rational& x) {
    for (const auto& p : derivs)
        if (horner(p, x) <= 0) return false;
    return true;
}

}  // namespace

SpectralEstimate exact_rho_extremal(const ExtremalSpec& spec, double tol) {
    if (!(tol > 0.0)) throw InvalidParameterError("tolerance must be positive");
    spec.validate();
    Graph g = build_extremal(spec);
    DistanceMatrix d = apsp(g);
    QuotientMatrix q = distance_quotient(spec, d);

    std::vector<std::vector<Rational>> derivs;
    derivs.push_back(characteristic_polynomial(q));
    while (derivs.back().size() > 2) {
        const auto& p = derivs.back();
        std::vector<Rational> dp(p.size() - 1);
        for (std::size_t i = 1; i < p.size(); ++i)
            dp[i - 1] = p[i] * static_cast<int>(i);
        derivs.push_back(std::move(dp));
    }

    // The Perron root of the quotient equals rho_D of the full matrix, so
    // the Rayleigh floor and the max row sum of D bracket it.
    Rational lo = rayleigh_lower_bound(d);
    Rational hi(d.max_row_sum());
    Rational half_tol = Rational(tol) / 2;
    long long steps = 0;
    while (hi - lo > half_tol) {
        Rational mid = (lo + hi) / 2;
        if (beyond_largest_root(derivs, mid))
            hi = mid;
        else
            lo = mid;
        ++steps;
    }

    SpectralEstimate exact;
    exact.lo = to_double(lo);
    if (Rational(exact.lo) > lo)
        exact.lo = std::nextafter(exact.lo, -1e300);
    exact.hi = to_double(hi);
    if (Rational(exact.hi) < hi)
        exact.hi = std::nextafter(exact.hi, 1e300);
    exact.iterations = steps;

    SpectralEstimate power = distance_spectral_radius(d, tol);
    if (exact.lo > power.hi || power.lo > exact.hi)
        throw CrossCheckError(
            "quotient bisection and power iteration disagree for k=" +
            std::to_string(spec.k) + ", n=" + std::to_string(spec.n));
    exact.lo = std::max(exact.lo, power.lo);
    exact.hi = std::min(exact.hi, power.hi);
    exact.value = 0.5 * (exact.lo + exact.hi);
    return exact;
}

Rational lemma_bound_value(ExtremalFamily family, int n) {
    if (family == ExtremalFamily::g1_join) return Rational(n + 2);
    return Rational(BigInt(3) * n + 2, BigInt(2));
}

std::vector<LemmaBoundRow> check_lemma_bounds(ExtremalFamily family, int k_lo,
                                              int k_hi, int n_lo, int n_hi,
                                              double tol) {
    std::vector<LemmaBoundRow> rows;
    for (int k = k_lo; k <= k_hi; ++k)
        for (int n = n_lo; n <= n_hi; ++n) {
            if (family == ExtremalFamily::g2_bipartite && n % 2 != 0) continue;
            LemmaBoundRow row;
            row.family = family;
            row.k = k;
            row.n = n;
            row.bound = lemma_bound_value(family, n);
            ExtremalSpec spec{family, k, n};
            row.in_hypothesis = spec.in_bound_hypothesis();
            try {
                row.rho = exact_rho_extremal(spec, tol);
                if (Rational(row.rho.hi) < row.bound)
                    row.verdict = LemmaBoundRow::Verdict::pass;
                else if (Rational(row.rho.lo) >= row.bound)
                    row.verdict = LemmaBoundRow::Verdict::fail;
                else
                    row.verdict = LemmaBoundRow::Verdict::indeterminate;
            } catch (const std::exception& e) {
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

}  // namespace graphcert
