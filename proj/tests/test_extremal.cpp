#include <doctest.h>

#include <cmath>

#include "graphcert/distance.hpp"
#include "graphcert/errors.hpp"
#include "graphcert/extremal.hpp"

using namespace graphcert;

TEST_SUITE_BEGIN("extremal");

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(
        (ExtremalSpec{ExtremalFamily::g1_join, 1, 12}.validate()),
        InvalidParameterError);
    CHECK_THROWS_AS(
        (ExtremalSpec{ExtremalFamily::g1_join, 2, 2}.validate()),
        InvalidParameterError);
    CHECK_THROWS_AS(
        (ExtremalSpec{ExtremalFamily::g2_bipartite, 2, 13}.validate()),
        InvalidParameterError);
    CHECK_THROWS_AS(
        (ExtremalSpec{ExtremalFamily::g2_bipartite, 4, 6}.validate()),
        InvalidParameterError);
    ExtremalSpec ok{ExtremalFamily::g1_join, 2, 3};
    ok.validate();

    CHECK(ExtremalSpec{ExtremalFamily::g1_join, 2, 10}.in_bound_hypothesis());
    CHECK_FALSE(
        ExtremalSpec{ExtremalFamily::g1_join, 2, 9}.in_bound_hypothesis());
    CHECK(ExtremalSpec{ExtremalFamily::g2_bipartite, 2, 12}
              .in_bound_hypothesis());
    CHECK_FALSE(ExtremalSpec{ExtremalFamily::g2_bipartite, 2, 10}
                    .in_bound_hypothesis());
}

TEST_CASE("clique-join family shape") {
    Graph g = build_extremal({ExtremalFamily::g1_join, 2, 12});
    CHECK(g.n() == 12);
    CHECK(g.m() == 56);  // C(10,2) + 11 join edges from the single hub
    CHECK(g.min_degree() == 1);
    CHECK(g.degree(11) == 1);      // pendant block vertex
    CHECK(g.has_edge(0, 11));      // hub reaches it
    CHECK_FALSE(g.has_edge(1, 11));
    CHECK(is_connected(g));

    Graph h = build_extremal({ExtremalFamily::g1_join, 3, 14});
    CHECK(h.m() == 80);  // 1 + C(11,2) + 2*12
    CHECK(h.degree(13) == 2);
}

TEST_CASE("bipartite star-deleted family shape") {
    Graph g = build_extremal({ExtremalFamily::g2_bipartite, 2, 12});
    CHECK(g.n() == 12);
    CHECK(g.m() == 31);  // 36 - (n/2 - k + 1)
    CHECK(g.degree(0) == 1);
    GraphProfile p = classify(g);
    CHECK(p.connected);
    CHECK(p.balanced_bipartite);
    // u keeps exactly the non-deleted Y vertices: 6+5 = 11th index only.
    CHECK_FALSE(g.has_edge(0, 6));
    CHECK(g.has_edge(0, 11));
}

TEST_CASE("distance quotient matches hand-computed block sums") {
    ExtremalSpec spec{ExtremalFamily::g1_join, 2, 12};
    QuotientMatrix q = distance_quotient(spec, apsp(build_extremal(spec)));
    CHECK(q.block_sizes == std::vector<int>{1, 10, 1});
    REQUIRE(q.dim == 3);
    // Rows: hub, big clique, pendant vertex.
    CHECK(q.at(0, 0) == 0);
    CHECK(q.at(0, 1) == 10);
    CHECK(q.at(0, 2) == 1);
    CHECK(q.at(1, 0) == 1);
    CHECK(q.at(1, 1) == 9);
    CHECK(q.at(1, 2) == 2);
    CHECK(q.at(2, 0) == 1);
    CHECK(q.at(2, 1) == 20);
    CHECK(q.at(2, 2) == 0);
}

TEST_CASE("bipartite quotient blocks") {
    ExtremalSpec spec{ExtremalFamily::g2_bipartite, 2, 12};
    QuotientMatrix q = distance_quotient(spec, apsp(build_extremal(spec)));
    CHECK(q.block_sizes == std::vector<int>{1, 5, 5, 1});
    // u sits at distance 3 from its deleted neighbours.
    CHECK(q.at(0, 2) == 15);
    CHECK(q.at(0, 3) == 1);
}

TEST_CASE("exact radius encloses the independently computed value") {
    // Reference values from 40-digit eigensolves of the same matrices.
    struct Row {
        ExtremalFamily family;
        int k, n;
        double truth;
    };
    const Row rows[] = {
        {ExtremalFamily::g1_join, 2, 12, 13.08020935914831607},
        {ExtremalFamily::g1_join, 3, 14, 14.97904207396124333},
        {ExtremalFamily::g1_join, 2, 10, 10.95202541569765564},
        {ExtremalFamily::g2_bipartite, 2, 12, 18.04831077903842106},
        {ExtremalFamily::g2_bipartite, 2, 16, 24.18572376959902883},
        {ExtremalFamily::g2_bipartite, 2, 20, 30.27287571352151166},
    };
    for (const Row& r : rows) {
        SpectralEstimate est = exact_rho_extremal({r.family, r.k, r.n});
        CHECK(est.lo <= r.truth);
        CHECK(est.hi >= r.truth);
        CHECK(est.width() <= 1e-9);
        CHECK(std::abs(est.value - r.truth) <= 1e-9);
    }
}

TEST_CASE("quotient and full-matrix radii agree") {
    for (int n : {12, 20, 30}) {
        ExtremalSpec spec{ExtremalFamily::g1_join, 3, n};
        SpectralEstimate exact = exact_rho_extremal(spec);
        SpectralEstimate power =
            distance_spectral_radius(build_extremal(spec));
        CHECK(std::abs(exact.value - power.value) <= 2e-9);
        CHECK(exact.lo <= power.hi);
        CHECK(power.lo <= exact.hi);
    }
}

TEST_CASE("family ceilings") {
    CHECK(lemma_bound_value(ExtremalFamily::g1_join, 12) == Rational(14));
    CHECK(lemma_bound_value(ExtremalFamily::g2_bipartite, 12) == Rational(19));
    CHECK(lemma_bound_value(ExtremalFamily::g2_bipartite, 13) ==
          Rational(41, 2));
}

TEST_CASE("bound sweep rows") {
    auto rows = check_lemma_bounds(ExtremalFamily::g1_join, 2, 3, 10, 14);
    REQUIRE(rows.size() == 10);
    for (const auto& r : rows) {
        CHECK(r.error.empty());
        CHECK(r.verdict == LemmaBoundRow::Verdict::pass);
        CHECK(r.in_hypothesis == (r.n >= 2 * r.k + 6));
        CHECK(r.rho.hi < to_double(r.bound));
    }

    auto brows =
        check_lemma_bounds(ExtremalFamily::g2_bipartite, 2, 2, 12, 15);
    REQUIRE(brows.size() == 2);  // odd n skipped
    for (const auto& r : brows) {
        CHECK(r.verdict == LemmaBoundRow::Verdict::pass);
        CHECK(r.in_hypothesis);
    }

    // Out-of-domain combinations surface as per-row errors, not throws.
    auto erows = check_lemma_bounds(ExtremalFamily::g1_join, 5, 5, 5, 5);
    REQUIRE(erows.size() == 1);
    CHECK_FALSE(erows[0].error.empty());
}

TEST_SUITE_END();
