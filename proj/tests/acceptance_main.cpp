// Acceptance checks, one printed line per criterion.  Exit code 0 iff all
// pass.  Tolerances are pinned here, next to the checks that use them.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "graphcert/campaign.hpp"
#include "graphcert/distance.hpp"
#include "graphcert/enumerate.hpp"
#include "graphcert/errors.hpp"
#include "graphcert/extremal.hpp"
#include "graphcert/packing.hpp"
#include "graphcert/random.hpp"

using namespace graphcert;

namespace {

constexpr double kWidthTol = 1e-9;   // certified enclosure width
constexpr double kAgreeTol = 2e-9;   // quotient vs full-matrix agreement
constexpr double kValueTol = 1e-9;   // point-value and equality slack
constexpr std::uint64_t kRandomRoot = 20260814;  // criterion-3 random suite
constexpr std::uint64_t kCampaignSeed = 424242;  // criterion-6 campaigns

void fail(bool& ok, std::string& note, const std::string& msg) {
    if (ok) note = msg;  // keep the first failure
    ok = false;
}

// ---- shared state between criteria ------------------------------------

// Criterion 7 checks the edge-count implication over the criterion-3 and
// criterion-6 suites; those suites record their outcomes here.
struct EdgeFloorStats {
    long long general_hits = 0;
    long long bipartite_hits = 0;
    bool ok = true;
    std::string first_fail;
    bool suite3_done = false;
    bool suite6_done = false;
};
EdgeFloorStats floor_stats;

void record_edge_floors(const Graph& g, const SpectralEstimate& est) {
    int n = g.n();
    if (est.hi < n + 2.0) {
        ++floor_stats.general_hits;
        if (!(Rational(g.m()) > edge_count_floor(n, BoundMode::general))) {
            floor_stats.ok = false;
            if (floor_stats.first_fail.empty())
                floor_stats.first_fail =
                    "general floor violated at n=" + std::to_string(n) +
                    " m=" + std::to_string(g.m());
        }
    }
    if (n % 2 == 0 && est.hi < 1.5 * n + 1.0 &&
        classify(g).balanced_bipartite) {
        ++floor_stats.bipartite_hits;
        if (!(Rational(g.m()) >
              edge_count_floor(n, BoundMode::balanced_bipartite))) {
            floor_stats.ok = false;
            if (floor_stats.first_fail.empty())
                floor_stats.first_fail =
                    "bipartite floor violated at n=" + std::to_string(n) +
                    " m=" + std::to_string(g.m());
        }
    }
}

struct ThmConfig {
    CampaignKind kind;
    int k, n;
    double p;  // 0 = default bias 1 - 2/n
};
const std::vector<ThmConfig> kThmConfigs = {
    {CampaignKind::thm_main1, 2, 12, 0.0},
    {CampaignKind::thm_main1, 2, 14, 0.0},
    {CampaignKind::thm_main2, 2, 16, 0.95},
    {CampaignKind::thm_main2, 2, 20, 0.95},
};
constexpr long long kThmSamples = 500;
std::vector<Report> thm_reports;

CampaignConfig thm_config(const ThmConfig& tc) {
    CampaignConfig cfg;
    cfg.campaign = tc.kind;
    cfg.k_lo = cfg.k_hi = tc.k;
    cfg.n_lo = cfg.n_hi = tc.n;
    cfg.samples = kThmSamples;
    cfg.seed = kCampaignSeed;
    cfg.p = tc.p;
    return cfg;
}

// ---- criteria ----------------------------------------------------------

bool sweep_family(ExtremalFamily family, std::string& note) {
    bool ok = true;
    long long rows = 0;
    for (int k = 2; k <= 5; ++k) {
        int n0 = family == ExtremalFamily::g1_join ? 2 * k + 6 : 4 * k + 4;
        int step = family == ExtremalFamily::g1_join ? 1 : 2;
        for (int n = n0; n <= 40; n += step) {
            ExtremalSpec spec{family, k, n};
            SpectralEstimate exact = exact_rho_extremal(spec, kWidthTol);
            SpectralEstimate power =
                distance_spectral_radius(build_extremal(spec), kWidthTol);
            Rational ceiling = lemma_bound_value(family, n);
            ++rows;
            if (!(exact.width() <= kWidthTol))
                fail(ok, note, "enclosure too wide at k=" + std::to_string(k) +
                                   " n=" + std::to_string(n));
            if (!(Rational(exact.hi) < ceiling))
                fail(ok, note, "ceiling missed at k=" + std::to_string(k) +
                                   " n=" + std::to_string(n));
            if (!(std::abs(exact.value - power.value) <= kAgreeTol))
                fail(ok, note, "methods disagree at k=" + std::to_string(k) +
                                   " n=" + std::to_string(n));
        }
    }
    if (ok) note = std::to_string(rows) + " rows certified";
    return ok;
}

bool criterion_rayleigh(std::string& note) {
    bool ok = true;
    long long exhaustive = 0;
    for (int n = 1; n <= 7; ++n)
        enumerate_small_graphs(n, true, [&](const Graph& g) {
            DistanceMatrix dm = apsp(g);
            SpectralEstimate est = distance_spectral_radius(dm, kWidthTol);
            if (!(to_double(rayleigh_lower_bound(dm)) <= est.lo + kValueTol))
                fail(ok, note,
                     "lower bound fails on an n=" + std::to_string(n) +
                         " graph");
            record_edge_floors(g, est);
            ++exhaustive;
        });

    for (int i = 0; i < 1000; ++i) {
        SplitMix64 param{derive_seed(kRandomRoot, static_cast<std::uint64_t>(i))};
        int n = 2 + static_cast<int>(param.next_below(29));  // 2..30
        double p = 0.25 + 0.7 * param.next_unit();
        Graph g = random_graph(n, 1, RandomModel::gnp, p, param.next());
        DistanceMatrix dm = apsp(g);
        SpectralEstimate est = distance_spectral_radius(dm, kWidthTol);
        if (!(to_double(rayleigh_lower_bound(dm)) <= est.lo + kValueTol))
            fail(ok, note, "lower bound fails on random sample " +
                               std::to_string(i));
        record_edge_floors(g, est);
    }

    // Transmission-regular families: the ones vector is the Perron vector,
    // so the bound is tight.
    for (int n = 3; n <= 20; ++n) {
        DistanceMatrix dm = apsp(Graph::cycle(n));
        SpectralEstimate est = distance_spectral_radius(dm, kWidthTol);
        double r = to_double(rayleigh_lower_bound(dm));
        if (!(std::abs(r - est.value) <= kValueTol))
            fail(ok, note, "cycle equality fails at n=" + std::to_string(n));
    }
    for (int n = 2; n <= 20; ++n) {
        DistanceMatrix dm = apsp(Graph::complete(n));
        SpectralEstimate est = distance_spectral_radius(dm, kWidthTol);
        double r = to_double(rayleigh_lower_bound(dm));
        if (!(std::abs(r - est.value) <= kValueTol))
            fail(ok, note,
                 "complete-graph equality fails at n=" + std::to_string(n));
    }
    floor_stats.suite3_done = true;
    if (ok)
        note = std::to_string(exhaustive) + " exhaustive + 1000 random + 37 tight";
    return ok;
}

bool criterion_equivalence(std::string& note) {
    CampaignConfig cfg;
    cfg.campaign = CampaignKind::tree_packing_equiv;
    cfg.k_lo = 1;
    cfg.k_hi = 3;
    cfg.n_lo = 2;
    cfg.n_hi = 6;
    Report rep = run_campaign(cfg);
    bool ok = rep.internal_failures == 0 && rep.errors == 0;
    long long matches = 0;
    for (const auto& row : rep.rows)
        if (row.conclusion == "Match") ++matches;
    if (matches != static_cast<long long>(rep.rows.size())) ok = false;
    note = std::to_string(matches) + "/" + std::to_string(rep.rows.size()) +
           " cases match";
    return ok;
}

bool criterion_implication(std::string& note) {
    bool ok = true;
    long long vacuous = 0, holds = 0, validated = 0;
    for (int n = 2; n <= 6; ++n)
        enumerate_small_graphs(n, true, [&](const Graph& g) {
            NuFResult nu = nu_f_exact(g);
            for (int k = 1; k <= 2; ++k)
                for (int d = 1; d <= 3; ++d) {
                    Rational threshold = Rational(k) + Rational(d - 1, d);
                    FangYangOutcome out = fang_yang_check(g, k, d);
                    if (nu.value <= threshold) {
                        ++vacuous;
                        if (out != FangYangOutcome::vacuous)
                            fail(ok, note, "vacuous case misreported");
                        continue;
                    }
                    if (out != FangYangOutcome::implication_holds)
                        fail(ok, note, "counterexample reported at n=" +
                                           std::to_string(n));
                    ++holds;
                    PResult pr = verify_P(g, k, d);
                    if (pr.verdict != PVerdict::verified ||
                        !pr.certificate.has_value()) {
                        fail(ok, note, "verification missing a certificate");
                        continue;
                    }
                    try {
                        validate_p_certificate(g, k, d, *pr.certificate);
                        ++validated;
                    } catch (const std::exception& e) {
                        fail(ok, note,
                             std::string("certificate rejected: ") + e.what());
                    }
                }
        });
    if (ok)
        note = std::to_string(holds) + " held (" + std::to_string(validated) +
               " certificates revalidated), " + std::to_string(vacuous) +
               " vacuous";
    return ok;
}

bool criterion_campaigns(std::string& note) {
    bool ok = true;
    thm_reports.clear();
    std::string parts;
    for (const ThmConfig& tc : kThmConfigs) {
        Report rep = run_campaign(thm_config(tc));
        if (rep.counterexamples != 0)
            fail(ok, note, "counterexample row emitted");
        if (rep.internal_failures != 0 || rep.errors != 0)
            fail(ok, note, "campaign rows errored");
        if (rep.hypothesis_passes < 1)
            fail(ok, note, "no sample passed the spectral hypothesis at n=" +
                               std::to_string(tc.n));
        if (rep.verified != rep.hypothesis_passes)
            fail(ok, note, "a passing sample was not verified at n=" +
                               std::to_string(tc.n));
        if (!parts.empty()) parts += ", ";
        parts += "n" + std::to_string(tc.n) + ":" +
                 std::to_string(rep.hypothesis_passes) + "/" +
                 std::to_string(kThmSamples);
        thm_reports.push_back(std::move(rep));
    }
    floor_stats.suite6_done = true;
    if (ok) note = "hypothesis passes " + parts;
    return ok;
}

bool criterion_edge_floors(std::string& note) {
    bool ok = floor_stats.suite3_done && floor_stats.suite6_done;
    if (!ok) {
        note = "prerequisite suites did not run";
        return false;
    }
    // Criterion-6 suite: regenerate the identical samples and check the
    // implication on each.
    for (std::size_t ci = 0; ci < kThmConfigs.size(); ++ci) {
        const ThmConfig& tc = kThmConfigs[ci];
        const Report& rep = thm_reports[ci];
        double p = tc.p > 0 ? tc.p : 1.0 - 2.0 / tc.n;
        for (long long s = 0; s < kThmSamples; ++s) {
            Graph g = random_graph(tc.n, tc.k + 2,
                                   tc.kind == CampaignKind::thm_main2
                                       ? RandomModel::bipartite_gnp
                                       : RandomModel::gnp,
                                   p,
                                   derive_seed(kCampaignSeed,
                                               static_cast<std::uint64_t>(s)));
            if (graph_fingerprint_hex(g) !=
                rep.rows[static_cast<std::size_t>(s)].graph_hash) {
                fail(ok, note, "suite regeneration diverged");
                break;
            }
            record_edge_floors(g, distance_spectral_radius(g, kWidthTol));
        }
    }
    if (!floor_stats.ok) fail(ok, note, floor_stats.first_fail);
    if (floor_stats.general_hits < 1 || floor_stats.bipartite_hits < 1)
        fail(ok, note, "no graph triggered the implication");
    if (ok)
        note = std::to_string(floor_stats.general_hits) + " general + " +
               std::to_string(floor_stats.bipartite_hits) +
               " bipartite triggers, all floors met";
    return ok;
}

bool criterion_comb(std::string& note) {
    Report rep = check_comb_lemmas(200, 5, 12);
    long long cases = 0;
    bool ok = true;
    for (const auto& row : rep.rows)
        if (row.conclusion != "PASS") fail(ok, note, "FAIL row " + row.id);
    if (rep.internal_failures != 0) fail(ok, note, "internal failures");
    (void)cases;
    if (ok) note = std::to_string(rep.rows.size()) + " sweep rows PASS";
    return ok;
}

bool criterion_points(std::string& note) {
    bool ok = true;
    for (int n = 2; n <= 50; ++n) {
        SpectralEstimate est = distance_spectral_radius(Graph::complete(n));
        if (!(std::abs(est.value - (n - 1)) <= kValueTol))
            fail(ok, note, "complete graph value off at n=" +
                               std::to_string(n));
    }
    SpectralEstimate p3 = distance_spectral_radius(Graph::path(3));
    if (!(std::abs(p3.value - 2.7320508075688772935) <= kValueTol))
        fail(ok, note, "three-vertex path value off");

    if (!(nu_f_exact(Graph::cycle(4)).value == Rational(4, 3)))
        fail(ok, note, "fractional value of the 4-cycle off");

    PackingCertificate pc = tau_packing(Graph::complete(4), 2);
    if (pc.kind != PackingCertificate::Kind::trees_found ||
        tau(Graph::complete(4)) != 2)
        fail(ok, note, "packing number of K4 off");
    else
        validate_tree_packing(Graph::complete(4), pc.trees);

    PResult yes = verify_P(Graph::complete(4), 1, 2);
    if (yes.verdict != PVerdict::verified)
        fail(ok, note, "K4 property should verify");
    else
        validate_p_certificate(Graph::complete(4), 1, 2, *yes.certificate);
    PResult no = verify_P(Graph::cycle(4), 1, 2);
    if (no.verdict != PVerdict::refuted || no.tier != 3)
        fail(ok, note, "C4 property should be refuted exhaustively");
    if (ok) note = "49 + 1 radii, 1 fractional, 1 packing, 2 property checks";
    return ok;
}

bool criterion_determinism(std::string& note) {
    bool ok = true;
    std::vector<CampaignConfig> configs;
    {
        CampaignConfig c;
        c.campaign = CampaignKind::thm_main1;
        c.k_lo = c.k_hi = 2;
        c.n_lo = 12;
        c.n_hi = 13;
        c.samples = 20;
        c.seed = 123;
        configs.push_back(c);
    }
    {
        CampaignConfig c;
        c.campaign = CampaignKind::thm_main2;
        c.k_lo = c.k_hi = 2;
        c.n_lo = c.n_hi = 16;
        c.samples = 10;
        c.seed = 5;
        c.p = 0.95;
        configs.push_back(c);
    }
    {
        CampaignConfig c;
        c.campaign = CampaignKind::lemma_bounds;
        c.family = ExtremalFamily::g2_bipartite;
        c.k_lo = 2;
        c.k_hi = 3;
        c.n_lo = 12;
        c.n_hi = 16;
        configs.push_back(c);
    }
    {
        CampaignConfig c;
        c.campaign = CampaignKind::fang_yang;
        c.k_lo = 1;
        c.k_hi = 2;
        c.n_lo = 2;
        c.n_hi = 5;
        c.d_lo = 1;
        c.d_hi = 3;
        configs.push_back(c);
    }
    {
        CampaignConfig c;
        c.campaign = CampaignKind::tree_packing_equiv;
        c.k_lo = 1;
        c.k_hi = 2;
        c.n_lo = 2;
        c.n_hi = 5;
        configs.push_back(c);
    }
    {
        CampaignConfig c;
        c.campaign = CampaignKind::comb_lemmas;
        c.a_max = 50;
        c.s_max = 3;
        c.value_max = 8;
        configs.push_back(c);
    }
    for (const CampaignConfig& c : configs) {
        std::string a = run_campaign(c).to_csv();
        std::string b = run_campaign(c).to_csv();
        if (a != b)
            fail(ok, note,
                 "rerun differs for " + to_string(c.campaign));
        if (a.empty() || a.find('\n') == a.size() - 1)
            fail(ok, note, "empty report for " + to_string(c.campaign));
    }
    if (ok)
        note = std::to_string(configs.size()) +
               " campaign kinds byte-identical on rerun";
    return ok;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "clique-join radii certified below n+2",
         [](std::string& n) { return sweep_family(ExtremalFamily::g1_join, n); }},
        {2, "bipartite radii certified below 3n/2+1",
         [](std::string& n) {
             return sweep_family(ExtremalFamily::g2_bipartite, n);
         }},
        {3, "ones-vector Rayleigh bound with tight families",
         criterion_rayleigh},
        {4, "packing number matches the fractional threshold",
         criterion_equivalence},
        {5, "fractional excess forces the packing property",
         criterion_implication},
        {6, "dense random campaigns verify the main implication",
         criterion_campaigns},
        {7, "spectral ceilings force edge counts", criterion_edge_floors},
        {8, "combinatorial inequality sweeps", criterion_comb},
        {9, "known point values", criterion_points},
        {10, "byte-identical campaign reruns", criterion_determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        bool pass = false;
        std::string detail;
        try {
            pass = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        std::printf("[%s] criterion %d: %s (%.1fs%s%s)\n",
                    pass ? "PASS" : "FAIL", c.id, c.name, secs,
                    detail.empty() ? "" : "; ", detail.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
