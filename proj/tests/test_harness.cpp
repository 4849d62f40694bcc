#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "graphcert/campaign.hpp"
#include "graphcert/enumerate.hpp"
#include "graphcert/errors.hpp"
#include "graphcert/random.hpp"

using namespace graphcert;

TEST_SUITE_BEGIN("harness");

TEST_CASE("splitmix64 reference stream") {
    // First outputs of the reference sequence from seed 0x0.
    SplitMix64 rng{0};
    CHECK(rng.next() == 0xE220A8397B1DCDAFull);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
    CHECK(rng.next() == 0x06C45D188009454Full);
    for (int i = 0; i < 1000; ++i) {
        double u = rng.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    CHECK(derive_seed(41, 3) == 42);
}

TEST_CASE("exhaustive stream counts") {
    CHECK(enumerate_small_graphs(2, true, [](const Graph&) {}) == 1);
    CHECK(enumerate_small_graphs(2, false, [](const Graph&) {}) == 2);
    CHECK(enumerate_small_graphs(3, true, [](const Graph&) {}) == 4);
    CHECK(enumerate_small_graphs(3, false, [](const Graph&) {}) == 8);
    CHECK(enumerate_small_graphs(4, true, [](const Graph&) {}) == 38);
    CHECK(enumerate_small_graphs(1, true, [](const Graph&) {}) == 1);
    CHECK_THROWS_AS(enumerate_small_graphs(9, true, [](const Graph&) {}),
                    SizeGuardError);
    CHECK_THROWS_AS(enumerate_small_graphs(0, true, [](const Graph&) {}),
                    InvalidParameterError);
}

TEST_CASE("stride subsamples deterministically") {
    std::vector<std::uint64_t> full, strided;
    enumerate_small_graphs(4, false,
                           [&](const Graph& g) {
                               full.push_back(graph_fingerprint(g));
                           });
    long long c = enumerate_small_graphs(
        4, false,
        [&](const Graph& g) { strided.push_back(graph_fingerprint(g)); }, 3);
    CHECK(c == 22);  // ceil(64 / 3)
    REQUIRE(strided.size() == 22);
    for (std::size_t i = 0; i < strided.size(); ++i)
        CHECK(strided[i] == full[3 * i]);
}

TEST_CASE("streamed graphs are delivered connected when asked") {
    long long n4 = enumerate_small_graphs(4, true, [](const Graph& g) {
        CHECK(g.n() == 4);
        CHECK(is_connected(g));
    });
    CHECK(n4 == 38);
}

TEST_CASE("random graphs are reproducible and repaired") {
    Graph a = random_graph(12, 4, RandomModel::gnp, 0.5, 77);
    Graph b = random_graph(12, 4, RandomModel::gnp, 0.5, 77);
    CHECK(a == b);
    CHECK(a.min_degree() >= 4);
    CHECK(is_connected(a));

    Graph c = random_graph(12, 4, RandomModel::gnp, 0.5, 78);
    CHECK(graph_fingerprint(a) != graph_fingerprint(c));

    Graph d = random_graph(16, 3, RandomModel::bipartite_gnp, 0.8, 5);
    GraphProfile p = classify(d);
    CHECK(p.connected);
    CHECK(p.balanced_bipartite);
    CHECK(p.min_degree >= 3);
}

TEST_CASE("random graph parameter guards") {
    CHECK_THROWS_AS(random_graph(0, 0, RandomModel::gnp, 0.5, 1),
                    InvalidParameterError);
    CHECK_THROWS_AS(random_graph(5, 5, RandomModel::gnp, 0.5, 1),
                    InvalidParameterError);
    CHECK_THROWS_AS(random_graph(5, 1, RandomModel::gnp, 0.0, 1),
                    InvalidParameterError);
    CHECK_THROWS_AS(random_graph(5, 1, RandomModel::gnp, 1.0, 1),
                    InvalidParameterError);
    CHECK_THROWS_AS(random_graph(5, 1, RandomModel::bipartite_gnp, 0.5, 1),
                    InvalidParameterError);  // odd order
}

TEST_CASE("campaign config json round-trip and validation") {
    nlohmann::json j = {{"campaign", "thm_main1"},
                        {"k_range", {2, 3}},
                        {"n_range", {12, 14}},
                        {"samples", 10},
                        {"seed", 9},
                        {"p", 0.9}};
    CampaignConfig c = CampaignConfig::from_json(j);
    CHECK(c.campaign == CampaignKind::thm_main1);
    CHECK(c.k_lo == 2);
    CHECK(c.k_hi == 3);
    CHECK(c.samples == 10);
    CHECK(c.seed == 9);

    CampaignConfig back = CampaignConfig::from_json(c.to_json());
    CHECK(back.n_lo == c.n_lo);
    CHECK(back.tol == c.tol);
    CHECK(back.format == c.format);

    CHECK_THROWS_AS(CampaignConfig::from_json({{"campaign", "nope"}}),
                    InvalidParameterError);
    CHECK_THROWS_AS(CampaignConfig::from_json({{"campaign", "thm_main1"},
                                               {"typo_key", 1}}),
                    InvalidParameterError);
    CHECK_THROWS_AS(CampaignConfig::from_json({{"campaign", "thm_main1"},
                                               {"k_range", {3, 2}}}),
                    InvalidParameterError);
    CHECK_THROWS_AS(CampaignConfig::from_json({{"campaign", "fang_yang"},
                                               {"n_range", {3, 12}}}),
                    InvalidParameterError);
}

TEST_CASE("campaign reports are deterministic byte for byte") {
    CampaignConfig cfg;
    cfg.campaign = CampaignKind::thm_main1;
    cfg.k_lo = cfg.k_hi = 2;
    cfg.n_lo = cfg.n_hi = 12;
    cfg.samples = 3;
    cfg.seed = 99;
    Report r1 = run_campaign(cfg);
    Report r2 = run_campaign(cfg);
    CHECK(r1.to_csv() == r2.to_csv());
    CHECK(r1.rows.size() == 3);
    CHECK(r1.counterexamples == 0);

    cfg.seed = 100;
    Report r3 = run_campaign(cfg);
    CHECK(r1.to_csv() != r3.to_csv());
}

TEST_CASE("exhaustive campaigns conclude on every row") {
    CampaignConfig cfg;
    cfg.campaign = CampaignKind::fang_yang;
    cfg.k_lo = cfg.k_hi = 1;
    cfg.n_lo = 3;
    cfg.n_hi = 4;
    cfg.d_lo = 1;
    cfg.d_hi = 2;
    Report rep = run_campaign(cfg);
    CHECK(rep.rows.size() == (4 + 38) * 2);
    CHECK(rep.counterexamples == 0);
    CHECK(rep.internal_failures == 0);
    CHECK(rep.errors == 0);
    for (const auto& row : rep.rows) {
        bool known = row.conclusion == "ImplicationHolds" ||
                     row.conclusion == "Vacuous";
        CHECK(known);
    }

    CampaignConfig tcfg;
    tcfg.campaign = CampaignKind::tree_packing_equiv;
    tcfg.k_lo = 1;
    tcfg.k_hi = 2;
    tcfg.n_lo = 3;
    tcfg.n_hi = 4;
    Report trep = run_campaign(tcfg);
    CHECK(trep.rows.size() == (4 + 38) * 2);
    CHECK(trep.internal_failures == 0);
    for (const auto& row : trep.rows) CHECK(row.conclusion == "Match");
}

TEST_CASE("bound sweep campaign emits certified rows") {
    CampaignConfig cfg;
    cfg.campaign = CampaignKind::lemma_bounds;
    cfg.family = ExtremalFamily::g1_join;
    cfg.k_lo = cfg.k_hi = 2;
    cfg.n_lo = 10;
    cfg.n_hi = 12;
    Report rep = run_campaign(cfg);
    REQUIRE(rep.rows.size() == 3);
    for (const auto& row : rep.rows) {
        CHECK(row.conclusion == "PASS");
        CHECK(row.threshold_lo == row.threshold_hi);
        CHECK(row.rho_hi != "-");
    }
    CHECK(rep.rows[0].id == "g1-k2-n10");
}

TEST_CASE("inequality sweeps count their cases") {
    Report rep = check_comb_lemmas(10, 2, 4);
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[0].id == "binomial-shift");
    CHECK(rep.rows[0].conclusion == "PASS");
    CHECK(rep.rows[0].detail == "cases=55;fails=0");
    CHECK(rep.rows[1].id == "product-sum-s1");
    CHECK(rep.rows[1].detail == "cases=22;fails=0");
    CHECK(rep.rows[2].id == "product-sum-s2");
    CHECK(rep.rows[2].detail == "cases=253;fails=0");
    CHECK(rep.exit_code() == 0);
    CHECK_THROWS_AS(check_comb_lemmas(0, 1, 1), InvalidParameterError);
}

TEST_CASE("report rendering") {
    CampaignConfig cfg;
    cfg.campaign = CampaignKind::comb_lemmas;
    cfg.a_max = 5;
    cfg.s_max = 1;
    cfg.value_max = 2;
    Report rep = run_campaign(cfg);
    std::string csv = rep.to_csv();
    CHECK(csv.rfind("id,graph_hash,hypotheses,rho_lo,rho_hi,threshold_lo,"
                    "threshold_hi,comparison,conclusion,detail\n",
                    0) == 0);

    nlohmann::json j = rep.to_json();
    CHECK(j["summary"]["rows"] == rep.rows.size());
    CHECK(j["rows"].size() == rep.rows.size());
    CHECK(j["config"]["campaign"] == "comb_lemmas");

    auto path = std::filesystem::temp_directory_path() / "gc_report_test.csv";
    cfg.out = path.string();
    Report rep2 = run_campaign(cfg);
    rep2.config = cfg;
    write_report(rep2);
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    CHECK(text == rep2.to_csv());
    std::filesystem::remove(path);
}

TEST_CASE("exit codes reflect counterexamples and inconsistencies only") {
    Report r;
    CHECK(r.exit_code() == 0);
    r.errors = 3;
    CHECK(r.exit_code() == 0);  // recorded, but not a refutation
    r.counterexamples = 1;
    CHECK(r.exit_code() == 1);
    r.counterexamples = 0;
    r.internal_failures = 1;
    CHECK(r.exit_code() == 1);
}

TEST_CASE("oversized certificates move to side files") {
    Report rep;
    rep.config.campaign = CampaignKind::thm_main1;
    rep.config.format = CampaignConfig::Format::json;
    auto out = std::filesystem::temp_directory_path() / "gc_side_test.json";
    rep.config.out = out.string();

    ReportRow row;
    row.id = "big-cert";
    row.conclusion = "Verified";
    row.certificate =
        "\"" + std::string(2 * kInlineCertificateLimit, 'x') + "\"";
    rep.rows.push_back(row);
    write_report(rep);

    std::ifstream in(out);
    nlohmann::json j = nlohmann::json::parse(in);
    CHECK_FALSE(j["rows"][0].contains("certificate"));
    auto ref = std::filesystem::path(
        j["rows"][0]["certificate_ref"].get<std::string>());
    CHECK(std::filesystem::exists(ref));
    CHECK(std::filesystem::file_size(ref) > kInlineCertificateLimit);
    std::filesystem::remove(ref);
    std::filesystem::remove_all(out.string() + ".certs");
    std::filesystem::remove(out);
}

TEST_CASE("shortest round-trip float formatting") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(13.080209359148316) == "13.080209359148316");
    CHECK(format_double(1e-9) == "1e-09");
    CHECK(format_double(2.0) == "2");
}

TEST_SUITE_END();
