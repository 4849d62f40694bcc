#include "graphcert/campaign.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "graphcert/codec.hpp"
#include "graphcert/enumerate.hpp"
#include "graphcert/errors.hpp"
#include "graphcert/random.hpp"

namespace graphcert {

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string to_string(CampaignKind kind) {
    switch (kind) {
        case CampaignKind::thm_main1: return "thm_main1";
        case CampaignKind::thm_main2: return "thm_main2";
        case CampaignKind::lemma_bounds: return "lemma_bounds";
        case CampaignKind::fang_yang: return "fang_yang";
        case CampaignKind::tree_packing_equiv: return "tree_packing_equiv";
        case CampaignKind::comb_lemmas: return "comb_lemmas";
    }
    return "?";
}

CampaignKind campaign_kind_from_string(const std::string& name) {
    for (CampaignKind k :
         {CampaignKind::thm_main1, CampaignKind::thm_main2,
          CampaignKind::lemma_bounds, CampaignKind::fang_yang,
          CampaignKind::tree_packing_equiv, CampaignKind::comb_lemmas})
        if (to_string(k) == name) return k;
    throw InvalidParameterError("unknown campaign '" + name + "'");
}

CampaignConfig CampaignConfig::from_json(const nlohmann::json& j) {
    CampaignConfig c;
    if (!j.is_object()) throw InvalidParameterError("config must be an object");
    auto range = [&](const nlohmann::json& v, int& lo, int& hi,
                     const char* key) {
        if (!v.is_array() || v.size() != 2)
            throw InvalidParameterError(std::string(key) +
                                        " must be [lo, hi]");
        lo = v[0].get<int>();
        hi = v[1].get<int>();
    };
    for (const auto& [key, value] : j.items()) {
        if (key == "campaign")
            c.campaign = campaign_kind_from_string(value.get<std::string>());
        else if (key == "k_range")
            range(value, c.k_lo, c.k_hi, "k_range");
        else if (key == "n_range")
            range(value, c.n_lo, c.n_hi, "n_range");
        else if (key == "n_step")
            c.n_step = value.get<int>();
        else if (key == "d_range")
            range(value, c.d_lo, c.d_hi, "d_range");
        else if (key == "samples")
            c.samples = value.get<long long>();
        else if (key == "seed")
            c.seed = value.get<std::uint64_t>();
        else if (key == "tol")
            c.tol = value.get<double>();
        else if (key == "max_enum_n")
            c.max_enum_n = value.get<int>();
        else if (key == "p")
            c.p = value.get<double>();
        else if (key == "family") {
            std::string f = value.get<std::string>();
            if (f == "g1")
                c.family = ExtremalFamily::g1_join;
            else if (f == "g2")
                c.family = ExtremalFamily::g2_bipartite;
            else
                throw InvalidParameterError("family must be g1 or g2");
        } else if (key == "a_max")
            c.a_max = value.get<int>();
        else if (key == "s_max")
            c.s_max = value.get<int>();
        else if (key == "value_max")
            c.value_max = value.get<int>();
        else if (key == "stride")
            c.stride = value.get<std::uint64_t>();
        else if (key == "out")
            c.out = value.get<std::string>();
        else if (key == "format") {
            std::string f = value.get<std::string>();
            if (f == "csv")
                c.format = Format::csv;
            else if (f == "json")
                c.format = Format::json;
            else
                throw InvalidParameterError("format must be csv or json");
        } else
            throw InvalidParameterError("unknown config key '" + key + "'");
    }
    c.validate();
    return c;
}

nlohmann::json CampaignConfig::to_json() const {
    return {{"campaign", graphcert::to_string(campaign)},
            {"k_range", {k_lo, k_hi}},
            {"n_range", {n_lo, n_hi}},
            {"n_step", n_step},
            {"d_range", {d_lo, d_hi}},
            {"samples", samples},
            {"seed", seed},
            {"tol", tol},
            {"max_enum_n", max_enum_n},
            {"p", p},
            {"family",
             family == ExtremalFamily::g1_join ? "g1" : "g2"},
            {"a_max", a_max},
            {"s_max", s_max},
            {"value_max", value_max},
            {"stride", stride},
            {"out", out},
            {"format", format == Format::csv ? "csv" : "json"}};
}

void CampaignConfig::validate() const {
    if (k_lo < 1 || k_hi < k_lo)
        throw InvalidParameterError("bad k_range");
    if (n_lo < 1 || n_hi < n_lo)
        throw InvalidParameterError("bad n_range");
    if (n_step < 1) throw InvalidParameterError("n_step must be >= 1");
    if (d_lo < 1 || d_hi < d_lo)
        throw InvalidParameterError("bad d_range");
    if (samples < 1) throw InvalidParameterError("samples must be >= 1");
    if (!(tol > 0)) throw InvalidParameterError("tol must be positive");
    if (stride < 1) throw InvalidParameterError("stride must be >= 1");
    if ((campaign == CampaignKind::fang_yang ||
         campaign == CampaignKind::tree_packing_equiv) &&
        n_hi > kEnumerateMaxN)
        throw InvalidParameterError("exhaustive campaigns are guarded at n <= " +
                                    std::to_string(kEnumerateMaxN));
    if (a_max < 1 || s_max < 1 || value_max < 1)
        throw InvalidParameterError("inequality sweep bounds must be >= 1");
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 =
        std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

std::string sanitize(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n' || c == '\r') c = ' ';
    return s;
}

void append_detail(ReportRow& row, const std::string& piece) {
    if (row.detail == "-" || row.detail.empty())
        row.detail = piece;
    else
        row.detail += ";" + piece;
}

void push_row(Report& rep, ReportRow row) {
    if (row.counterexample) ++rep.counterexamples;
    if (row.internal_failure) ++rep.internal_failures;
    if (row.conclusion == "Error") ++rep.errors;
    rep.rows.push_back(std::move(row));
}

std::string verdict_name(PVerdict v) {
    switch (v) {
        case PVerdict::verified: return "Verified";
        case PVerdict::refuted: return "Refuted";
        case PVerdict::unknown: return "Unknown";
    }
    return "?";
}

std::string order_name(IntervalOrder o) {
    switch (o) {
        case IntervalOrder::leq: return "leq";
        case IntervalOrder::gt: return "gt";
        case IntervalOrder::indeterminate: return "indeterminate";
    }
    return "?";
}

Report run_thm_campaign(const CampaignConfig& cfg) {
    bool bipartite = cfg.campaign == CampaignKind::thm_main2;
    Report rep;
    rep.config = cfg;
    std::map<std::pair<int, double>, SpectralEstimate> thresholds;  // by (n·1000+k, tol)
    auto threshold_for = [&](int k, int n, double tol) {
        auto key = std::make_pair(n * 1000 + k, tol);
        auto it = thresholds.find(key);
        if (it != thresholds.end()) return it->second;
        ExtremalSpec spec{bipartite ? ExtremalFamily::g2_bipartite
                                    : ExtremalFamily::g1_join,
                          k, n};
        SpectralEstimate est = exact_rho_extremal(spec, tol);
        thresholds.emplace(key, est);
        return est;
    };

    std::uint64_t ordinal = 0;
    for (int k = cfg.k_lo; k <= cfg.k_hi; ++k)
        for (int n = cfg.n_lo; n <= cfg.n_hi; n += cfg.n_step) {
            if (bipartite && n % 2 != 0) continue;
            int order_floor = bipartite ? 4 * k + 8 : 2 * k + 8;
            for (long long s = 0; s < cfg.samples; ++s, ++ordinal) {
                Timer timer;
                ReportRow row;
                row.id = "k" + std::to_string(k) + "-n" + std::to_string(n) +
                         "-s" + std::to_string(s);
                try {
                    double p = cfg.p > 0 ? cfg.p : 1.0 - 2.0 / n;
                    Graph g = random_graph(
                        n, k + 2,
                        bipartite ? RandomModel::bipartite_gnp
                                  : RandomModel::gnp,
                        p, derive_seed(cfg.seed, ordinal));
                    row.graph_hash = graph_fingerprint_hex(g);
                    GraphProfile prof = classify(g);
                    int delta = prof.min_degree;

                    bool hyp_ok = prof.connected && n >= order_floor &&
                                  delta >= k + 2 &&
                                  (!bipartite || prof.balanced_bipartite);
                    row.hypotheses =
                        std::string("connected=") +
                        (prof.connected ? "PASS" : "FAIL") +
                        ";order=" + (n >= order_floor ? "PASS" : "FAIL") +
                        ";min_degree=" + (delta >= k + 2 ? "PASS" : "FAIL");
                    if (bipartite)
                        row.hypotheses +=
                            std::string(";balanced_bipartite=") +
                            (prof.balanced_bipartite ? "PASS" : "FAIL");

                    DistanceMatrix dm = apsp(g);
                    SpectralEstimate rho = distance_spectral_radius(dm, cfg.tol);
                    SpectralEstimate thr = threshold_for(k, n, cfg.tol);
                    IntervalOrder cmp = compare_leq(rho, thr);
                    if (cmp == IntervalOrder::indeterminate) {
                        rho = distance_spectral_radius(dm, cfg.tol / 100);
                        thr = threshold_for(k, n, cfg.tol / 100);
                        cmp = compare_leq(rho, thr);
                        append_detail(row, "refined=1");
                    }
                    row.rho_lo = format_double(rho.lo);
                    row.rho_hi = format_double(rho.hi);
                    row.threshold_lo = format_double(thr.lo);
                    row.threshold_hi = format_double(thr.hi);
                    row.comparison = order_name(cmp);

                    if (hyp_ok && cmp == IntervalOrder::leq) {
                        ++rep.hypothesis_passes;
                        PResult pr = verify_P(g, k, delta);
                        row.conclusion = verdict_name(pr.verdict);
                        append_detail(row, "tier=" + std::to_string(pr.tier));
                        append_detail(row, "delta=" + std::to_string(delta));
                        if (pr.verdict == PVerdict::verified) {
                            ++rep.verified;
                            row.certificate = to_json(*pr.certificate).dump();
                        } else if (pr.verdict == PVerdict::refuted) {
                            // Soundness gate: hypotheses passed, comparison
                            // certified, refutation exhaustive.
                            if (pr.tier == 3)
                                row.counterexample = true;
                            else
                                row.internal_failure = true;
                        }
                    } else {
                        row.conclusion = "NotApplicable";
                    }
                } catch (const std::exception& e) {
                    row.conclusion = "Error";
                    append_detail(row, sanitize(e.what()));
                }
                row.wall_ms = timer.ms();
                push_row(rep, std::move(row));
            }
        }
    return rep;
}

Report run_lemma_bounds(const CampaignConfig& cfg) {
    Report rep;
    rep.config = cfg;
    auto rows = check_lemma_bounds(cfg.family, cfg.k_lo, cfg.k_hi, cfg.n_lo,
                                   cfg.n_hi, cfg.tol);
    for (const auto& r : rows) {
        ReportRow row;
        row.id = std::string(r.family == ExtremalFamily::g1_join ? "g1" : "g2") +
                 "-k" + std::to_string(r.k) + "-n" + std::to_string(r.n);
        row.threshold_lo = row.threshold_hi = rational_string(r.bound);
        append_detail(row, r.in_hypothesis ? "in_hypothesis=yes"
                                           : "in_hypothesis=no");
        if (!r.error.empty()) {
            row.conclusion = "Error";
            append_detail(row, sanitize(r.error));
        } else {
            row.rho_lo = format_double(r.rho.lo);
            row.rho_hi = format_double(r.rho.hi);
            switch (r.verdict) {
                case LemmaBoundRow::Verdict::pass:
                    row.conclusion = "PASS";
                    break;
                case LemmaBoundRow::Verdict::fail:
                    row.conclusion = "FAIL";
                    // An in-hypothesis failure contradicts a proved bound.
                    row.internal_failure = r.in_hypothesis;
                    break;
                case LemmaBoundRow::Verdict::indeterminate:
                    row.conclusion = "INDETERMINATE";
                    break;
            }
        }
        push_row(rep, std::move(row));
    }
    return rep;
}

Report run_fang_yang(const CampaignConfig& cfg) {
    Report rep;
    rep.config = cfg;
    for (int n = cfg.n_lo; n <= cfg.n_hi; n += cfg.n_step) {
        long long gi = 0;
        enumerate_small_graphs(
            n, true,
            [&](const Graph& g) {
                ++gi;
                std::string hash = graph_fingerprint_hex(g);
                for (int k = cfg.k_lo; k <= cfg.k_hi; ++k)
                    for (int d = cfg.d_lo; d <= cfg.d_hi; ++d) {
                        Timer timer;
                        ReportRow row;
                        row.id = "n" + std::to_string(n) + "-g" +
                                 std::to_string(gi) + "-k" + std::to_string(k) +
                                 "-d" + std::to_string(d);
                        row.graph_hash = hash;
                        try {
                            FangYangOutcome out = fang_yang_check(g, k, d);
                            switch (out) {
                                case FangYangOutcome::implication_holds:
                                    row.conclusion = "ImplicationHolds";
                                    ++rep.hypothesis_passes;
                                    ++rep.verified;
                                    break;
                                case FangYangOutcome::vacuous:
                                    row.conclusion = "Vacuous";
                                    break;
                                case FangYangOutcome::counterexample:
                                    row.conclusion = "COUNTEREXAMPLE";
                                    row.counterexample = true;
                                    ++rep.hypothesis_passes;
                                    break;
                            }
                        } catch (const std::exception& e) {
                            row.conclusion = "Error";
                            append_detail(row, sanitize(e.what()));
                        }
                        row.wall_ms = timer.ms();
                        push_row(rep, std::move(row));
                    }
            },
            cfg.stride);
    }
    return rep;
}

Report run_tree_packing_equiv(const CampaignConfig& cfg) {
    Report rep;
    rep.config = cfg;
    for (int n = cfg.n_lo; n <= cfg.n_hi; n += cfg.n_step) {
        long long gi = 0;
        enumerate_small_graphs(
            n, true,
            [&](const Graph& g) {
                ++gi;
                std::string hash = graph_fingerprint_hex(g);
                NuFResult nu = nu_f_exact(g, cfg.max_enum_n);
                for (int k = cfg.k_lo; k <= cfg.k_hi; ++k) {
                    Timer timer;
                    ReportRow row;
                    row.id = "n" + std::to_string(n) + "-g" +
                             std::to_string(gi) + "-k" + std::to_string(k);
                    row.graph_hash = hash;
                    try {
                        PackingCertificate pc = tau_packing(g, k);
                        bool has_trees =
                            pc.kind == PackingCertificate::Kind::trees_found;
                        if (has_trees)
                            validate_tree_packing(g, pc.trees);
                        else
                            validate_partition_witness(g, *pc.witness, k);
                        bool nu_ge_k = nu.value >= k;
                        row.conclusion =
                            has_trees == nu_ge_k ? "Match" : "MISMATCH";
                        row.internal_failure = has_trees != nu_ge_k;
                        append_detail(row, "nu_f=" + rational_string(nu.value));
                        append_detail(row,
                                      std::string("packing=") +
                                          (has_trees ? "trees_found"
                                                     : "violating_partition"));
                    } catch (const std::exception& e) {
                        row.conclusion = "Error";
                        append_detail(row, sanitize(e.what()));
                    }
                    row.wall_ms = timer.ms();
                    push_row(rep, std::move(row));
                }
            },
            cfg.stride);
    }
    return rep;
}

}  // namespace

Report check_comb_lemmas(int a_max, int s_max, int value_max) {
    if (a_max < 1 || s_max < 1 || value_max < 1)
        throw InvalidParameterError("inequality sweep bounds must be >= 1");
    CampaignConfig cfg;
    cfg.campaign = CampaignKind::comb_lemmas;
    cfg.a_max = a_max;
    cfg.s_max = s_max;
    cfg.value_max = value_max;
    Report rep;
    rep.config = cfg;

    {  // C(a,2) + C(b,2) < C(a+1,2) + C(b-1,2) for 1 <= b <= a
        Timer timer;
        long long cases = 0, fails = 0;
        std::string first_fail;
        auto c2 = [](long long x) { return x * (x - 1) / 2; };
        for (long long a = 1; a <= a_max; ++a)
            for (long long b = 1; b <= a; ++b) {
                ++cases;
                if (!(c2(a) + c2(b) < c2(a + 1) + c2(b - 1))) {
                    ++fails;
                    if (first_fail.empty())
                        first_fail = "a=" + std::to_string(a) +
                                     " b=" + std::to_string(b);
                }
            }
        ReportRow row;
        row.id = "binomial-shift";
        row.conclusion = fails == 0 ? "PASS" : "FAIL";
        row.internal_failure = fails != 0;
        append_detail(row, "cases=" + std::to_string(cases));
        append_detail(row, "fails=" + std::to_string(fails));
        if (!first_fail.empty()) append_detail(row, "first=" + first_fail);
        row.wall_ms = timer.ms();
        push_row(rep, std::move(row));
    }

    {  // sum a_i b_i <= a(b - (s-1)) whenever b >= a; both sides are
       // symmetric under reindexing, so multisets of (a_i, b_i) pairs cover
       // all tuples.
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a <= value_max; ++a)
            for (int b = 0; b <= value_max; ++b)
                if (a + b >= 2) pairs.emplace_back(a, b);
        int np = static_cast<int>(pairs.size());
        std::vector<long long> cases(s_max + 1, 0), fails(s_max + 1, 0);
        std::vector<std::string> first_fail(s_max + 1);
        Timer timer;
        auto rec = [&](auto&& self, int start, int depth, long long sa,
                       long long sb, long long sab) -> void {
            int s = depth + 1;
            for (int i = start; i < np; ++i) {
                long long a2 = sa + pairs[i].first;
                long long b2 = sb + pairs[i].second;
                long long p2 = sab + static_cast<long long>(pairs[i].first) *
                                         pairs[i].second;
                ++cases[s];
                if (b2 >= a2 && p2 > a2 * (b2 - (s - 1))) {
                    ++fails[s];
                    if (first_fail[s].empty())
                        first_fail[s] = "a=" + std::to_string(a2) +
                                        " b=" + std::to_string(b2);
                }
                if (s < s_max) self(self, i, s, a2, b2, p2);
            }
        };
        rec(rec, 0, 0, 0, 0, 0);
        double total_ms = timer.ms();
        for (int s = 1; s <= s_max; ++s) {
            ReportRow row;
            row.id = "product-sum-s" + std::to_string(s);
            row.conclusion = fails[s] == 0 ? "PASS" : "FAIL";
            row.internal_failure = fails[s] != 0;
            append_detail(row, "cases=" + std::to_string(cases[s]));
            append_detail(row, "fails=" + std::to_string(fails[s]));
            if (!first_fail[s].empty())
                append_detail(row, "first=" + first_fail[s]);
            row.wall_ms = s == s_max ? total_ms : 0.0;
            push_row(rep, std::move(row));
        }
    }
    return rep;
}

Report run_campaign(const CampaignConfig& config) {
    config.validate();
    switch (config.campaign) {
        case CampaignKind::thm_main1:
        case CampaignKind::thm_main2:
            return run_thm_campaign(config);
        case CampaignKind::lemma_bounds:
            return run_lemma_bounds(config);
        case CampaignKind::fang_yang:
            return run_fang_yang(config);
        case CampaignKind::tree_packing_equiv:
            return run_tree_packing_equiv(config);
        case CampaignKind::comb_lemmas: {
            Report rep = check_comb_lemmas(config.a_max, config.s_max,
                                           config.value_max);
            rep.config = config;
            return rep;
        }
    }
    throw InvalidParameterError("unknown campaign kind");
}

std::string Report::to_csv() const {
    std::string out =
        "id,graph_hash,hypotheses,rho_lo,rho_hi,threshold_lo,threshold_hi,"
        "comparison,conclusion,detail\n";
    for (const ReportRow& r : rows) {
        out += r.id + ',' + r.graph_hash + ',' + r.hypotheses + ',' +
               r.rho_lo + ',' + r.rho_hi + ',' + r.threshold_lo + ',' +
               r.threshold_hi + ',' + r.comparison + ',' + r.conclusion +
               ',' + r.detail + '\n';
    }
    return out;
}

nlohmann::json Report::to_json() const {
    nlohmann::json rows_json = nlohmann::json::array();
    for (const ReportRow& r : rows) {
        nlohmann::json jr = {
            {"id", r.id},
            {"graph_hash", r.graph_hash},
            {"hypotheses", r.hypotheses},
            {"rho_lo", r.rho_lo},
            {"rho_hi", r.rho_hi},
            {"threshold_lo", r.threshold_lo},
            {"threshold_hi", r.threshold_hi},
            {"comparison", r.comparison},
            {"conclusion", r.conclusion},
            {"detail", r.detail},
            {"wall_ms", r.wall_ms},
            {"counterexample", r.counterexample},
            {"internal_failure", r.internal_failure},
        };
        if (!r.certificate.empty())
            jr["certificate"] = nlohmann::json::parse(r.certificate);
        rows_json.push_back(std::move(jr));
    }
    return {{"config", config.to_json()},
            {"summary",
             {{"rows", rows.size()},
              {"hypothesis_passes", hypothesis_passes},
              {"verified", verified},
              {"counterexamples", counterexamples},
              {"internal_failures", internal_failures},
              {"errors", errors}}},
            {"rows", std::move(rows_json)}};
}

std::string Report::summary() const {
    return to_string(config.campaign) + ": rows=" +
           std::to_string(rows.size()) +
           " hypothesis_passes=" + std::to_string(hypothesis_passes) +
           " verified=" + std::to_string(verified) +
           " counterexamples=" + std::to_string(counterexamples) +
           " internal_failures=" + std::to_string(internal_failures) +
           " errors=" + std::to_string(errors);
}

void write_report(const Report& report) {
    const CampaignConfig& cfg = report.config;
    if (cfg.format == CampaignConfig::Format::csv) {
        std::string text = report.to_csv();
        if (cfg.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(cfg.out, std::ios::binary);
            if (!f) throw InvalidParameterError("cannot write '" + cfg.out + "'");
            f << text;
        }
    } else {
        nlohmann::json j = report.to_json();
        if (!cfg.out.empty()) {
            // Externalize oversized certificates next to the output file.
            std::filesystem::path side(cfg.out + ".certs");
            auto& rows_json = j["rows"];
            for (std::size_t i = 0; i < report.rows.size(); ++i) {
                const std::string& cert = report.rows[i].certificate;
                if (cert.size() <= kInlineCertificateLimit) continue;
                std::filesystem::create_directories(side);
                std::filesystem::path ref =
                    side / (report.rows[i].id + ".json");
                std::ofstream cf(ref, std::ios::binary);
                cf << cert;
                rows_json[i].erase("certificate");
                rows_json[i]["certificate_ref"] = ref.string();
            }
            std::ofstream f(cfg.out, std::ios::binary);
            if (!f) throw InvalidParameterError("cannot write '" + cfg.out + "'");
            f << j.dump(2) << '\n';
        } else {
            std::cout << j.dump(2) << '\n';
        }
    }
    std::cerr << report.summary() << '\n';
}

}  // namespace graphcert
