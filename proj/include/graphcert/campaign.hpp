#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "graphcert/distance.hpp"
#include "graphcert/extremal.hpp"
#include "graphcert/packing.hpp"

namespace graphcert {

enum class CampaignKind {
    thm_main1,          // spectral condition => packing property, general
    thm_main2,          // same, balanced bipartite
    lemma_bounds,       // extremal-family ceiling sweep
    fang_yang,          // nu_f threshold => packing property, exhaustive
    tree_packing_equiv, // tau vs nu_f cross-check, exhaustive
    comb_lemmas,        // integer inequality sweeps
};

std::string to_string(CampaignKind kind);
CampaignKind campaign_kind_from_string(const std::string& name);

struct CampaignConfig {
    CampaignKind campaign = CampaignKind::thm_main1;
    int k_lo = 2, k_hi = 2;
    int n_lo = 12, n_hi = 12;
    int n_step = 1;
    int d_lo = 1, d_hi = 3;  // fang_yang only
    long long samples = 500;
    std::uint64_t seed = 0;
    double tol = kDefaultTol;
    int max_enum_n = kPartitionEnumMaxN;
    double p = 0.0;  // <= 0 selects 1 - 2/n
    ExtremalFamily family = ExtremalFamily::g1_join;  // lemma_bounds only
    int a_max = 200, s_max = 5, value_max = 12;       // comb_lemmas only
    std::uint64_t stride = 1;
    std::string out;  // empty: stdout
    enum class Format { csv, json } format = Format::csv;

    static CampaignConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
    void validate() const;
};

struct ReportRow {
    std::string id;
    std::string graph_hash = "-";
    std::string hypotheses = "-";  // "name=PASS;name=FAIL;..."
    std::string rho_lo = "-", rho_hi = "-";
    std::string threshold_lo = "-", threshold_hi = "-";
    std::string comparison = "-";  // leq / gt / indeterminate
    std::string conclusion = "-";
    std::string detail = "-";
    std::string certificate;  // serialized JSON, may be empty
    double wall_ms = 0.0;     // JSON output only; CSV must stay byte-stable
    bool counterexample = false;
    bool internal_failure = false;
};

struct Report {
    CampaignConfig config;
    std::vector<ReportRow> rows;
    long long hypothesis_passes = 0;
    long long verified = 0;
    long long counterexamples = 0;
    long long internal_failures = 0;
    long long errors = 0;

    std::string to_csv() const;
    nlohmann::json to_json() const;
    std::string summary() const;
    int exit_code() const {
        return counterexamples > 0 || internal_failures > 0 ? 1 : 0;
    }
};

inline constexpr std::size_t kInlineCertificateLimit = 64 * 1024;

Report run_campaign(const CampaignConfig& config);
Report check_comb_lemmas(int a_max, int s_max, int value_max);

// Emits per config.out/format; with a JSON target, certificates above
// kInlineCertificateLimit land in "<out>.certs/<row id>.json" and the row
// keeps a reference.  Empty out writes to stdout (certificates inline).
void write_report(const Report& report);

// Shortest representation that round-trips; used for every floating-point
// value reaching a report.
std::string format_double(double x);

}  // namespace graphcert
