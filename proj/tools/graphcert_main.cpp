#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphcert/campaign.hpp"
#include "graphcert/codec.hpp"
#include "graphcert/distance.hpp"
#include "graphcert/errors.hpp"
#include "graphcert/extremal.hpp"
#include "graphcert/packing.hpp"

namespace {

using namespace graphcert;

nlohmann::json estimate_json(const SpectralEstimate& est) {
    return {{"lo", est.lo},
            {"hi", est.hi},
            {"value", est.value},
            {"width", est.width()},
            {"iterations", est.iterations}};
}

int run_rho_d(const std::string& path, double tol) {
    Graph g = load_graph_file(path);
    SpectralEstimate est = distance_spectral_radius(apsp(g), tol);
    std::cout << estimate_json(est).dump(2) << '\n';
    return 0;
}

int run_nu_f(const std::string& path, int max_n) {
    Graph g = load_graph_file(path);
    NuFResult r = nu_f_exact(g, max_n);
    nlohmann::json j = {{"nu_f", rational_string(r.value)},
                        {"argmin", to_json(r.argmin)}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_tau(const std::string& path, int k) {
    Graph g = load_graph_file(path);
    PackingCertificate pc = tau_packing(g, k);
    bool has = pc.kind == PackingCertificate::Kind::trees_found;
    nlohmann::json j = {{"k", k},
                        {"tau_ge_k", has},
                        {"certificate", to_json(pc)}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_verify_p(const std::string& path, int k, int d) {
    Graph g = load_graph_file(path);
    PResult r = verify_P(g, k, d);
    nlohmann::json j = {{"k", k}, {"d", d}, {"tier", r.tier}};
    switch (r.verdict) {
        case PVerdict::verified:
            j["verdict"] = "Verified";
            j["certificate"] = to_json(*r.certificate);
            break;
        case PVerdict::refuted: j["verdict"] = "Refuted"; break;
        case PVerdict::unknown: j["verdict"] = "Unknown"; break;
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_extremal(const std::string& family, int k, int n,
                 const std::string& emit, double tol) {
    ExtremalSpec spec{family == "g1" ? ExtremalFamily::g1_join
                                     : ExtremalFamily::g2_bipartite,
                      k, n};
    spec.validate();
    if (emit == "graph") {
        std::cout << encode_graph(build_extremal(spec), GraphFormat::graph6)
                  << '\n';
        return 0;
    }
    SpectralEstimate est = exact_rho_extremal(spec, tol);
    if (emit == "rho") {
        std::cout << estimate_json(est).dump(2) << '\n';
        return 0;
    }
    nlohmann::json j = {
        {"graph6", encode_graph(build_extremal(spec), GraphFormat::graph6)},
        {"rho", estimate_json(est)}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_campaign_cmd(const std::string& config_path, const CLI::App* cmd,
                     std::uint64_t seed, long long samples,
                     const std::string& out, const std::string& format) {
    std::ifstream f(config_path);
    if (!f)
        throw InvalidParameterError("cannot read config '" + config_path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParameterError(std::string("bad config JSON: ") +
                                    e.what());
    }
    CampaignConfig cfg = CampaignConfig::from_json(j);
    if (cmd->count("--seed") > 0) cfg.seed = seed;
    if (cmd->count("--samples") > 0) cfg.samples = samples;
    if (cmd->count("--out") > 0) cfg.out = out;
    if (cmd->count("--format") > 0)
        cfg.format = format == "csv" ? CampaignConfig::Format::csv
                                     : CampaignConfig::Format::json;
    cfg.validate();
    Report rep = run_campaign(cfg);
    write_report(rep);
    return rep.exit_code();
}

bool is_usage_error(const std::exception& e) {
    return dynamic_cast<const InvalidParameterError*>(&e) != nullptr ||
           dynamic_cast<const InvalidPartitionError*>(&e) != nullptr ||
           dynamic_cast<const ParseError*>(&e) != nullptr ||
           dynamic_cast<const FormatOverflowError*>(&e) != nullptr ||
           dynamic_cast<const SizeGuardError*>(&e) != nullptr ||
           dynamic_cast<const ModeMismatchError*>(&e) != nullptr;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "certified distance-spectral bounds, fractional packing numbers, "
        "spanning-tree packings, and verification campaigns"};
    app.require_subcommand(1);

    std::string path, family, emit = "both", config_path, out, format = "csv";
    double tol = kDefaultTol;
    int max_n = kPartitionEnumMaxN, k = 1, d = 1, n = 0;
    std::uint64_t seed = 0;
    long long samples = 0;

    CLI::App* rho = app.add_subcommand(
        "rho-d", "certified enclosure of the distance spectral radius");
    rho->add_option("graphfile", path, "graph file (.el or .g6)")->required();
    rho->add_option("--tol", tol, "target enclosure width");

    CLI::App* nuf = app.add_subcommand(
        "nu-f", "exact fractional spanning-tree packing number");
    nuf->add_option("graphfile", path, "graph file (.el or .g6)")->required();
    nuf->add_option("--max-n", max_n, "enumeration size guard");

    CLI::App* tau = app.add_subcommand(
        "tau", "k edge-disjoint spanning trees or a violating partition");
    tau->add_option("graphfile", path, "graph file (.el or .g6)")->required();
    tau->add_option("--k", k, "number of trees requested")->required();

    CLI::App* vp = app.add_subcommand(
        "verify-p", "certify k disjoint trees plus a large-component forest");
    vp->add_option("graphfile", path, "graph file (.el or .g6)")->required();
    vp->add_option("--k", k, "number of spanning trees")->required();
    vp->add_option("--d", d, "component size demand")->required();

    CLI::App* ext = app.add_subcommand(
        "extremal", "build an extremal family member and/or its radius");
    ext->add_option("--family", family, "g1 or g2")
        ->required()
        ->check(CLI::IsMember({"g1", "g2"}));
    ext->add_option("--k", k, "family parameter k")->required();
    ext->add_option("--n", n, "graph order")->required();
    ext->add_option("--emit", emit, "graph, rho, or both")
        ->check(CLI::IsMember({"graph", "rho", "both"}));
    ext->add_option("--tol", tol, "target enclosure width");

    CLI::App* camp =
        app.add_subcommand("campaign", "run a verification campaign");
    camp->add_option("--config", config_path, "campaign config JSON file")
        ->required();
    camp->add_option("--seed", seed, "override root seed");
    camp->add_option("--samples", samples, "override sample count");
    camp->add_option("--out", out, "override output path");
    camp->add_option("--format", format, "override output format")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rho->parsed()) return run_rho_d(path, tol);
        if (nuf->parsed()) return run_nu_f(path, max_n);
        if (tau->parsed()) return run_tau(path, k);
        if (vp->parsed()) return run_verify_p(path, k, d);
        if (ext->parsed()) return run_extremal(family, k, n, emit, tol);
        if (camp->parsed())
            return run_campaign_cmd(config_path, camp, seed, samples, out,
                                    format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_usage_error(e) ? 2 : 3;
    }
    return 2;
}
