#include "gptcones/cli.hpp"

#include "gptcones/bb84.hpp"
#include "gptcones/certify.hpp"
#include "gptcones/compatibility.hpp"
#include "gptcones/double_description.hpp"
#include "gptcones/errors.hpp"
#include "gptcones/sandwich.hpp"
#include "gptcones/tensor.hpp"

#include <CLI11.hpp>

#include <filesystem>

namespace gptcones {

namespace {

Json clauses_to_json(const CheckReport& report) {
    Json arr = Json::array();
    for (const auto& c : report.clauses) {
        Json j;
        j["clause"] = c.name;
        j["ok"] = c.ok;
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

void emit(const Json& payload, const std::string& output_path) {
    if (!output_path.empty()) write_json_file(output_path, payload);
}

struct Options {
    std::string output;
    std::uint64_t seed = 1;
    int budget = 1000;
    int dim_cap = 16;
};

CommandResult classify_cmd(const std::string& cone_file) {
    const ConeRep cone = cone_from_json(load_json_file(cone_file));
    Json report;
    report["command"] = "classify";
    report["dim"] = cone_dim(cone);
    report["kind"] = std::holds_alternative<PolyV>(cone)   ? "poly_v"
                     : std::holds_alternative<PolyH>(cone) ? "poly_h"
                                                           : "lorentz";
    const bool proper = is_proper(cone);
    report["proper"] = proper;
    if (proper) {
        report["classical"] = is_classical(cone);
        if (is_polyhedral(cone))
            report["extreme_ray_count"] = enumerate_extreme_rays(cone).size();
    }
    report["status"] = "ok";
    return CommandResult{kExitOk, std::move(report)};
}

CommandResult dual_cmd(const std::string& cone_file, const Options& opt) {
    const ConeRep cone = cone_from_json(load_json_file(cone_file));
    Json report;
    report["command"] = "dual";
    report["dual"] = cone_to_json(dual(cone));
    report["status"] = "ok";
    emit(report["dual"], opt.output);
    return CommandResult{kExitOk, std::move(report)};
}

CommandResult tensor_cmd(const std::string& file_a, const std::string& file_b,
                         const std::string& mode, const Options& opt) {
    const GptSystem a = system_from_json(load_json_file(file_a));
    const GptSystem b = system_from_json(load_json_file(file_b));
    Json report;
    report["command"] = "tensor";
    report["mode"] = mode;
    try {
        if (mode == "min") {
            const PolyV mt = min_tensor(a, b);
            report["generator_count"] = mt.generators.size();
            report["cone"] = cone_to_json(ConeRep{mt});
            report["status"] = "ok";
            emit(report["cone"], opt.output);
            return CommandResult{kExitOk, std::move(report)};
        }
        if (mode == "max") {
            const PolyV mx = max_tensor_vrep(a, b, opt.dim_cap);
            report["extreme_ray_count"] = mx.generators.size();
            report["cone"] = cone_to_json(ConeRep{mx});
            report["status"] = "ok";
            emit(report["cone"], opt.output);
            return CommandResult{kExitOk, std::move(report)};
        }
        if (mode == "equal") {
            const bool equal = tensor_equal(a, b, opt.dim_cap);
            report["equal"] = equal;
            report["status"] = equal ? "ok" : "refuted";
            emit(report, opt.output);
            return CommandResult{equal ? kExitOk : kExitRefuted, std::move(report)};
        }
    } catch (const budget_error& e) {
        report["status"] = "inconclusive";
        report["reason"] = e.what();
        return CommandResult{kExitInconclusive, std::move(report)};
    }
    throw std::invalid_argument("tensor: unknown mode '" + mode + "'");
}

CommandResult witness_verify_cmd(const std::string& system_file, const std::string& witness_file) {
    const GptSystem sys = system_from_json(load_json_file(system_file));
    const IncompatibilityWitness w = witness_from_json(load_json_file(witness_file));
    const CheckReport r = verify_witness(w, sys);
    Json report;
    report["command"] = "witness verify";
    report["clauses"] = clauses_to_json(r);
    report["status"] = r.ok() ? "ok" : "refuted";
    return CommandResult{r.ok() ? kExitOk : kExitRefuted, std::move(report)};
}

CommandResult witness_derive_cmd(const std::string& system_file, const std::string& sandwich_file,
                                 const Options& opt) {
    const GptSystem sys = system_from_json(load_json_file(system_file));
    const KiteSandwich s = sandwich_from_json(load_json_file(sandwich_file));
    const CheckReport r = verify_sandwich(s, sys.cone);
    Json report;
    report["command"] = "witness derive";
    report["sandwich_clauses"] = clauses_to_json(r);
    if (!r.ok()) {
        report["status"] = "refuted";
        return CommandResult{kExitRefuted, std::move(report)};
    }
    const IncompatibilityWitness w = witness_from_sandwich(s);
    report["witness"] = witness_to_json(w);
    report["status"] = "ok";
    emit(report["witness"], opt.output);
    return CommandResult{kExitOk, std::move(report)};
}

CommandResult witness_search_cmd(const std::string& system_file, const Options& opt) {
    const GptSystem sys = system_from_json(load_json_file(system_file));
    const SandwichSearchResult r = search_sandwich(sys.cone, opt.budget, opt.seed);
    Json report;
    report["command"] = "witness search";
    report["attempts"] = r.attempts;
    switch (r.status) {
        case SearchStatus::found: {
            report["status"] = "ok";
            report["sandwich"] = sandwich_to_json(*r.sandwich);
            emit(report["sandwich"], opt.output);
            return CommandResult{kExitOk, std::move(report)};
        }
        case SearchStatus::classical:
            report["status"] = "classical";
            return CommandResult{kExitRefuted, std::move(report)};
        case SearchStatus::exhausted:
            report["status"] = "inconclusive";
            return CommandResult{kExitInconclusive, std::move(report)};
    }
    throw internal_invariant_error("witness search: unreachable");
}

CommandResult certify_cmd(const std::string& system_a, const std::string& witness_a,
                          const std::string& system_b, const std::string& witness_b,
                          const Options& opt) {
    const GptSystem a = system_from_json(load_json_file(system_a));
    const GptSystem b = system_from_json(load_json_file(system_b));
    const IncompatibilityWitness wa = witness_from_json(load_json_file(witness_a));
    const IncompatibilityWitness wb = witness_from_json(load_json_file(witness_b));
    const EntanglementCertificate cert = certify(a, wa, b, wb);

    Json report;
    report["command"] = "certify";
    report["swapped_a"] = cert.swapped_a;
    add_rat_field(report, "magical_value", cert.magical_value);
    add_rat_field(report, "unit_pairing", cert.unit_pairing);
    report["omega"] = tensor_to_json(cert.omega);
    report["phi"] = tensor_to_json(cert.phi);
    report["min_exclusion"] =
        cert.min_exclusion_kind == MinExclusionKind::lp_certificate ? "lp-certificate" : "by-phi";
    if (cert.min_certificate && !cert.min_certificate->inside) {
        Json sep;
        sep["separating_functional"] = tensor_to_json(cert.min_certificate->separating);
        add_rat_field(sep, "separation_value", cert.min_certificate->separation_value);
        report["min_certificate"] = std::move(sep);
    }
    report["max_inclusion"] =
        cert.max_inclusion_kind == MaxInclusionKind::dual_ray_scan ? "dual-ray-scan" : "by-witness";
    if (cert.dual_ray_pairs_checked > 0)
        report["dual_ray_pairs_checked"] = cert.dual_ray_pairs_checked;
    if (cert.product_generators_checked > 0)
        report["product_generators_checked"] = cert.product_generators_checked;
    report["clauses"] = clauses_to_json(cert.clauses);
    report["status"] = "ok";
    emit(report, opt.output);
    return CommandResult{kExitOk, std::move(report)};
}

CommandResult bb84_cmd(const std::string& config_file, const Options& opt) {
    const Json config = load_json_file(config_file);
    const GptSystem sys = system_from_json(load_json_file(config.at("system").get<std::string>()));
    const IncompatibilityWitness w =
        witness_from_json(load_json_file(config.at("witness").get<std::string>()));
    const std::int64_t rounds = config.at("rounds").get<std::int64_t>();
    const std::uint64_t seed = config.contains("seed") ? config.at("seed").get<std::uint64_t>()
                                                       : opt.seed;
    // Fraction of bits nominally sacrificed to test for interference. No
    // interference model exists here, so the value is echoed and otherwise
    // inert; it defaults to zero.
    const double test_fraction =
        config.contains("test_fraction") ? config.at("test_fraction").get<double>() : 0.0;

    const CheckReport wr = verify_witness(w, sys);
    if (!wr.ok())
        throw witness_error("bb84: witness verification failed at clause '" +
                            wr.first_failure()->name + "'");
    const PreparedEnsembles e = normalize_witness(w, sys);
    const ProtocolTranscript t = simulate(e, rounds, seed);
    const KeyStats stats = validate_stats(t, e);
    const EveProbabilities p = eve_probabilities(e);

    Json report;
    report["command"] = "bb84";
    report["rounds"] = rounds;
    report["seed"] = seed;
    report["test_fraction"] = test_fraction;
    add_rat_field(report, "eta", e.eta);
    add_rat_field(report, "p0", e.p0);
    add_rat_field(report, "qp", e.qp);
    add_rat_field(report, "p0_prime", p.p0_prime);
    add_rat_field(report, "p1_prime", p.p1_prime);
    add_rat_field(report, "qp_prime", p.qp_prime);
    add_rat_field(report, "qm_prime", p.qm_prime);
    report["kept_count"] = static_cast<std::int64_t>(t.sifted_alice.size());
    report["retained_fraction"] = float12(stats.retained_fraction);
    report["error_count"] = stats.error_count;
    report["empirical_H"] = float12(stats.empirical_H);
    report["key_rate"] = float12(stats.formula_rate);
    report["insufficient_data"] = stats.insufficient_data;
    report["status"] = "ok";
    emit(report, opt.output);
    return CommandResult{kExitOk, std::move(report)};
}

CommandResult catalog_export_cmd(const std::string& name, const std::string& output_dir) {
    const CatalogEntry entry = catalog(name);
    std::filesystem::create_directories(output_dir.empty() ? "." : output_dir);
    const std::filesystem::path dir = output_dir.empty() ? "." : output_dir;
    Json report;
    report["command"] = "catalog export";
    report["name"] = name;
    Json files = Json::array();

    const auto system_path = (dir / (name + ".system.json")).string();
    write_json_file(system_path, system_to_json(entry.system));
    files.push_back(system_path);
    if (entry.witness) {
        const auto witness_path = (dir / (name + ".witness.json")).string();
        write_json_file(witness_path, witness_to_json(*entry.witness));
        files.push_back(witness_path);
    }
    if (entry.sandwich) {
        const auto sandwich_path = (dir / (name + ".sandwich.json")).string();
        write_json_file(sandwich_path, sandwich_to_json(*entry.sandwich));
        files.push_back(sandwich_path);
    }
    report["classical"] = entry.classical;
    report["files"] = std::move(files);
    report["status"] = "ok";
    return CommandResult{kExitOk, std::move(report)};
}

}  // namespace

CommandResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Exact cone geometry, entangleability certificates and BB84 simulation for GPTs"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
    app.add_option("--budget", opt.budget, "search iteration budget")->capture_default_str();
    app.add_option("--dim-cap", opt.dim_cap, "product dimension cap")->capture_default_str();
    app.add_option("--output", opt.output, "write the principal artifact to this path");

    std::string cone_file, cone_file_b, mode = "equal", system_file, witness_file, sandwich_file;
    std::string system_a, system_b, witness_a, witness_b, config_file, name, output_dir;

    auto* classify = app.add_subcommand("classify", "properness/classicality of a cone file");
    classify->add_option("cone", cone_file, "cone file")->required();

    auto* dual_sc = app.add_subcommand("dual", "dual cone of a cone file");
    dual_sc->add_option("cone", cone_file, "cone file")->required();

    auto* tensor_sc = app.add_subcommand("tensor", "minimal/maximal tensor products");
    tensor_sc->add_option("coneA", cone_file, "first cone file")->required();
    tensor_sc->add_option("coneB", cone_file_b, "second cone file")->required();
    tensor_sc->add_option("--mode", mode, "min | max | equal")->capture_default_str();

    auto* witness_sc = app.add_subcommand("witness", "verify / derive / search witnesses");
    auto* wverify = witness_sc->add_subcommand("verify", "check the three witness conditions");
    wverify->add_option("--system", system_file)->required();
    wverify->add_option("--witness", witness_file)->required();
    auto* wderive = witness_sc->add_subcommand("derive", "derive a witness from a sandwich");
    wderive->add_option("--system", system_file)->required();
    wderive->add_option("--sandwich", sandwich_file)->required();
    auto* wsearch = witness_sc->add_subcommand("search", "heuristic sandwich search");
    wsearch->add_option("--system", system_file)->required();
    witness_sc->require_subcommand(1);

    auto* certify_sc = app.add_subcommand("certify", "entangleability certificate for a pair");
    certify_sc->add_option("--system-a", system_a)->required();
    certify_sc->add_option("--witness-a", witness_a)->required();
    certify_sc->add_option("--system-b", system_b)->required();
    certify_sc->add_option("--witness-b", witness_b)->required();

    auto* bb84_sc = app.add_subcommand("bb84", "simulate the key distribution protocol");
    bb84_sc->add_option("config", config_file, "protocol config file")->required();

    auto* catalog_sc = app.add_subcommand("catalog", "example systems");
    auto* cexport = catalog_sc->add_subcommand("export", "write a catalog entry to disk");
    cexport->add_option("name", name, "catalog entry name")->required();
    cexport->add_option("--output-dir", output_dir, "target directory");
    catalog_sc->require_subcommand(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        Json report;
        report["status"] = e.get_exit_code() == 0 ? "ok" : "error";
        report["message"] = e.what();
        return CommandResult{e.get_exit_code() == 0 ? kExitOk : kExitError, std::move(report)};
    }

    try {
        if (*classify) return classify_cmd(cone_file);
        if (*dual_sc) return dual_cmd(cone_file, opt);
        if (*tensor_sc) return tensor_cmd(cone_file, cone_file_b, mode, opt);
        if (*wverify) return witness_verify_cmd(system_file, witness_file);
        if (*wderive) return witness_derive_cmd(system_file, sandwich_file, opt);
        if (*wsearch) return witness_search_cmd(system_file, opt);
        if (*certify_sc) return certify_cmd(system_a, witness_a, system_b, witness_b, opt);
        if (*bb84_sc) return bb84_cmd(config_file, opt);
        if (*cexport) return catalog_export_cmd(name, output_dir);
        throw std::invalid_argument("no subcommand selected");
    } catch (const budget_error& e) {
        Json report;
        report["status"] = "inconclusive";
        report["message"] = e.what();
        return CommandResult{kExitInconclusive, std::move(report)};
    } catch (const std::exception& e) {
        Json report;
        report["status"] = "error";
        report["message"] = e.what();
        return CommandResult{kExitError, std::move(report)};
    }
}

}  // namespace gptcones
