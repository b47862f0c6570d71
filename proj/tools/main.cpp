// Command-line frontend. Talks to the library exclusively through the C API
// in qaoaxfer/qaoaxfer.h; every structured output embeds the resolved
// configuration and the tool version so runs can be reproduced byte for byte.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qaoaxfer/qaoaxfer.h"

using nlohmann::json;

namespace {

constexpr int kExitParam = 2;
constexpr int kExitCapacity = 3;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) {
    throw CliError{code, message};
}

void check(qx_status status, const char* what) {
    if (status == QX_OK) return;
    int code = status == QX_ERR_CAPACITY ? kExitCapacity : kExitParam;
    fail(code, std::string(what) + ": " + qx_last_error());
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    qx_string_free(s);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(kExitParam, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(kExitParam, "cannot write file: " + path);
    out << content;
}

// JSON payloads get "version" and "config" keys; CSV payloads get leading
// '#' comment lines.
std::string wrap_json(const std::string& payload, const json& config) {
    json j = json::parse(payload);
    j["version"] = qx_version();
    j["config"] = config;
    return j.dump(2) + "\n";
}

std::string wrap_csv(const std::string& payload, const json& config) {
    std::ostringstream out;
    out << "# version=" << qx_version() << "\n";
    for (const auto& [key, value] : config.items())
        out << "# " << key << "=" << (value.is_string() ? value.get<std::string>()
                                                        : value.dump())
            << "\n";
    out << payload;
    return out.str();
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty())
        std::cout << content;
    else
        write_file(path, content);
}

using GraphPtr = std::unique_ptr<qx_graph, decltype(&qx_graph_free)>;
using MapPtr = std::unique_ptr<qx_transfer_map, decltype(&qx_map_free)>;

GraphPtr load_graph(const std::string& path) {
    qx_graph* g = nullptr;
    check(qx_graph_parse(read_file(path).c_str(), &g), path.c_str());
    return GraphPtr(g, &qx_graph_free);
}

struct OptimizerFlags {
    qx_optimizer_config cfg{};

    void attach(CLI::App* cmd) {
        qx_optimizer_config_init(&cfg);
        cmd->add_option("--steps", cfg.steps, "RMSProp steps per restart")
            ->capture_default_str();
        cmd->add_option("--restarts", cfg.restarts, "multistart restarts")
            ->capture_default_str();
        cmd->add_option("--lr", cfg.learning_rate, "learning rate")
            ->capture_default_str();
        cmd->add_option("--decay", cfg.rms_decay, "squared-gradient decay")
            ->capture_default_str();
        cmd->add_option("--eps", cfg.rms_epsilon, "RMSProp epsilon")
            ->capture_default_str();
        cmd->add_option("--grad-step", cfg.grad_step,
                        "finite-difference half-width")
            ->capture_default_str();
        cmd->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
        cmd->add_option("--jobs", cfg.jobs, "worker cap (0 = hardware)")
            ->capture_default_str();
    }

    json to_json() const {
        return json{{"steps", cfg.steps},
                    {"restarts", cfg.restarts},
                    {"learning_rate", cfg.learning_rate},
                    {"rms_decay", cfg.rms_decay},
                    {"rms_epsilon", cfg.rms_epsilon},
                    {"grad_step", cfg.grad_step},
                    {"seed", cfg.seed},
                    {"jobs", cfg.jobs}};
    }
};

qx_backend parse_backend(const std::string& name) {
    if (name == "fast") return QX_BACKEND_FAST;
    if (name == "sv") return QX_BACKEND_STATEVECTOR;
    if (name == "tn") return QX_BACKEND_TENSORNET;
    fail(kExitParam, "unknown backend: " + name);
}

int run(int argc, char** argv) {
    CLI::App app{"QAOA MaxCut energies, lightcone classes, and optimal-parameter "
                 "transferability maps"};
    app.require_subcommand(1);
    app.set_version_flag("--version", qx_version());

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random graph");
    gen->set_config("--config");
    bool gen_regular = false, gen_bounded = false;
    int gen_n = 0, gen_d = 3, gen_m = 0, gen_dmax = 6;
    std::vector<int> gen_degrees;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_flag("--regular", gen_regular, "d-regular graph");
    gen->add_flag("--bounded", gen_bounded, "m edges with max degree d_max");
    gen->add_option("--degrees", gen_degrees,
                    "explicit degree sequence (comma-separated)")
        ->delimiter(',');
    gen->add_option("-n,--nodes", gen_n, "node count");
    gen->add_option("-d,--degree", gen_d, "degree for --regular");
    gen->add_option("-m,--edges", gen_m, "edge count for --bounded");
    gen->add_option("--dmax", gen_dmax, "degree cap for --bounded");
    gen->add_option("--seed", gen_seed, "random seed")->capture_default_str();
    gen->add_option("-o,--output", gen_out, "output edge-list file");

    // subgraphs
    auto* subgraphs = app.add_subcommand("subgraphs",
                                         "p=1 lightcone class histogram");
    subgraphs->set_config("--config");
    std::string sub_in, sub_out;
    subgraphs->add_option("graph", sub_in, "edge-list file")->required();
    subgraphs->add_option("-o,--output", sub_out, "output JSON file");

    // landscape
    auto* landscape = app.add_subcommand(
        "landscape", "contribution grid of one lightcone class");
    landscape->set_config("--config");
    std::string land_class, land_out;
    int land_gsteps = 101, land_bsteps = 101;
    double land_glo = 0.0, land_ghi = 6.283185307179586;
    double land_blo = 0.0, land_bhi = 3.141592653589793;
    landscape->add_option("--class", land_class, "class token, e.g. 3-3-0")
        ->required();
    landscape->add_option("--gamma-steps", land_gsteps, "gamma grid size")
        ->capture_default_str();
    landscape->add_option("--beta-steps", land_bsteps, "beta grid size")
        ->capture_default_str();
    landscape->add_option("--gamma-lo", land_glo, "gamma range start")
        ->capture_default_str();
    landscape->add_option("--gamma-hi", land_ghi, "gamma range end (excluded)")
        ->capture_default_str();
    landscape->add_option("--beta-lo", land_blo, "beta range start")
        ->capture_default_str();
    landscape->add_option("--beta-hi", land_bhi, "beta range end (excluded)")
        ->capture_default_str();
    landscape->add_option("-o,--output", land_out, "output CSV file");

    // optimize
    auto* optimize = app.add_subcommand(
        "optimize", "multistart RMSProp over (gamma, beta)");
    optimize->set_config("--config");
    std::string opt_class, opt_graph, opt_backend = "fast", opt_out;
    OptimizerFlags opt_flags;
    optimize->add_option("--class", opt_class, "lightcone class objective");
    optimize->add_option("--graph", opt_graph, "whole-graph energy objective");
    optimize->add_option("--backend", opt_backend, "fast | sv | tn")
        ->capture_default_str();
    opt_flags.attach(optimize);
    optimize->add_option("-o,--output", opt_out, "output JSON file");

    // maxcut
    auto* maxcut = app.add_subcommand("maxcut", "exact MaxCut value");
    maxcut->set_config("--config");
    std::string mc_in, mc_method = "bnb", mc_out;
    double mc_budget = 600.0;
    maxcut->add_option("graph", mc_in, "edge-list file")->required();
    maxcut->add_option("--method", mc_method, "bnb | brute")->capture_default_str();
    maxcut->add_option("--budget", mc_budget, "time budget in seconds for bnb")
        ->capture_default_str();
    maxcut->add_option("-o,--output", mc_out, "output JSON file");

    // widths
    auto* widths = app.add_subcommand(
        "widths", "per-edge contraction widths of lightcone networks");
    widths->set_config("--config");
    std::string w_in, w_out;
    int w_p = 1, w_jobs = 0;
    std::uint64_t w_seed = 0;
    widths->add_option("graph", w_in, "edge-list file")->required();
    widths->add_option("-p,--depth", w_p, "circuit depth")->capture_default_str();
    widths->add_option("--seed", w_seed, "ordering seed")->capture_default_str();
    widths->add_option("--jobs", w_jobs, "worker cap (0 = hardware)")
        ->capture_default_str();
    widths->add_option("-o,--output", w_out, "output CSV file");

    // map
    auto* map_cmd = app.add_subcommand(
        "map", "transferability map over lightcone classes");
    map_cmd->set_config("--config");
    bool map_regular = false, map_general = false;
    int map_dmax = 8;
    std::string map_out, map_csv;
    OptimizerFlags map_flags;
    map_cmd->add_flag("--regular", map_regular, "regular classes (d, d, t)");
    map_cmd->add_flag("--general", map_general, "general classes (d1, d2, t)");
    map_cmd->add_option("--dmax", map_dmax, "degree bound")->capture_default_str();
    map_flags.attach(map_cmd);
    map_cmd->add_option("-o,--output", map_out, "output JSON file");
    map_cmd->add_option("--csv", map_csv, "also write the matrix as CSV");

    // transfer
    auto* transfer = app.add_subcommand(
        "transfer", "donor-to-acceptor parameter transfer experiment");
    transfer->set_config("--config");
    std::string tr_donor, tr_acceptor, tr_map, tr_out;
    double tr_budget = 600.0, tr_threshold = 0.9;
    OptimizerFlags tr_flags;
    transfer->add_option("donor", tr_donor, "donor edge-list file")->required();
    transfer->add_option("acceptor", tr_acceptor, "acceptor edge-list file")
        ->required();
    transfer->add_option("--map", tr_map,
                         "map JSON; adds a sufficiency check to the report");
    transfer->add_option("--threshold", tr_threshold, "sufficiency threshold")
        ->capture_default_str();
    transfer->add_option("--budget", tr_budget, "MaxCut budget in seconds")
        ->capture_default_str();
    tr_flags.attach(transfer);
    transfer->add_option("-o,--output", tr_out, "output JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParam;
    }

    if (gen->parsed()) {
        int modes = (gen_regular ? 1 : 0) + (gen_bounded ? 1 : 0) +
                    (gen_degrees.empty() ? 0 : 1);
        if (modes != 1)
            fail(kExitParam,
                 "choose exactly one of --regular, --bounded, --degrees");
        qx_graph* g = nullptr;
        json config{{"command", "gen"}, {"seed", gen_seed}};
        if (gen_regular) {
            check(qx_graph_random_regular(gen_n, gen_d, gen_seed, &g), "gen");
            config["mode"] = "regular";
            config["n"] = gen_n;
            config["d"] = gen_d;
        } else if (gen_bounded) {
            check(qx_graph_random_bounded(gen_n, gen_m, gen_dmax, gen_seed, &g),
                  "gen");
            config["mode"] = "bounded";
            config["n"] = gen_n;
            config["m"] = gen_m;
            config["dmax"] = gen_dmax;
        } else {
            check(qx_graph_random_degrees(gen_degrees.data(),
                                          static_cast<int32_t>(gen_degrees.size()),
                                          gen_seed, &g),
                  "gen");
            config["mode"] = "degrees";
            config["degrees"] = gen_degrees;
        }
        GraphPtr graph(g, &qx_graph_free);
        char* text = nullptr;
        check(qx_graph_format(graph.get(), &text), "gen");
        emit(gen_out, take_string(text));
        if (!gen_out.empty()) {
            // The edge-list format stays pristine; echo the run config here.
            config["version"] = qx_version();
            config["output"] = gen_out;
            std::cout << config.dump(2) << "\n";
        }
        return 0;
    }

    if (subgraphs->parsed()) {
        GraphPtr g = load_graph(sub_in);
        char* payload = nullptr;
        check(qx_histogram_json(g.get(), &payload), "subgraphs");
        json config{{"command", "subgraphs"}, {"graph", sub_in}};
        emit(sub_out, wrap_json(take_string(payload), config));
        return 0;
    }

    if (landscape->parsed()) {
        char* payload = nullptr;
        check(qx_landscape_csv(land_class.c_str(), land_glo, land_ghi, land_gsteps,
                               land_blo, land_bhi, land_bsteps, &payload),
              "landscape");
        json config{{"command", "landscape"}, {"class", land_class},
                    {"gamma_lo", land_glo},  {"gamma_hi", land_ghi},
                    {"gamma_steps", land_gsteps}, {"beta_lo", land_blo},
                    {"beta_hi", land_bhi},   {"beta_steps", land_bsteps}};
        emit(land_out, wrap_csv(take_string(payload), config));
        return 0;
    }

    if (optimize->parsed()) {
        if (opt_class.empty() == opt_graph.empty())
            fail(kExitParam, "choose exactly one of --class, --graph");
        char* payload = nullptr;
        json config = opt_flags.to_json();
        config["command"] = "optimize";
        if (!opt_class.empty()) {
            check(qx_optimize_class_json(opt_class.c_str(), &opt_flags.cfg, &payload),
                  "optimize");
            config["class"] = opt_class;
        } else {
            GraphPtr g = load_graph(opt_graph);
            check(qx_optimize_graph_json(g.get(), &opt_flags.cfg,
                                         parse_backend(opt_backend), &payload),
                  "optimize");
            config["graph"] = opt_graph;
            config["backend"] = opt_backend;
        }
        emit(opt_out, wrap_json(take_string(payload), config));
        return 0;
    }

    if (maxcut->parsed()) {
        GraphPtr g = load_graph(mc_in);
        int32_t value = 0, optimal = 1, upper = 0;
        char* assignment = nullptr;
        if (mc_method == "brute") {
            check(qx_maxcut_brute_force(g.get(), &value, &assignment), "maxcut");
            upper = value;
        } else if (mc_method == "bnb") {
            check(qx_maxcut_branch_and_bound(g.get(), mc_budget, &value, &optimal,
                                             &upper, &assignment),
                  "maxcut");
        } else {
            fail(kExitParam, "unknown method: " + mc_method);
        }
        std::string bits = take_string(assignment);
        std::cout << value << " " << (optimal ? "optimal" : "lower-bound") << " "
                  << bits << "\n";
        if (!mc_out.empty()) {
            json config{{"command", "maxcut"},
                        {"graph", mc_in},
                        {"method", mc_method},
                        {"budget", mc_budget}};
            json j{{"value", value},
                   {"optimal", optimal != 0},
                   {"upper_bound", upper},
                   {"assignment", bits}};
            write_file(mc_out, wrap_json(j.dump(), config));
        }
        return 0;
    }

    if (widths->parsed()) {
        GraphPtr g = load_graph(w_in);
        char* payload = nullptr;
        int32_t w_max = 0;
        double mean = 0.0, stddev = 0.0;
        check(qx_width_profile_csv(g.get(), w_p, w_seed, w_jobs, &payload, &w_max,
                                   &mean, &stddev),
              "widths");
        json config{{"command", "widths"}, {"graph", w_in},   {"p", w_p},
                    {"seed", w_seed},      {"jobs", w_jobs}};
        std::string csv = wrap_csv(take_string(payload), config);
        std::ostream& summary = w_out.empty() ? std::cerr : std::cout;
        summary << "max=" << w_max << " mean=" << mean << " stddev=" << stddev
                << "\n";
        emit(w_out, csv);
        return 0;
    }

    if (map_cmd->parsed()) {
        if (map_regular == map_general)
            fail(kExitParam, "choose exactly one of --regular, --general");
        qx_transfer_map* m = nullptr;
        check(qx_map_build(map_dmax, map_regular ? 1 : 0, &map_flags.cfg, &m),
              "map");
        MapPtr map(m, &qx_map_free);
        char* payload = nullptr;
        check(qx_map_to_json(map.get(), &payload), "map");
        json config = map_flags.to_json();
        config["command"] = "map";
        config["classes"] = map_regular ? "regular" : "general";
        config["dmax"] = map_dmax;
        json j = json::parse(take_string(payload));
        if (map_regular) {
            char* parity = nullptr;
            check(qx_map_parity_json(map.get(), &parity), "map");
            j["parity_blocks"] = json::parse(take_string(parity));
        }
        emit(map_out, wrap_json(j.dump(), config));
        if (!map_csv.empty()) {
            char* csv = nullptr;
            check(qx_map_to_csv(map.get(), &csv), "map");
            write_file(map_csv, wrap_csv(take_string(csv), config));
        }
        return 0;
    }

    if (transfer->parsed()) {
        GraphPtr donor = load_graph(tr_donor);
        GraphPtr acceptor = load_graph(tr_acceptor);
        json config = tr_flags.to_json();
        config["command"] = "transfer";
        config["donor"] = tr_donor;
        config["acceptor"] = tr_acceptor;
        config["budget"] = tr_budget;
        json sufficiency;
        if (!tr_map.empty()) {
            qx_transfer_map* m = nullptr;
            check(qx_map_parse(read_file(tr_map).c_str(), &m), tr_map.c_str());
            MapPtr map(m, &qx_map_free);
            int32_t ok = 0;
            char* witness = nullptr;
            check(qx_check_sufficient(donor.get(), acceptor.get(), map.get(),
                                      tr_threshold, &ok, &witness),
                  "transfer");
            sufficiency["ok"] = ok != 0;
            sufficiency["threshold"] = tr_threshold;
            if (witness) sufficiency["witness"] = json::parse(take_string(witness));
            config["map"] = tr_map;
            config["threshold"] = tr_threshold;
        }
        char* payload = nullptr;
        check(qx_transfer_experiment_json(donor.get(), acceptor.get(), &tr_flags.cfg,
                                          tr_budget, tr_donor.c_str(),
                                          tr_acceptor.c_str(), &payload),
              "transfer");
        json j = json::parse(take_string(payload));
        if (!sufficiency.is_null()) j["sufficiency"] = sufficiency;
        emit(tr_out, wrap_json(j.dump(), config));
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& err) {
        std::cerr << "error: " << err.message << "\n";
        return err.code;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitParam;
    }
}
