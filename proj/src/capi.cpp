#include "qaoaxfer/qaoaxfer.h"

#include <cmath>
#include <cstring>
#include <string>

#include <json.hpp>

#include "serialize.hpp"
#include "version.hpp"

struct qx_graph {
    qx::Graph g;
};

struct qx_transfer_map {
    qx::TransferMap map;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

qx_status map_kind(qx::ErrorKind kind) {
    switch (kind) {
        case qx::ErrorKind::parse:
            return QX_ERR_PARSE;
        case qx::ErrorKind::capacity:
            return QX_ERR_CAPACITY;
        case qx::ErrorKind::numerical:
            return QX_ERR_NUMERIC;
        case qx::ErrorKind::parameter:
        case qx::ErrorKind::generation:
        case qx::ErrorKind::unsupported_depth:
        case qx::ErrorKind::coverage:
            return QX_ERR_PARAM;
    }
    return QX_ERR_INTERNAL;
}

template <typename Fn>
qx_status guard(Fn&& fn) {
    try {
        fn();
        return QX_OK;
    } catch (const qx::Error& err) {
        set_error(err.what());
        return map_kind(err.kind());
    } catch (const std::exception& err) {
        set_error(err.what());
        return QX_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return QX_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool ok, const char* what) {
    if (!ok) throw qx::Error(qx::ErrorKind::parameter, what);
}

qx::OptimizerConfig to_core(const qx_optimizer_config* cfg) {
    require(cfg != nullptr, "config must not be null");
    qx::OptimizerConfig out;
    out.steps = cfg->steps;
    out.restarts = cfg->restarts;
    out.learning_rate = cfg->learning_rate;
    out.rms_decay = cfg->rms_decay;
    out.rms_epsilon = cfg->rms_epsilon;
    out.grad_step = cfg->grad_step;
    out.seed = qx::Seed{cfg->seed};
    return out;
}

qx::ParamPoint to_point(const double* gammas, const double* betas, int32_t p) {
    require(gammas && betas, "angle arrays must not be null");
    require(p >= 1, "p must be >= 1");
    qx::ParamPoint theta;
    theta.gamma.assign(gammas, gammas + p);
    theta.beta.assign(betas, betas + p);
    return theta;
}

qx::Backend to_backend(qx_backend b) {
    switch (b) {
        case QX_BACKEND_FAST:
            return qx::Backend::fast;
        case QX_BACKEND_STATEVECTOR:
            return qx::Backend::statevector;
        case QX_BACKEND_TENSORNET:
            return qx::Backend::tensornet;
    }
    throw qx::Error(qx::ErrorKind::parameter, "unknown backend");
}

}  // namespace

extern "C" {

const char* qx_version(void) { return qx::kVersion; }

const char* qx_last_error(void) { return g_last_error.c_str(); }

void qx_string_free(char* s) { std::free(s); }

void qx_optimizer_config_init(qx_optimizer_config* cfg) {
    if (!cfg) return;
    qx::OptimizerConfig defaults;
    cfg->steps = defaults.steps;
    cfg->restarts = defaults.restarts;
    cfg->learning_rate = defaults.learning_rate;
    cfg->rms_decay = defaults.rms_decay;
    cfg->rms_epsilon = defaults.rms_epsilon;
    cfg->grad_step = defaults.grad_step;
    cfg->seed = defaults.seed.value;
    cfg->jobs = 0;
}

qx_status qx_graph_random_regular(int32_t n, int32_t d, uint64_t seed,
                                  qx_graph** out) {
    return guard([&] {
        require(out != nullptr, "out must not be null");
        *out = new qx_graph{qx::random_regular(n, d, qx::Seed{seed})};
    });
}

qx_status qx_graph_random_bounded(int32_t n, int32_t m, int32_t d_max,
                                  uint64_t seed, qx_graph** out) {
    return guard([&] {
        require(out != nullptr, "out must not be null");
        *out = new qx_graph{qx::random_bounded(n, m, d_max, qx::Seed{seed})};
    });
}

qx_status qx_graph_random_degrees(const int32_t* degrees, int32_t n,
                                  uint64_t seed, qx_graph** out) {
    return guard([&] {
        require(out != nullptr, "out must not be null");
        require(degrees != nullptr && n >= 0, "degrees must not be null");
        std::vector<int> degs(degrees, degrees + n);
        *out = new qx_graph{qx::random_with_degrees(degs, qx::Seed{seed})};
    });
}

qx_status qx_graph_parse(const char* edge_list_text, qx_graph** out) {
    return guard([&] {
        require(out != nullptr && edge_list_text != nullptr,
                "text and out must not be null");
        *out = new qx_graph{qx::read_edge_list(edge_list_text)};
    });
}

qx_status qx_graph_format(const qx_graph* g, char** out_text) {
    return guard([&] {
        require(g != nullptr && out_text != nullptr, "g and out must not be null");
        *out_text = copy_string(qx::write_edge_list(g->g));
    });
}

void qx_graph_free(qx_graph* g) { delete g; }

int32_t qx_graph_nodes(const qx_graph* g) { return g ? g->g.num_nodes() : -1; }

int32_t qx_graph_edges(const qx_graph* g) { return g ? g->g.num_edges() : -1; }

qx_status qx_histogram_json(const qx_graph* g, char** out_json) {
    return guard([&] {
        require(g != nullptr && out_json != nullptr, "g and out must not be null");
        *out_json = copy_string(qx::histogram_to_json(qx::histogram(g->g)));
    });
}

qx_status qx_enumerate_classes_json(int32_t d_max, int32_t regular_only,
                                    char** out_json) {
    return guard([&] {
        require(out_json != nullptr, "out must not be null");
        auto classes = regular_only ? qx::enumerate_regular(d_max)
                                    : qx::enumerate_general(d_max);
        nlohmann::json j = nlohmann::json::array();
        for (const auto& c : classes) j.push_back(c.token());
        *out_json = copy_string(j.dump(2));
    });
}

qx_status qx_energy(const qx_graph* g, const double* gammas, const double* betas,
                    int32_t p, qx_backend backend, double* out_energy) {
    return guard([&] {
        require(g != nullptr && out_energy != nullptr, "g and out must not be null");
        *out_energy =
            qx::energy(g->g, to_point(gammas, betas, p), to_backend(backend)).energy;
    });
}

qx_status qx_landscape_csv(const char* class_token, double gamma_lo,
                           double gamma_hi, int32_t gamma_steps, double beta_lo,
                           double beta_hi, int32_t beta_steps, char** out_csv) {
    return guard([&] {
        require(class_token != nullptr && out_csv != nullptr,
                "token and out must not be null");
        auto cls = qx::LightconeClass::from_token(class_token);
        auto grid = qx::landscape(cls, qx::grid_points(gamma_lo, gamma_hi, gamma_steps),
                                  qx::grid_points(beta_lo, beta_hi, beta_steps));
        *out_csv = copy_string(qx::landscape_to_csv(grid));
    });
}

qx_status qx_optimize_class_json(const char* class_token,
                                 const qx_optimizer_config* cfg, char** out_json) {
    return guard([&] {
        require(class_token != nullptr && out_json != nullptr,
                "token and out must not be null");
        auto cls = qx::LightconeClass::from_token(class_token);
        auto result = qx::optimize_class(cls, to_core(cfg));
        *out_json = copy_string(qx::optim_result_to_json(result));
    });
}

qx_status qx_optimize_graph_json(const qx_graph* g, const qx_optimizer_config* cfg,
                                 qx_backend backend, char** out_json) {
    return guard([&] {
        require(g != nullptr && out_json != nullptr, "g and out must not be null");
        auto result = qx::optimize_graph(g->g, to_core(cfg), to_backend(backend));
        *out_json = copy_string(qx::optim_result_to_json(result));
    });
}

qx_status qx_maxcut_brute_force(const qx_graph* g, int32_t* out_value,
                                char** out_assignment) {
    return guard([&] {
        require(g != nullptr && out_value != nullptr, "g and out must not be null");
        auto sol = qx::brute_force(g->g);
        *out_value = sol.value;
        if (out_assignment) {
            std::string bits(sol.assignment.size(), '0');
            for (std::size_t i = 0; i < sol.assignment.size(); ++i)
                if (sol.assignment[i]) bits[i] = '1';
            *out_assignment = copy_string(bits);
        }
    });
}

qx_status qx_maxcut_branch_and_bound(const qx_graph* g, double budget_seconds,
                                     int32_t* out_value, int32_t* out_optimal,
                                     int32_t* out_upper_bound,
                                     char** out_assignment) {
    return guard([&] {
        require(g != nullptr && out_value != nullptr, "g and out must not be null");
        auto res = qx::branch_and_bound(g->g, budget_seconds);
        *out_value = res.cut.value;
        if (out_optimal) *out_optimal = res.optimal ? 1 : 0;
        if (out_upper_bound) *out_upper_bound = res.upper_bound;
        if (out_assignment) {
            std::string bits(res.cut.assignment.size(), '0');
            for (std::size_t i = 0; i < res.cut.assignment.size(); ++i)
                if (res.cut.assignment[i]) bits[i] = '1';
            *out_assignment = copy_string(bits);
        }
    });
}

qx_status qx_width_profile_csv(const qx_graph* g, int32_t p, uint64_t seed,
                               int32_t jobs, char** out_csv, int32_t* out_max,
                               double* out_mean, double* out_stddev) {
    return guard([&] {
        require(g != nullptr, "g must not be null");
        auto widths = qx::tn::width_profile(g->g, p, qx::Seed{seed}, jobs);
        if (out_csv) *out_csv = copy_string(qx::widths_to_csv(widths));
        double mean = 0.0, var = 0.0;
        int w_max = 0;
        if (!widths.empty()) {
            for (int w : widths) {
                mean += w;
                w_max = std::max(w_max, w);
            }
            mean /= widths.size();
            for (int w : widths) var += (w - mean) * (w - mean);
            var /= widths.size();
        }
        if (out_max) *out_max = w_max;
        if (out_mean) *out_mean = mean;
        if (out_stddev) *out_stddev = std::sqrt(var);
    });
}

qx_status qx_map_build(int32_t d_max, int32_t regular_only,
                       const qx_optimizer_config* cfg, qx_transfer_map** out) {
    return guard([&] {
        require(out != nullptr, "out must not be null");
        auto classes = regular_only ? qx::enumerate_regular(d_max)
                                    : qx::enumerate_general(d_max);
        int jobs = cfg ? cfg->jobs : 0;
        *out = new qx_transfer_map{qx::build_map(classes, to_core(cfg), jobs)};
    });
}

qx_status qx_map_parse(const char* json_text, qx_transfer_map** out) {
    return guard([&] {
        require(json_text != nullptr && out != nullptr,
                "text and out must not be null");
        *out = new qx_transfer_map{qx::transfer_map_from_json(json_text)};
    });
}

qx_status qx_map_to_json(const qx_transfer_map* map, char** out_json) {
    return guard([&] {
        require(map != nullptr && out_json != nullptr, "map and out must not be null");
        *out_json = copy_string(qx::transfer_map_to_json(map->map));
    });
}

qx_status qx_map_to_csv(const qx_transfer_map* map, char** out_csv) {
    return guard([&] {
        require(map != nullptr && out_csv != nullptr, "map and out must not be null");
        *out_csv = copy_string(qx::transfer_map_to_csv(map->map));
    });
}

qx_status qx_map_parity_json(const qx_transfer_map* map, char** out_json) {
    return guard([&] {
        require(map != nullptr && out_json != nullptr, "map and out must not be null");
        *out_json = copy_string(qx::parity_summary_to_json(qx::parity_summary(map->map)));
    });
}

int32_t qx_map_size(const qx_transfer_map* map) {
    return map ? static_cast<int32_t>(map->map.classes.size()) : -1;
}

void qx_map_free(qx_transfer_map* map) { delete map; }

qx_status qx_check_sufficient(const qx_graph* donor, const qx_graph* acceptor,
                              const qx_transfer_map* map, double threshold,
                              int32_t* out_ok, char** out_witness_json) {
    return guard([&] {
        require(donor != nullptr && acceptor != nullptr && map != nullptr &&
                    out_ok != nullptr,
                "donor, acceptor, map, out must not be null");
        auto res = qx::check_sufficient(donor->g, acceptor->g, map->map, threshold);
        *out_ok = res.ok ? 1 : 0;
        if (out_witness_json) {
            *out_witness_json = nullptr;
            if (res.witness) {
                nlohmann::json j{{"donor", res.witness->donor.token()},
                                 {"acceptor", res.witness->acceptor.token()},
                                 {"value", res.witness->value},
                                 {"context", res.witness->context}};
                *out_witness_json = copy_string(j.dump(2));
            }
        }
    });
}

qx_status qx_transfer_experiment_json(const qx_graph* donor,
                                      const qx_graph* acceptor,
                                      const qx_optimizer_config* cfg,
                                      double maxcut_budget_seconds,
                                      const char* donor_id,
                                      const char* acceptor_id, char** out_json) {
    return guard([&] {
        require(donor != nullptr && acceptor != nullptr && out_json != nullptr,
                "donor, acceptor, out must not be null");
        auto rep = qx::run_experiment(donor->g, acceptor->g, to_core(cfg),
                                      maxcut_budget_seconds,
                                      donor_id ? donor_id : "donor",
                                      acceptor_id ? acceptor_id : "acceptor");
        *out_json = copy_string(qx::experiment_to_json(rep));
    });
}

}  // extern "C"
