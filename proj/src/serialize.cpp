#include "serialize.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace qx {

using nlohmann::json;

namespace {

std::string format_sig(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

json param_point_to_json(const ParamPoint& theta) {
    return json{{"gamma", theta.gamma}, {"beta", theta.beta}};
}

ParamPoint param_point_from_json(const json& j) {
    ParamPoint theta;
    theta.gamma = j.at("gamma").get<std::vector<double>>();
    theta.beta = j.at("beta").get<std::vector<double>>();
    return theta;
}

json config_to_json(const OptimizerConfig& cfg) {
    return json{{"steps", cfg.steps},
                {"restarts", cfg.restarts},
                {"learning_rate", cfg.learning_rate},
                {"rms_decay", cfg.rms_decay},
                {"rms_epsilon", cfg.rms_epsilon},
                {"grad_step", cfg.grad_step},
                {"seed", cfg.seed.value}};
}

OptimizerConfig config_from_json(const json& j) {
    OptimizerConfig cfg;
    cfg.steps = j.at("steps").get<int>();
    cfg.restarts = j.at("restarts").get<int>();
    cfg.learning_rate = j.at("learning_rate").get<double>();
    cfg.rms_decay = j.at("rms_decay").get<double>();
    cfg.rms_epsilon = j.at("rms_epsilon").get<double>();
    cfg.grad_step = j.at("grad_step").get<double>();
    cfg.seed = Seed{j.at("seed").get<std::uint64_t>()};
    return cfg;
}

json graph_summary_to_json(const GraphSummary& s) {
    json classes = json::object();
    for (const auto& [cls, count] : s.classes) classes[cls.token()] = count;
    return json{{"id", s.id},
                {"nodes", s.nodes},
                {"edges", s.edges},
                {"subgraphs", classes},
                {"gamma", s.theta.gamma},
                {"beta", s.theta.beta},
                {"energy", s.energy},
                {"maxcut", s.maxcut},
                {"maxcut_optimal", s.maxcut_optimal},
                {"ratio", s.ratio}};
}

}  // namespace

std::string format_double(double v) { return format_sig(v, 17); }

std::string histogram_to_json(const ClassHistogram& h) {
    json counts = json::object();
    for (const auto& [cls, count] : h.counts) counts[cls.token()] = count;
    json j{{"histogram", counts}, {"total", h.total}};
    return j.dump(2);
}

std::string landscape_to_csv(const LandscapeGrid& grid) {
    std::ostringstream out;
    out << "beta\\gamma";
    for (double g : grid.gammas) out << "," << format_sig(g, 12);
    out << "\n";
    for (std::size_t bi = 0; bi < grid.betas.size(); ++bi) {
        out << format_sig(grid.betas[bi], 12);
        for (std::size_t gi = 0; gi < grid.gammas.size(); ++gi)
            out << "," << format_sig(grid.values[gi][bi], 12);
        out << "\n";
    }
    return out.str();
}

std::string optim_result_to_json(const OptimResult& result) {
    json restarts = json::array();
    for (const auto& r : result.all_restarts) {
        json entry = param_point_to_json(r.point);
        entry["value"] = r.value;
        entry["ok"] = r.ok;
        restarts.push_back(std::move(entry));
    }
    json j{{"best", param_point_to_json(result.best)},
           {"best_value", result.best_value},
           {"restarts", restarts},
           {"trace", result.trace}};
    return j.dump(2);
}

std::string transfer_map_to_json(const TransferMap& map) {
    json classes = json::array();
    for (const auto& c : map.classes) classes.push_back(c.token());
    json j{{"classes", classes},
           {"matrix", map.matrix},
           {"config", config_to_json(map.config)}};
    return j.dump(2);
}

TransferMap transfer_map_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw Error(ErrorKind::parse, std::string("bad map JSON: ") + err.what());
    }
    TransferMap map;
    try {
        for (const auto& token : j.at("classes"))
            map.classes.push_back(LightconeClass::from_token(token.get<std::string>()));
        map.matrix = j.at("matrix").get<std::vector<std::vector<double>>>();
        map.config = config_from_json(j.at("config"));
    } catch (const json::exception& err) {
        throw Error(ErrorKind::parse, std::string("bad map JSON: ") + err.what());
    }
    const std::size_t n = map.classes.size();
    if (map.matrix.size() != n)
        throw Error(ErrorKind::parse, "map matrix is not square");
    for (const auto& row : map.matrix)
        if (row.size() != n)
            throw Error(ErrorKind::parse, "map matrix is not square");
    return map;
}

std::string transfer_map_to_csv(const TransferMap& map) {
    std::ostringstream out;
    out << "donor\\acceptor";
    for (const auto& c : map.classes) out << "," << c.token();
    out << "\n";
    for (std::size_t i = 0; i < map.classes.size(); ++i) {
        out << map.classes[i].token();
        for (double v : map.matrix[i]) out << "," << format_sig(v, 12);
        out << "\n";
    }
    return out.str();
}

std::string parity_summary_to_json(const ParitySummary& s) {
    json j{{"odd_odd", s.odd_odd},
           {"even_even", s.even_even},
           {"odd_even", s.odd_even},
           {"even_odd", s.even_odd}};
    return j.dump(2);
}

std::string experiment_to_json(const ExperimentReport& rep) {
    json j{{"donor", graph_summary_to_json(rep.donor)},
           {"acceptor", graph_summary_to_json(rep.acceptor)},
           {"transferred_energy", rep.transferred_energy},
           {"transferred_ratio", rep.transferred_ratio},
           {"ratio_delta_percent", rep.ratio_delta_percent},
           {"ratios_are_lower_bounds", rep.ratios_are_lower_bounds}};
    return j.dump(2);
}

std::string widths_to_csv(const std::vector<int>& widths) {
    std::ostringstream out;
    out << "edge_index,width\n";
    for (std::size_t i = 0; i < widths.size(); ++i)
        out << i << "," << widths[i] << "\n";
    return out.str();
}

}  // namespace qx
