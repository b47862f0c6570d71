#pragma once

#include <string>

#include "tensornet.hpp"
#include "transfer.hpp"

namespace qx {

// Text payloads for the file formats the CLI emits. JSON payloads are plain
// objects so callers can wrap them with run metadata.

std::string histogram_to_json(const ClassHistogram& h);

// First row = gamma grid, first column = beta grid, cells = contributions,
// 12 significant digits.
std::string landscape_to_csv(const LandscapeGrid& grid);

// {best: {gamma: [], beta: []}, best_value, restarts: [...], trace: []}
std::string optim_result_to_json(const OptimResult& result);

std::string transfer_map_to_json(const TransferMap& map);
std::string transfer_map_to_csv(const TransferMap& map);
TransferMap transfer_map_from_json(const std::string& text);

std::string parity_summary_to_json(const ParitySummary& s);

std::string experiment_to_json(const ExperimentReport& rep);

// edge_index,width rows.
std::string widths_to_csv(const std::vector<int>& widths);

std::string format_double(double v);  // 17 significant digits, locale-free

}  // namespace qx
