#pragma once

// JSON documents emitted by the command-line tool. Field names are part of
// the tool's interface; see README.md for the schema.

#include <json.hpp>

#include "aimkm/aim.hpp"
#include "aimkm/eval.hpp"
#include "aimkm/kmeans.hpp"

namespace aimkm {

using Json = nlohmann::ordered_json;

Json aim_to_json(const AimResult& result, const AimConfig& config, std::size_t n);

Json clustering_to_json(const ClusteringResult& result);

Json comparison_to_json(const ComparisonReport& report);

/// Shortest round-trip decimal text.
std::string format_double(double value);

/// Figure-style bar data: header `method,avg_sse` and one row per phase.
std::string comparison_plot_csv(const ComparisonReport& report);

std::string_view to_string(StopReason reason);

}  // namespace aimkm
