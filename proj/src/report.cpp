#include "aimkm/report.hpp"

#include <charconv>
#include <stdexcept>

namespace aimkm {

namespace {

Json points_to_json(std::span<const Point> points) {
    Json out = Json::array();
    for (const auto& p : points) {
        out.push_back(p);
    }
    return out;
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) {
        throw std::runtime_error("failed to format value");
    }
    return std::string(buf, ptr);
}

std::string_view to_string(StopReason reason) {
    switch (reason) {
        case StopReason::LabelsStable:
            return "labels-stable";
        case StopReason::CentroidsStable:
            return "centroids-stable";
        case StopReason::IterationCap:
            return "iteration-cap";
    }
    return "unknown";
}

Json aim_to_json(const AimResult& result, const AimConfig& config, std::size_t n) {
    Json doc;
    doc["k"] = result.k;
    doc["threshold"] = result.threshold;
    doc["strategy"] = std::string(to_string(config.strategy));
    doc["strict_inequality"] = config.strict_inequality;
    doc["seed"] = config.seed;
    doc["n"] = n;
    doc["first_index"] = result.first_index;
    doc["mean_indices"] = result.mean_indices;
    doc["means"] = points_to_json(result.means);
    return doc;
}

Json clustering_to_json(const ClusteringResult& result) {
    Json doc;
    doc["k"] = result.centroids.size();
    doc["iterations"] = result.iterations;
    doc["converged"] = result.converged;
    doc["stop_reason"] = std::string(to_string(result.stop_reason));
    doc["sse"] = result.sse;
    doc["average_sse"] = result.average_sse;
    doc["empty_cluster_events"] = result.empty_cluster_events;
    doc["centroids"] = points_to_json(result.centroids);
    return doc;
}

Json comparison_to_json(const ComparisonReport& report) {
    Json doc;
    doc["user_k"] = report.user_k;
    doc["aim_k"] = report.aim_k;
    doc["avg_sse_kmeans_user_k"] = report.avg_sse_kmeans_user_k;
    doc["avg_sse_aim_kmeans"] = report.avg_sse_aim_kmeans;
    doc["avg_sse_kmeans_aim_k"] = report.avg_sse_kmeans_aim_k;
    doc["trials"] = report.trials;
    doc["master_seed"] = report.master_seed;
    doc["strategy"] = std::string(to_string(report.aim_config.strategy));
    doc["strict_inequality"] = report.aim_config.strict_inequality;
    doc["max_iterations"] = report.kmeans_config.max_iterations;
    doc["tolerance"] = report.kmeans_config.tolerance;
    Json trials = Json::array();
    for (const auto& t : report.per_trial) {
        Json row;
        row["trial"] = t.trial;
        row["seed"] = t.seed;
        row["aim_k"] = t.aim_k;
        row["avg_sse_kmeans_user_k"] = t.avg_sse_kmeans_user_k;
        row["avg_sse_aim_kmeans"] = t.avg_sse_aim_kmeans;
        row["avg_sse_kmeans_aim_k"] = t.avg_sse_kmeans_aim_k;
        trials.push_back(std::move(row));
    }
    doc["per_trial"] = std::move(trials);
    return doc;
}

std::string comparison_plot_csv(const ComparisonReport& report) {
    std::string out = "method,avg_sse\n";
    out += "kmeans_user_k," + format_double(report.avg_sse_kmeans_user_k) + "\n";
    out += "aim_kmeans," + format_double(report.avg_sse_aim_kmeans) + "\n";
    out += "kmeans_aim_k," + format_double(report.avg_sse_kmeans_aim_k) + "\n";
    return out;
}

}  // namespace aimkm
