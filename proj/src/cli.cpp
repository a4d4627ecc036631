#include "aimkm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "aimkm/aim.hpp"
#include "aimkm/data.hpp"
#include "aimkm/errors.hpp"
#include "aimkm/eval.hpp"
#include "aimkm/kmeans.hpp"
#include "aimkm/report.hpp"

namespace aimkm::cli {

namespace {

/// Argument problem detected after parsing (infeasible k and the like).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InputFlags {
    std::string path;
    bool header = false;
    std::string delimiter = ",";

    CsvOptions csv() const {
        if (delimiter.size() != 1) {
            throw UsageError("--delimiter must be a single character");
        }
        return CsvOptions{header, delimiter.front()};
    }
};

struct AimFlags {
    std::uint64_t seed = 0;
    std::string strategy = "centroid-mean-plus-std";
    bool paper_literal_gte = false;

    AimConfig config() const {
        const auto parsed = parse_threshold_strategy(strategy);
        if (!parsed) {
            throw UsageError("unknown threshold strategy '" + strategy + "'");
        }
        return AimConfig{seed, *parsed, !paper_literal_gte};
    }
};

struct KmeansFlags {
    std::size_t max_iter = 100;
    double tol = 1e-9;
};

void add_input_flags(CLI::App* cmd, InputFlags& flags) {
    cmd->add_option("--input", flags.path, "Input CSV file")->required();
    cmd->add_flag("--header", flags.header, "First row of the input holds column names");
    cmd->add_option("--delimiter", flags.delimiter, "Field delimiter")->capture_default_str();
}

void add_aim_flags(CLI::App* cmd, AimFlags& flags) {
    cmd->add_option("--seed", flags.seed, "Seed for the first mean and candidate order")
        ->capture_default_str();
    cmd->add_option("--threshold-strategy", flags.strategy, "Distance threshold statistic")
        ->check(CLI::IsMember({"centroid-mean-plus-std", "centroid-mean", "centroid-rms",
                               "pairwise-mean-plus-std"}))
        ->capture_default_str();
    cmd->add_flag("--paper-literal-gte", flags.paper_literal_gte,
                  "Accept candidates whose average distance equals the threshold");
}

void add_kmeans_flags(CLI::App* cmd, KmeansFlags& flags) {
    cmd->add_option("--max-iter", flags.max_iter, "Iteration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--tol", flags.tol, "Centroid displacement for early stop")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
}

Dataset read_input(const std::string& path, const CsvOptions& options) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot read '" + path + "'");
    }
    return load_dataset(in, options);
}

template <typename Writer>
void write_file(const std::string& path, Writer&& writer) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    writer(out);
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

void check_k(std::size_t k, const Dataset& data) {
    if (k < 1 || k > data.size()) {
        throw UsageError("k must satisfy 1 <= k <= n (k = " + std::to_string(k) +
                         ", n = " + std::to_string(data.size()) + ")");
    }
}

KmeansConfig kmeans_config(const KmeansFlags& flags, std::uint64_t seed) {
    return KmeansConfig{flags.max_iter, flags.tol, seed};
}

// --- gen-blobs -------------------------------------------------------------

struct GenBlobsCommand {
    BlobSpec spec;
    std::string out;
    std::string labels_out;

    void attach(CLI::App* cmd) {
        cmd->add_option("--blobs", spec.blob_count, "Number of blobs")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->add_option("--points-per", spec.points_per_blob, "Points per blob")
            ->required()
            ->check(CLI::PositiveNumber);
        cmd->add_option("--dim", spec.dim, "Attribute count")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--std", spec.blob_std, "Per-axis standard deviation")
            ->check(CLI::NonNegativeNumber)
            ->capture_default_str();
        cmd->add_option("--separation", spec.separation, "Minimum distance between centers")
            ->check(CLI::NonNegativeNumber)
            ->capture_default_str();
        cmd->add_option("--seed", spec.seed, "Generator seed")->capture_default_str();
        cmd->add_option("--out", out, "Dataset CSV output")->required();
        cmd->add_option("--labels-out", labels_out, "Ground-truth labels CSV output");
    }

    int execute(std::ostream& stdout_stream) const {
        const auto blobs = generate_blobs(spec);
        write_file(out, [&](std::ostream& s) { write_dataset(blobs.dataset, s); });
        if (!labels_out.empty()) {
            write_file(labels_out, [&](std::ostream& s) { write_labels(blobs.labels, s); });
        }
        stdout_stream << "wrote " << blobs.dataset.size() << " rows to " << out << '\n';
        return kOk;
    }
};

// --- aim -------------------------------------------------------------------

struct AimCommand {
    InputFlags input;
    AimFlags aim;

    void attach(CLI::App* cmd) {
        add_input_flags(cmd, input);
        add_aim_flags(cmd, aim);
    }

    int execute(std::ostream& out) const {
        const auto config = aim.config();
        const auto data = read_input(input.path, input.csv());
        const auto result = aim_initialize(data, config);
        out << aim_to_json(result, config, data.size()).dump(2) << '\n';
        return kOk;
    }
};

// --- kmeans ----------------------------------------------------------------

struct KmeansCommand {
    InputFlags input;
    KmeansFlags km;
    std::optional<std::size_t> k;
    std::string init_file;
    bool init_header = false;
    std::uint64_t seed = 0;
    std::string labels_out;

    void attach(CLI::App* cmd) {
        add_input_flags(cmd, input);
        add_kmeans_flags(cmd, km);
        auto* k_opt = cmd->add_option("--k", k, "Cluster count (random initial means)");
        auto* init_opt = cmd->add_option("--init-file", init_file, "CSV of initial means");
        k_opt->excludes(init_opt);
        cmd->add_flag("--init-header", init_header, "First row of --init-file is a header");
        cmd->add_option("--seed", seed, "Seed for random initial means")->capture_default_str();
        cmd->add_option("--labels-out", labels_out, "Write final labels as CSV");
    }

    int execute(std::ostream& out) const {
        if (!k && init_file.empty()) {
            throw UsageError("exactly one of --k or --init-file is required");
        }
        if (k && *k < 1) {
            throw UsageError("--k must be >= 1");
        }
        const auto csv = input.csv();
        const auto data = read_input(input.path, csv);

        std::vector<Point> init;
        if (k) {
            check_k(*k, data);
            init = random_init(data, *k, seed);
        } else {
            const auto means = read_input(init_file, CsvOptions{init_header, csv.delimiter});
            if (means.dim() != data.dim()) {
                throw DataError("initial means have " + std::to_string(means.dim()) +
                                " attributes, dataset has " + std::to_string(data.dim()));
            }
            check_k(means.size(), data);
            for (std::size_t i = 0; i < means.size(); ++i) {
                init.push_back(means.copy_point(i));
            }
        }

        const auto result = kmeans_run(data, init, kmeans_config(km, seed));
        auto doc = clustering_to_json(result);
        doc["init"] = k ? "random" : "file";
        doc["seed"] = seed;
        doc["max_iterations"] = km.max_iter;
        doc["tolerance"] = km.tol;
        out << doc.dump(2) << '\n';
        if (!labels_out.empty()) {
            write_file(labels_out,
                       [&](std::ostream& s) { write_labels(result.assignment.labels, s); });
        }
        return kOk;
    }
};

// --- aim-kmeans ------------------------------------------------------------

struct AimKmeansCommand {
    InputFlags input;
    AimFlags aim;
    KmeansFlags km;
    std::string labels_out;

    void attach(CLI::App* cmd) {
        add_input_flags(cmd, input);
        add_aim_flags(cmd, aim);
        add_kmeans_flags(cmd, km);
        cmd->add_option("--labels-out", labels_out, "Write final labels as CSV");
    }

    int execute(std::ostream& out) const {
        const auto config = aim.config();
        const auto data = read_input(input.path, input.csv());
        const auto seeded = aim_initialize(data, config);
        const auto result = kmeans_run(data, seeded.means, kmeans_config(km, aim.seed));

        Json doc;
        doc["aim_k"] = seeded.k;
        doc["threshold"] = seeded.threshold;
        doc["strategy"] = std::string(to_string(config.strategy));
        doc["strict_inequality"] = config.strict_inequality;
        doc["seed"] = config.seed;
        doc["mean_indices"] = seeded.mean_indices;
        doc["max_iterations"] = km.max_iter;
        doc["tolerance"] = km.tol;
        doc.update(clustering_to_json(result));
        out << doc.dump(2) << '\n';
        if (!labels_out.empty()) {
            write_file(labels_out,
                       [&](std::ostream& s) { write_labels(result.assignment.labels, s); });
        }
        return kOk;
    }
};

// --- compare ---------------------------------------------------------------

struct CompareCommand {
    InputFlags input;
    AimFlags aim;
    KmeansFlags km;
    std::size_t user_k = 0;
    std::size_t trials = 50;
    std::size_t threads = 1;
    std::string emit_plot;
    std::string report;

    void attach(CLI::App* cmd) {
        add_input_flags(cmd, input);
        add_aim_flags(cmd, aim);
        add_kmeans_flags(cmd, km);
        cmd->add_option("--user-k", user_k, "Cluster count supplied to plain K-means")
            ->required();
        cmd->add_option("--trials", trials, "Number of trials")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--threads", threads, "Worker threads for trials")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--emit-plot", emit_plot, "Write method,avg_sse bar data CSV");
        cmd->add_option("--report", report, "Write the full JSON report");
    }

    int execute(std::ostream& out) const {
        const auto config = aim.config();
        const auto data = read_input(input.path, input.csv());
        check_k(user_k, data);
        const auto result = run_comparison(data, user_k, trials, aim.seed, config,
                                           kmeans_config(km, aim.seed), threads);

        out << "trials: " << result.trials << ", seed: " << result.master_seed
            << ", strategy: " << to_string(config.strategy)
            << (config.strict_inequality ? "" : " (>=)") << '\n';
        out << std::left << std::setw(16) << "method" << std::setw(8) << "k"
            << "mean_avg_sse\n";
        const auto row = [&](const char* name, std::size_t k, double v) {
            out << std::left << std::setw(16) << name << std::setw(8) << k << format_double(v)
                << '\n';
        };
        row("kmeans_user_k", result.user_k, result.avg_sse_kmeans_user_k);
        row("aim_kmeans", result.aim_k, result.avg_sse_aim_kmeans);
        row("kmeans_aim_k", result.aim_k, result.avg_sse_kmeans_aim_k);

        if (!emit_plot.empty()) {
            write_file(emit_plot, [&](std::ostream& s) { s << comparison_plot_csv(result); });
        }
        if (!report.empty()) {
            write_file(report,
                       [&](std::ostream& s) { s << comparison_to_json(result).dump(2) << '\n'; });
        }
        return kOk;
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"AIM-seeded K-means clustering and benchmark tool", "aimkm"};
    app.require_subcommand(1);

    GenBlobsCommand gen;
    AimCommand aim;
    KmeansCommand kmeans;
    AimKmeansCommand aim_kmeans;
    CompareCommand compare;

    auto* gen_cmd = app.add_subcommand("gen-blobs", "Generate a Gaussian blob dataset");
    auto* aim_cmd = app.add_subcommand("aim", "Discover k and initial means with AIM");
    auto* km_cmd = app.add_subcommand("kmeans", "Run K-means from random or given means");
    auto* aimkm_cmd = app.add_subcommand("aim-kmeans", "Run K-means seeded by AIM");
    auto* cmp_cmd = app.add_subcommand("compare", "Three-phase average-SSE comparison");
    gen.attach(gen_cmd);
    aim.attach(aim_cmd);
    kmeans.attach(km_cmd);
    aim_kmeans.attach(aimkm_cmd);
    compare.attach(cmp_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*gen_cmd) return gen.execute(out);
        if (*aim_cmd) return aim.execute(out);
        if (*km_cmd) return kmeans.execute(out);
        if (*aimkm_cmd) return aim_kmeans.execute(out);
        if (*cmp_cmd) return compare.execute(out);
        err << app.help();
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\nRun with --help for more information.\n";
        return kUsage;
    } catch (const DataError& e) {
        err << "data error: " << e.what() << '\n';
        return kDataError;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    }
}

}  // namespace aimkm::cli
