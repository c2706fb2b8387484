#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "antkit/params.hpp"
#include "antkit/report.hpp"

namespace antkit {

/// How runs of different engines are given comparable effort: an equal
/// number of constructed-and-locally-searched tours, or an equal wall-clock
/// budget.
enum class BudgetPolicy { fixed_tours, fixed_time };

enum class RenderFormat { table, csv, json };
std::optional<RenderFormat> parse_format(std::string_view name);

/// A benchmark description: the cross product instances x engines x runs.
/// Run r of every (instance, engine) cell uses seed seed_base + r, so a
/// cell's results do not depend on the order cells are listed or executed.
struct ExperimentConfig {
    std::vector<std::string> instances;  ///< paths, or the literal "demo8"
    std::vector<Engine> engines;
    int runs = 10;
    std::uint64_t seed_base = 1;
    BudgetPolicy policy = BudgetPolicy::fixed_tours;
    long long budget_tours = 25000;
    double budget_seconds = 10.0;
    int jobs = 1;
    RenderFormat format = RenderFormat::table;
    /// Fully resolved per-engine parameters (defaults plus overrides).
    std::map<Engine, SolverParams> engine_params;

    void validate() const;
};

/// Flat key = value lines, '#' comments. Recognized keys: instances,
/// engines (comma-separated), runs, seed_base, policy (fixed-tours |
/// fixed-time), budget_tours, budget_seconds, jobs, format, and per-engine
/// parameter overrides "<engine>.<param> = value" (e.g. "mmas.ants = 25",
/// "haco-sa.q0 = 0.95"). Unknown keys raise std::invalid_argument.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_text(std::string_view text);
/// Relative instance paths are resolved against the config file's directory.
ExperimentConfig parse_config_file(const std::string& path);

/// The per-run parameters the experiment uses for `engine`: the configured
/// overrides with iterations (or the time limit) derived from the budget
/// policy and the stall cutoff disabled.
SolverParams budgeted_params(const ExperimentConfig& config, Engine engine);

/// Executes every run of the experiment. All instances are parsed up front,
/// so a bad path fails before any work is done. Reports are ordered by
/// instance, then engine, then run index, regardless of how many worker
/// threads executed them.
std::vector<RunReport> run_experiment(const ExperimentConfig& config);

struct Aggregate {
    std::string engine;
    std::string instance;
    int runs = 0;
    double mean_length = 0.0;
    long long best = 0;
    long long worst = 0;
    double stddev = 0.0;
    double mean_time_s = 0.0;
};

/// Groups reports by (instance, engine) in first-appearance order.
std::vector<Aggregate> aggregate(std::span<const RunReport> reports);

/// Two blocks (mean best length, mean wall time) with instances as rows and
/// engines as columns.
std::string render_table(std::span<const Aggregate> aggregates);

/// Header "engine,instance,seed,best_length,wall_time_s", one row per run.
std::string render_csv(std::span<const RunReport> reports);

/// {"runs": [...], "aggregates": [...]}.
std::string render_json(std::span<const RunReport> reports,
                        std::span<const Aggregate> aggregates);

}  // namespace antkit
