#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "antkit/bench.hpp"
#include "antkit/engines.hpp"
#include "antkit/exhaustive.hpp"
#include "antkit/instance.hpp"
#include "antkit/params.hpp"
#include "antkit/tour.hpp"

namespace {

antkit::Instance load_instance(const std::string& path) {
    if (path == "demo8") return antkit::demo8_instance();
    return antkit::parse_tsplib_file(path);
}

void apply_param_arg(antkit::SolverParams& params, const std::string& arg) {
    auto eq = arg.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("--param expects key=value, got '" + arg + "'");
    antkit::apply_param(params, arg.substr(0, eq), arg.substr(eq + 1));
}

int cmd_solve(const std::string& instance_path, const std::string& engine_arg,
              std::uint64_t seed, int iterations, const std::vector<std::string>& param_args,
              bool print_tour) {
    auto engine = antkit::parse_engine(engine_arg);
    if (!engine) {
        std::cerr << "error: unknown engine '" << engine_arg
                  << "' (expected AS, ACS, MMAS or HACO-SA)\n";
        return 1;
    }
    antkit::SolverParams params = antkit::default_params(*engine);
    params.seed = seed;
    if (iterations > 0) params.iterations = iterations;
    for (const std::string& arg : param_args) apply_param_arg(params, arg);

    antkit::Instance inst = load_instance(instance_path);
    antkit::RunReport report = antkit::run_engine(inst, params);

    std::cout << "instance   : " << report.instance << " (" << inst.n() << " cities)\n"
              << "engine     : " << report.engine << "\n"
              << "seed       : " << report.seed << "\n"
              << "best       : " << report.best.length << "\n"
              << "iterations : " << report.iterations_run << "\n"
              << "tours      : " << report.tours_built << "\n"
              << "time [s]   : " << report.wall_time_s << "\n";
    if (print_tour) std::cout << "tour       : " << antkit::format_tour(report.best.order) << "\n";
    return 0;
}

int cmd_bench(const std::string& config_path, int runs_override, int jobs_override,
              const std::string& format_override, std::string out_dir) {
    antkit::ExperimentConfig config = antkit::parse_config_file(config_path);
    if (runs_override > 0) config.runs = runs_override;
    if (jobs_override > 0) config.jobs = jobs_override;
    if (!format_override.empty()) {
        auto fmt = antkit::parse_format(format_override);
        if (!fmt) {
            std::cerr << "error: unknown format '" << format_override << "'\n";
            return 1;
        }
        config.format = *fmt;
    }
    if (out_dir.empty()) {
        if (const char* env = std::getenv("ANTKIT_OUT_DIR")) out_dir = env;
    }

    std::vector<antkit::RunReport> reports = antkit::run_experiment(config);
    std::vector<antkit::Aggregate> aggregates = antkit::aggregate(reports);

    switch (config.format) {
        case antkit::RenderFormat::table: std::cout << antkit::render_table(aggregates); break;
        case antkit::RenderFormat::csv: std::cout << antkit::render_csv(reports); break;
        case antkit::RenderFormat::json:
            std::cout << antkit::render_json(reports, aggregates);
            break;
    }

    if (!out_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(out_dir);
        auto write = [&](const char* name, const std::string& content) {
            fs::path p = fs::path(out_dir) / name;
            std::ofstream out(p);
            if (!out) throw std::runtime_error("cannot write " + p.string());
            out << content;
        };
        write("results.txt", antkit::render_table(aggregates));
        write("results.csv", antkit::render_csv(reports));
        write("results.json", antkit::render_json(reports, aggregates));
        std::cerr << "wrote results.{txt,csv,json} to " << out_dir << "\n";
    }
    return 0;
}

int cmd_oracle(const std::string& instance_path) {
    antkit::Instance inst = load_instance(instance_path);
    if (inst.n() > antkit::kExhaustiveMaxN) {
        std::cerr << "error: oracle handles at most " << antkit::kExhaustiveMaxN
                  << " cities, " << inst.name() << " has " << inst.n() << "\n";
        return 1;
    }
    antkit::Tour best = antkit::exhaustive_optimum(inst);
    std::cout << "instance : " << inst.name() << " (" << inst.n() << " cities)\n"
              << "optimum  : " << best.length << "\n"
              << "tour     : " << antkit::format_tour(best.order) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ant-colony and hybrid genetic TSP solvers"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "run one engine on one instance");
    std::string solve_instance, solve_engine = "ACS";
    std::uint64_t solve_seed = 1;
    int solve_iterations = 0;
    std::vector<std::string> solve_params;
    bool solve_tour = false;
    solve->add_option("instance", solve_instance, "TSPLIB file or 'demo8'")->required();
    solve->add_option("--engine,-e", solve_engine, "AS, ACS, MMAS or HACO-SA");
    solve->add_option("--seed", solve_seed, "RNG seed");
    solve->add_option("--iterations", solve_iterations, "iteration count");
    solve->add_option("--param", solve_params, "parameter override key=value")
        ->take_all();
    solve->add_flag("--tour", solve_tour, "print the best tour found");

    auto* bench = app.add_subcommand("bench", "run a benchmark config");
    std::string bench_config, bench_format, bench_out;
    int bench_runs = 0, bench_jobs = 0;
    bench->add_option("config", bench_config, "experiment config file")->required();
    bench->add_option("--runs", bench_runs, "override run count");
    bench->add_option("--jobs", bench_jobs, "override worker count");
    bench->add_option("--format", bench_format, "table, csv or json");
    bench->add_option("--out", bench_out,
                      "directory for results.{txt,csv,json} (default $ANTKIT_OUT_DIR)");

    auto* oracle = app.add_subcommand("oracle", "exhaustive optimum for tiny instances");
    std::string oracle_instance;
    oracle->add_option("instance", oracle_instance, "TSPLIB file or 'demo8'")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(solve_instance, solve_engine, solve_seed, solve_iterations,
                             solve_params, solve_tour);
        if (bench->parsed())
            return cmd_bench(bench_config, bench_runs, bench_jobs, bench_format, bench_out);
        if (oracle->parsed()) return cmd_oracle(oracle_instance);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
