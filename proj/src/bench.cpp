#include "antkit/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "antkit/engines.hpp"
#include "antkit/instance.hpp"

#include "json.hpp"

namespace antkit {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::vector<std::string> split_list(std::string_view value) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= value.size()) {
        size_t comma = value.find(',', pos);
        if (comma == std::string_view::npos) comma = value.size();
        std::string_view item = trim(value.substr(pos, comma - pos));
        if (!item.empty()) out.emplace_back(item);
        pos = comma + 1;
    }
    return out;
}

[[noreturn]] void config_fail(int line_no, const std::string& what) {
    throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + what);
}

long long to_ll(int line_no, const std::string& key, std::string_view value) {
    long long out = 0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || p != value.data() + value.size())
        config_fail(line_no, "bad integer '" + std::string(value) + "' for " + key);
    return out;
}

double to_double(int line_no, const std::string& key, std::string_view value) {
    double out = 0.0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || p != value.data() + value.size())
        config_fail(line_no, "bad number '" + std::string(value) + "' for " + key);
    return out;
}

std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

std::optional<RenderFormat> parse_format(std::string_view name) {
    std::string v = lower(name);
    if (v == "table") return RenderFormat::table;
    if (v == "csv") return RenderFormat::csv;
    if (v == "json") return RenderFormat::json;
    return std::nullopt;
}

void ExperimentConfig::validate() const {
    if (instances.empty()) throw std::invalid_argument("config lists no instances");
    if (engines.empty()) throw std::invalid_argument("config lists no engines");
    if (runs < 1) throw std::invalid_argument("runs must be at least 1");
    if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    if (policy == BudgetPolicy::fixed_tours && budget_tours < 1)
        throw std::invalid_argument("budget_tours must be at least 1");
    if (policy == BudgetPolicy::fixed_time && !(budget_seconds > 0.0))
        throw std::invalid_argument("budget_seconds must be positive");
    for (const auto& [engine, params] : engine_params) params.validate();
}

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig config;
    struct Override {
        int line_no;
        Engine engine;
        std::string key, value;
    };
    std::vector<Override> overrides;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = trim(line);
        if (auto hash = sv.find('#'); hash != std::string_view::npos)
            sv = trim(sv.substr(0, hash));
        if (sv.empty()) continue;
        auto eq = sv.find('=');
        if (eq == std::string_view::npos) config_fail(line_no, "expected 'key = value'");
        std::string key = lower(trim(sv.substr(0, eq)));
        std::string value{trim(sv.substr(eq + 1))};
        if (key.empty() || value.empty()) config_fail(line_no, "expected 'key = value'");

        if (auto dot = key.find('.'); dot != std::string::npos) {
            auto engine = parse_engine(key.substr(0, dot));
            if (!engine) config_fail(line_no, "unknown engine '" + key.substr(0, dot) + "'");
            overrides.push_back({line_no, *engine, key.substr(dot + 1), value});
        } else if (key == "instances") {
            config.instances = split_list(value);
        } else if (key == "engines") {
            config.engines.clear();
            for (const std::string& name : split_list(value)) {
                auto engine = parse_engine(name);
                if (!engine) config_fail(line_no, "unknown engine '" + name + "'");
                config.engines.push_back(*engine);
            }
        } else if (key == "runs") {
            config.runs = static_cast<int>(to_ll(line_no, key, value));
        } else if (key == "seed_base") {
            config.seed_base = static_cast<std::uint64_t>(to_ll(line_no, key, value));
        } else if (key == "policy") {
            std::string v = lower(value);
            if (v == "fixed-tours" || v == "fixed_tours") config.policy = BudgetPolicy::fixed_tours;
            else if (v == "fixed-time" || v == "fixed_time") config.policy = BudgetPolicy::fixed_time;
            else config_fail(line_no, "unknown policy '" + value + "'");
        } else if (key == "budget_tours") {
            config.budget_tours = to_ll(line_no, key, value);
        } else if (key == "budget_seconds") {
            config.budget_seconds = to_double(line_no, key, value);
        } else if (key == "jobs") {
            config.jobs = static_cast<int>(to_ll(line_no, key, value));
        } else if (key == "format") {
            auto fmt = parse_format(value);
            if (!fmt) config_fail(line_no, "unknown format '" + value + "'");
            config.format = *fmt;
        } else {
            config_fail(line_no, "unknown key '" + key + "'");
        }
    }

    for (Engine e : config.engines)
        config.engine_params.emplace(e, default_params(e));
    for (const Override& o : overrides) {
        auto it = config.engine_params.find(o.engine);
        if (it == config.engine_params.end())
            config_fail(o.line_no, "override for engine '" +
                                       std::string(engine_name(o.engine)) +
                                       "' which is not in 'engines'");
        try {
            apply_param(it->second, o.key, o.value);
        } catch (const std::invalid_argument& e) {
            config_fail(o.line_no, e.what());
        }
    }
    config.validate();
    return config;
}

ExperimentConfig parse_config_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_config(in);
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config '" + path + "'");
    ExperimentConfig config = parse_config(in);
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    for (std::string& inst : config.instances) {
        if (inst == "demo8") continue;
        std::filesystem::path p(inst);
        if (p.is_relative()) inst = (base / p).string();
    }
    return config;
}

SolverParams budgeted_params(const ExperimentConfig& config, Engine engine) {
    SolverParams params = default_params(engine);
    if (auto it = config.engine_params.find(engine); it != config.engine_params.end())
        params = it->second;
    params.engine = engine;
    params.stall_limit = 0;
    if (config.policy == BudgetPolicy::fixed_tours) {
        // The hybrid's initial population counts against the same budget so
        // every engine constructs the same number of tours.
        long long budget = config.budget_tours;
        if (engine == Engine::hacosa) budget -= params.population;
        long long iters = budget / params.ants;
        params.iterations = static_cast<int>(std::clamp<long long>(
            iters, 1, std::numeric_limits<int>::max()));
        params.time_limit_s = 0.0;
    } else {
        params.iterations = std::numeric_limits<int>::max();
        params.time_limit_s = config.budget_seconds;
    }
    return params;
}

std::vector<RunReport> run_experiment(const ExperimentConfig& config) {
    config.validate();

    std::vector<Instance> instances;
    instances.reserve(config.instances.size());
    for (const std::string& path : config.instances)
        instances.push_back(path == "demo8" ? demo8_instance() : parse_tsplib_file(path));

    std::vector<SolverParams> engine_params;
    engine_params.reserve(config.engines.size());
    for (Engine e : config.engines) engine_params.push_back(budgeted_params(config, e));

    const size_t per_instance = config.engines.size() * static_cast<size_t>(config.runs);
    const size_t total = instances.size() * per_instance;
    std::vector<RunReport> reports(total);

    std::atomic<size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto worker = [&] {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= total) return;
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (first_error) return;
            }
            size_t i = idx / per_instance;
            size_t rest = idx % per_instance;
            size_t e = rest / static_cast<size_t>(config.runs);
            size_t r = rest % static_cast<size_t>(config.runs);
            SolverParams params = engine_params[e];
            params.seed = config.seed_base + r;
            try {
                reports[idx] = run_engine(instances[i], params);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    int jobs = std::min<int>(config.jobs, static_cast<int>(total));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return reports;
}

std::vector<Aggregate> aggregate(std::span<const RunReport> reports) {
    std::vector<Aggregate> out;
    for (const RunReport& r : reports) {
        auto it = std::find_if(out.begin(), out.end(), [&](const Aggregate& a) {
            return a.instance == r.instance && a.engine == r.engine;
        });
        if (it == out.end()) {
            out.push_back({r.engine, r.instance, 0, 0.0, r.best.length, r.best.length, 0.0, 0.0});
            it = out.end() - 1;
        }
        ++it->runs;
        it->mean_length += static_cast<double>(r.best.length);
        it->mean_time_s += r.wall_time_s;
        it->best = std::min(it->best, r.best.length);
        it->worst = std::max(it->worst, r.best.length);
    }
    for (Aggregate& a : out) {
        a.mean_length /= a.runs;
        a.mean_time_s /= a.runs;
    }
    for (Aggregate& a : out) {
        if (a.runs < 2) continue;
        double ss = 0.0;
        for (const RunReport& r : reports) {
            if (r.instance != a.instance || r.engine != a.engine) continue;
            double d = static_cast<double>(r.best.length) - a.mean_length;
            ss += d * d;
        }
        a.stddev = std::sqrt(ss / (a.runs - 1));
    }
    return out;
}

std::string render_table(std::span<const Aggregate> aggregates) {
    std::vector<std::string> engines, instances;
    for (const Aggregate& a : aggregates) {
        if (std::find(engines.begin(), engines.end(), a.engine) == engines.end())
            engines.push_back(a.engine);
        if (std::find(instances.begin(), instances.end(), a.instance) == instances.end())
            instances.push_back(a.instance);
    }
    auto cell = [&](const std::string& inst, const std::string& eng,
                    double Aggregate::*field, int digits) -> std::string {
        for (const Aggregate& a : aggregates)
            if (a.instance == inst && a.engine == eng)
                return format_fixed(a.*field, digits);
        return "-";
    };

    size_t name_w = 8;
    for (const std::string& i : instances) name_w = std::max(name_w, i.size());
    std::vector<size_t> col_w(engines.size());
    for (size_t e = 0; e < engines.size(); ++e) col_w[e] = std::max<size_t>(10, engines[e].size());

    std::string out;
    auto block = [&](const char* title, double Aggregate::*field, int digits) {
        out += title;
        out += '\n';
        out += std::string(name_w, ' ');
        for (size_t e = 0; e < engines.size(); ++e) {
            out += "  ";
            out += std::string(col_w[e] - engines[e].size(), ' ') + engines[e];
        }
        out += '\n';
        for (const std::string& inst : instances) {
            out += inst + std::string(name_w - inst.size(), ' ');
            for (size_t e = 0; e < engines.size(); ++e) {
                std::string v = cell(inst, engines[e], field, digits);
                out += "  ";
                out += std::string(col_w[e] > v.size() ? col_w[e] - v.size() : 0, ' ') + v;
            }
            out += '\n';
        }
    };
    block("mean best tour length", &Aggregate::mean_length, 2);
    out += '\n';
    block("mean wall time [s]", &Aggregate::mean_time_s, 3);
    return out;
}

std::string render_csv(std::span<const RunReport> reports) {
    std::string out = "engine,instance,seed,best_length,wall_time_s\n";
    for (const RunReport& r : reports) {
        out += r.engine + ',' + r.instance + ',' + std::to_string(r.seed) + ',' +
               std::to_string(r.best.length) + ',' + format_fixed(r.wall_time_s, 6) + '\n';
    }
    return out;
}

std::string render_json(std::span<const RunReport> reports,
                        std::span<const Aggregate> aggregates) {
    nlohmann::json j;
    j["runs"] = nlohmann::json::array();
    for (const RunReport& r : reports) {
        j["runs"].push_back({{"engine", r.engine},
                             {"instance", r.instance},
                             {"seed", r.seed},
                             {"best_length", r.best.length},
                             {"wall_time_s", r.wall_time_s},
                             {"tours_built", r.tours_built},
                             {"iterations", r.iterations_run}});
    }
    j["aggregates"] = nlohmann::json::array();
    for (const Aggregate& a : aggregates) {
        j["aggregates"].push_back({{"engine", a.engine},
                                   {"instance", a.instance},
                                   {"runs", a.runs},
                                   {"mean_length", a.mean_length},
                                   {"best", a.best},
                                   {"worst", a.worst},
                                   {"stddev", a.stddev},
                                   {"mean_time_s", a.mean_time_s}});
    }
    return j.dump(2) + "\n";
}

}  // namespace antkit
