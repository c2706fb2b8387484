#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace antkit {

enum class Engine { as, acs, mmas, hacosa };

/// Canonical display names: "AS", "ACS", "MMAS", "HACO-SA".
std::string_view engine_name(Engine e);

/// Case-insensitive; accepts the display names plus "haco_sa"/"hacosa".
std::optional<Engine> parse_engine(std::string_view name);

struct SolverParams {
    Engine engine = Engine::acs;

    double alpha = 1.0;  ///< pheromone exponent
    double beta = 2.0;   ///< heuristic exponent
    double q0 = 0.9;     ///< greedy-selection threshold (ACS / HACO-SA)

    double rho_local = 0.1;    ///< step-wise decay toward tau0
    double rho_global = 0.1;   ///< best-tour reinforcement rate
    double evaporation = 0.02; ///< global evaporation (AS / MMAS)

    /// Initial trail level; <= 0 selects the instance-derived default:
    /// 1/(n * L_nn) for AS/ACS/HACO-SA, 1/(evaporation * L_nn) for MMAS,
    /// with L_nn the nearest-neighbor tour length from city 0.
    double tau0 = 0.0;

    int ants = 25;
    int iterations = 1000;
    int population = 20;   ///< HACO-SA population size
    int neighbor_k = 20;   ///< candidate / neighbor list width

    /// Stop after this many iterations without improving the best tour;
    /// 0 disables the cutoff.
    int stall_limit = 0;

    bool use_candidate_lists = true;

    /// 2-opt on every constructed tour. Unset picks the engine default:
    /// on for MMAS and HACO-SA, off for AS and ACS.
    std::optional<bool> local_search;

    /// HACO-SA global update: deposit tau0 instead of 1/length (the
    /// text-literal variant; off by default).
    bool strict_tau0_global = false;

    double time_limit_s = 0.0;  ///< wall-clock cutoff; 0 disables
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

/// Engine defaults: AS evaporation 0.5; ACS rho 0.1/0.1, q0 0.9;
/// MMAS evaporation 0.02, 2-opt on; HACO-SA 10 ants, population 20,
/// stall limit 200, 2-opt on.
SolverParams default_params(Engine e);

/// Applies "key=value" to a parameter field; throws std::invalid_argument
/// for unknown keys or unparseable values. Keys match the field names above
/// ("alpha", "q0", "rho_local", "ants", "local_search", ...).
void apply_param(SolverParams& params, std::string_view key, std::string_view value);

}  // namespace antkit
