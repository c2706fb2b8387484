#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "antkit/instance.hpp"
#include "antkit/params.hpp"
#include "antkit/pheromone.hpp"
#include "antkit/report.hpp"
#include "antkit/rng.hpp"

namespace antkit {

/// Partial tour under construction.
struct AntState {
    explicit AntState(int n) : visited(static_cast<size_t>(n), 0) {
        order.reserve(static_cast<size_t>(n));
    }

    int n() const { return static_cast<int>(visited.size()); }
    int current() const { return order.empty() ? -1 : order.back(); }
    bool complete() const { return order.size() == visited.size(); }

    void reset() {
        order.clear();
        std::fill(visited.begin(), visited.end(), std::uint8_t{0});
    }
    void visit(int city) {
        visited[static_cast<size_t>(city)] = 1;
        order.push_back(city);
    }

    std::vector<int> order;
    std::vector<std::uint8_t> visited;
};

/// Per-run tables shared by the construction rules: neighbor lists of width
/// params.neighbor_k and, for instances small enough to afford it, a cached
/// eta^beta matrix.
class SearchContext {
public:
    SearchContext(const Instance& inst, const SolverParams& params);

    const Instance& inst() const { return *inst_; }
    const SolverParams& params() const { return *params_; }
    const NeighborLists& neighbors() const { return neighbors_; }

    double eta_beta(int r, int s) const {
        if (!eta_beta_.empty())
            return eta_beta_[static_cast<size_t>(r) * static_cast<size_t>(n_) +
                             static_cast<size_t>(s)];
        return eta_beta_slow(r, s);
    }

    /// tau(r,s)^alpha * eta(r,s)^beta.
    double edge_weight(const PheromoneStore& store, int r, int s) const;

private:
    double eta_beta_slow(int r, int s) const;

    const Instance* inst_;
    const SolverParams* params_;
    int n_;
    NeighborLists neighbors_;
    std::vector<double> eta_beta_;
};

/// Normalized selection weights over the unvisited cities seen from the
/// ant's current city: p(s) proportional to tau^alpha * eta^beta, 0 for
/// visited cities. Indexed by city; sums to 1.
std::vector<double> transition_probabilities(const PheromoneStore& store,
                                             const Instance& inst,
                                             const AntState& ant,
                                             double alpha, double beta);

/// Pseudo-random proportional step: with probability q0 the unvisited city
/// maximizing tau^alpha * eta^beta, otherwise a draw from the proportional
/// distribution. Candidate lists restrict the choice set when enabled and
/// any listed neighbor is unvisited; otherwise the full unvisited set is
/// scanned.
int acs_select_next(const PheromoneStore& store, const SearchContext& ctx,
                    const AntState& ant, Rng& rng);

/// Proportional-only step (the AS rule), same candidate-list handling.
int as_select_next(const PheromoneStore& store, const SearchContext& ctx,
                   const AntState& ant, Rng& rng);

/// Runs the engine selected by params.engine. Same instance, params and
/// seed give bit-identical reports (timing aside).
RunReport run_engine(const Instance& inst, const SolverParams& params);

/// Instance-derived tau0 when params.tau0 <= 0 (see SolverParams::tau0).
double resolve_tau0(const Instance& inst, const SolverParams& params);

}  // namespace antkit
