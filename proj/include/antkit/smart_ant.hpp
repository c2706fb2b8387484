#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "antkit/engines.hpp"
#include "antkit/genetic.hpp"
#include "antkit/instance.hpp"
#include "antkit/params.hpp"
#include "antkit/pheromone.hpp"
#include "antkit/report.hpp"
#include "antkit/rng.hpp"

namespace antkit {

/// An ant that builds a child tour guided by two parents: its moves are
/// chosen from the parents' adjacent cities (see candidate_set) by the
/// pseudo-random proportional rule.
struct SmartAnt {
    SmartAnt(int n, const ParentPair& parents) : ant(n), pair(&parents) {}

    AntState ant;
    const ParentPair* pair;
};

/// Selection weights over the unvisited parent-neighbor candidates of r:
/// probability[i] corresponds to candidates.city[i] and the live entries
/// sum to 1. Empty candidate set yields count == 0.
struct PcDistribution {
    CandidateSet candidates;
    std::array<double, 4> probability{};
};

PcDistribution pc_probabilities(const PheromoneStore& store, const Instance& inst,
                                const ParentPair& pair, int r,
                                std::span<const std::uint8_t> visited,
                                double alpha, double beta);

/// One construction step: with probability q0 the candidate maximizing
/// tau^alpha * eta^beta, otherwise a draw from pc_probabilities. An empty
/// candidate set falls back to the nearest unvisited city (ties toward the
/// smaller index), mirroring the crossover fallback.
int smart_select_next(const PheromoneStore& store, const SearchContext& ctx,
                      const SmartAnt& smart, Rng& rng);

/// Builds a complete child tour from `start` (random when -1), applying the
/// step-wise pheromone decay to every traversed edge, closing edge
/// included.
Tour construct_child(PheromoneStore& store, const SearchContext& ctx,
                     SmartAnt& smart, Rng& rng, int start = -1);

/// The population-based hybrid: each generation every ant gets two parents,
/// builds a child, improves it with 2-opt and competes for the longer
/// parent's slot; duplicates of an existing member are discarded. Pheromone
/// sees the step-wise decay during construction and a best-tour
/// reinforcement after each ant.
RunReport run_hacosa(const Instance& inst, const SolverParams& params);

}  // namespace antkit
