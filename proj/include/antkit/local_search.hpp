#pragma once

#include "antkit/instance.hpp"
#include "antkit/rng.hpp"
#include "antkit/tour.hpp"

namespace antkit {

struct TwoOptOptions {
    /// When set, moves are restricted to edges whose shorter endpoint pair
    /// appears in the lists (the usual nearest-neighbor speedup). The result
    /// is then only locally optimal with respect to that reduced
    /// neighborhood. When null, every reversal is examined and the result
    /// admits no improving reversal at all.
    const NeighborLists* neighbors = nullptr;
    /// Maximum number of improvement passes; 0 means run to local optimum.
    int max_rounds = 0;
};

/// First-improvement 2-opt. Never returns a longer tour; tours with fewer
/// than four cities are returned unchanged.
Tour two_opt(const Instance& inst, Tour tour, const TwoOptOptions& opts = {});

/// Interior cut positions 0 < a < b < c < n splitting the order into
/// A=[0,a) B=[a,b) C=[b,c) D=[c,n).
struct DoubleBridgeCuts {
    int a = 0, b = 0, c = 0;
};

/// Reorders the tour to A C B D, replacing the three cyclic edges at the
/// A|B, B|C and C|D joints (the closing D-A edge is kept; when B and C are
/// both single cities the swapped joint edge coincides with a removed one,
/// leaving two changed edges). Throws std::invalid_argument for tours of
/// fewer than eight cities or for cuts violating 0 < a < b < c < n.
Tour double_bridge(const Instance& inst, const Tour& tour, DoubleBridgeCuts cuts);

/// Random-cut variant: three distinct interior positions drawn uniformly.
Tour double_bridge(const Instance& inst, const Tour& tour, Rng& rng);

/// Greedy nearest-neighbor construction from `start`; ties broken toward
/// the smaller city index.
Tour nearest_neighbor_tour(const Instance& inst, int start);

}  // namespace antkit
