#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "antkit/instance.hpp"
#include "antkit/rng.hpp"
#include "antkit/tour.hpp"

namespace antkit {

/// Two parent tours with their cyclic predecessor/successor tables, plus
/// the population slots they came from (-1 when free-standing). The tables
/// make neighbor lookups O(1) during crossover.
struct ParentPair {
    Tour p1, p2;
    int slot1 = -1, slot2 = -1;
    std::vector<int> pred1, succ1, pred2, succ2;
};

ParentPair make_parent_pair(Tour p1, Tour p2, int slot1 = -1, int slot2 = -1);

/// Up to four distinct unvisited cities adjacent to r in either parent,
/// collected in the order pred1, succ1, pred2, succ2 (first occurrence
/// kept).
struct CandidateSet {
    std::array<int, 4> city{};
    int count = 0;
};

CandidateSet candidate_set(const ParentPair& pair, int r,
                           std::span<const std::uint8_t> visited);

/// Greedy crossover: from a random (or given) start city, repeatedly moves
/// to the cheapest unvisited parent-neighbor; when the candidate set is
/// empty, falls back to the nearest unvisited city overall. Ties break
/// toward the candidate collected first (respectively the smaller index on
/// the fallback). Always yields a valid tour.
Tour igx_crossover(const Instance& inst, const ParentPair& pair, Rng& rng,
                   int start = -1);

class Population {
public:
    /// capacity >= 2.
    explicit Population(int capacity);

    /// Nearest-neighbor tours from random distinct starts, each improved by
    /// one 2-opt pass.
    static Population initialize(const Instance& inst, int capacity, Rng& rng,
                                 const NeighborLists* neighbors = nullptr);

    int size() const { return static_cast<int>(members_.size()); }
    int capacity() const { return capacity_; }
    const Tour& member(int slot) const { return members_[static_cast<size_t>(slot)]; }
    const Tour& best() const;
    long long best_length() const { return best().length; }

    void add(Tour t);                  ///< up to capacity
    void replace(int slot, Tour t);

    /// True if some member has the same length and the same cyclic edge set
    /// (orientation and rotation ignored).
    bool contains_equivalent(const Tour& t) const;

private:
    int capacity_;
    std::vector<Tour> members_;
};

/// Steady-state insertion: of the pair's two slots, the one currently
/// holding the longer tour (the first on a tie) is replaced when the child
/// is strictly shorter than that occupant. Comparisons are against the
/// current occupants, so the population best never regresses. Returns true
/// when the child was inserted.
bool steady_state_replace(Population& pop, Tour child, const ParentPair& pair);

/// Draws `count` parent pairs of distinct slots, uniformly at random.
std::vector<ParentPair> assign_parents(const Population& pop, int count, Rng& rng);

}  // namespace antkit
