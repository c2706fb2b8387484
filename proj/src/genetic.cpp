#include "antkit/genetic.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "antkit/local_search.hpp"

namespace antkit {

namespace {

void fill_neighbor_tables(const Tour& t, std::vector<int>& pred, std::vector<int>& succ) {
    const int n = static_cast<int>(t.order.size());
    pred.assign(static_cast<size_t>(n), -1);
    succ.assign(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int c = t.order[static_cast<size_t>(i)];
        succ[static_cast<size_t>(c)] = t.order[static_cast<size_t>((i + 1) % n)];
        pred[static_cast<size_t>(c)] = t.order[static_cast<size_t>((i - 1 + n) % n)];
    }
}

// True when both orders describe the same cyclic tour, ignoring direction
// and start point.
bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
    const int n = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != n) return false;
    std::vector<int> pos_b(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pos_b[static_cast<size_t>(b[static_cast<size_t>(i)])] = i;
    for (int i = 0; i < n; ++i) {
        int u = a[static_cast<size_t>(i)];
        int v = a[static_cast<size_t>((i + 1) % n)];
        int pu = pos_b[static_cast<size_t>(u)];
        if (b[static_cast<size_t>((pu + 1) % n)] != v &&
            b[static_cast<size_t>((pu - 1 + n) % n)] != v)
            return false;
    }
    return true;
}

}  // namespace

ParentPair make_parent_pair(Tour p1, Tour p2, int slot1, int slot2) {
    if (p1.order.size() != p2.order.size())
        throw std::invalid_argument("parents must cover the same cities");
    ParentPair pair;
    pair.p1 = std::move(p1);
    pair.p2 = std::move(p2);
    pair.slot1 = slot1;
    pair.slot2 = slot2;
    fill_neighbor_tables(pair.p1, pair.pred1, pair.succ1);
    fill_neighbor_tables(pair.p2, pair.pred2, pair.succ2);
    return pair;
}

CandidateSet candidate_set(const ParentPair& pair, int r,
                           std::span<const std::uint8_t> visited) {
    CandidateSet set;
    const int raw[4] = {pair.pred1[static_cast<size_t>(r)], pair.succ1[static_cast<size_t>(r)],
                        pair.pred2[static_cast<size_t>(r)], pair.succ2[static_cast<size_t>(r)]};
    for (int c : raw) {
        if (visited[static_cast<size_t>(c)]) continue;
        bool dup = false;
        for (int i = 0; i < set.count; ++i)
            if (set.city[static_cast<size_t>(i)] == c) dup = true;
        if (!dup) set.city[static_cast<size_t>(set.count++)] = c;
    }
    return set;
}

Tour igx_crossover(const Instance& inst, const ParentPair& pair, Rng& rng, int start) {
    const int n = inst.n();
    assert(static_cast<int>(pair.p1.order.size()) == n);
    if (start < 0) start = uniform_int(rng, 0, n - 1);

    std::vector<std::uint8_t> visited(static_cast<size_t>(n), 0);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    visited[static_cast<size_t>(start)] = 1;
    order.push_back(start);
    long long length = 0;

    for (int step = 1; step < n; ++step) {
        int cur = order.back();
        CandidateSet cand = candidate_set(pair, cur, visited);
        int next = -1;
        int best_d = std::numeric_limits<int>::max();
        if (cand.count > 0) {
            for (int i = 0; i < cand.count; ++i) {
                int d = inst.distance(cur, cand.city[static_cast<size_t>(i)]);
                if (d < best_d) {
                    best_d = d;
                    next = cand.city[static_cast<size_t>(i)];
                }
            }
        } else {
            for (int c = 0; c < n; ++c) {
                if (visited[static_cast<size_t>(c)]) continue;
                int d = inst.distance(cur, c);
                if (d < best_d) {
                    best_d = d;
                    next = c;
                }
            }
        }
        length += best_d;
        visited[static_cast<size_t>(next)] = 1;
        order.push_back(next);
    }
    length += inst.distance(order.back(), order.front());

    Tour child;
    child.order = std::move(order);
    child.length = length;
    return child;
}

Population::Population(int capacity) : capacity_(capacity) {
    if (capacity < 2) throw std::invalid_argument("population capacity must be at least 2");
    members_.reserve(static_cast<size_t>(capacity));
}

Population Population::initialize(const Instance& inst, int capacity, Rng& rng,
                                  const NeighborLists* neighbors) {
    Population pop(capacity);
    const int n = inst.n();
    std::vector<int> starts(static_cast<size_t>(n));
    std::iota(starts.begin(), starts.end(), 0);
    std::shuffle(starts.begin(), starts.end(), rng);
    TwoOptOptions one_pass{neighbors, 1};
    for (int i = 0; i < capacity; ++i) {
        int start = i < n ? starts[static_cast<size_t>(i)] : uniform_int(rng, 0, n - 1);
        pop.add(two_opt(inst, nearest_neighbor_tour(inst, start), one_pass));
    }
    return pop;
}

const Tour& Population::best() const {
    assert(!members_.empty());
    const Tour* best = &members_.front();
    for (const Tour& t : members_)
        if (t.length < best->length) best = &t;
    return *best;
}

void Population::add(Tour t) {
    if (size() >= capacity_) throw std::logic_error("population is full");
    members_.push_back(std::move(t));
}

void Population::replace(int slot, Tour t) {
    members_.at(static_cast<size_t>(slot)) = std::move(t);
}

bool Population::contains_equivalent(const Tour& t) const {
    for (const Tour& m : members_)
        if (m.length == t.length && same_cycle(m.order, t.order)) return true;
    return false;
}

bool steady_state_replace(Population& pop, Tour child, const ParentPair& pair) {
    assert(pair.slot1 >= 0 && pair.slot2 >= 0);
    const Tour& o1 = pop.member(pair.slot1);
    const Tour& o2 = pop.member(pair.slot2);
    int target = o1.length >= o2.length ? pair.slot1 : pair.slot2;
    if (child.length < pop.member(target).length) {
        pop.replace(target, std::move(child));
        return true;
    }
    return false;
}

std::vector<ParentPair> assign_parents(const Population& pop, int count, Rng& rng) {
    assert(pop.size() >= 2);
    std::vector<ParentPair> pairs;
    pairs.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        int i = uniform_int(rng, 0, pop.size() - 1);
        int j = uniform_int(rng, 0, pop.size() - 2);
        if (j >= i) ++j;
        pairs.push_back(make_parent_pair(pop.member(i), pop.member(j), i, j));
    }
    return pairs;
}

}  // namespace antkit
