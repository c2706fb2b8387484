#include "antkit/local_search.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace antkit {

namespace {

// Reverses the cyclic segment running forward from position `from` to
// position `to` inclusive, flipping whichever side of the cycle is shorter
// (both give the same cyclic tour). `pos` stays consistent.
void reverse_segment(std::vector<int>& order, std::vector<int>& pos, int from, int to) {
    const int n = static_cast<int>(order.size());
    int inside = (to - from + n) % n + 1;
    if (2 * inside > n) {
        int new_from = (to + 1) % n;
        to = (from - 1 + n) % n;
        from = new_from;
        inside = n - inside;
    }
    int x = from, y = to;
    for (int s = 0; s < inside / 2; ++s) {
        std::swap(order[static_cast<size_t>(x)], order[static_cast<size_t>(y)]);
        pos[static_cast<size_t>(order[static_cast<size_t>(x)])] = x;
        pos[static_cast<size_t>(order[static_cast<size_t>(y)])] = y;
        x = (x + 1) % n;
        y = (y - 1 + n) % n;
    }
}

// One full-neighborhood pass: scans every reversal, applying improvements as
// found. Returns the total gain of the pass.
long long full_pass(const Instance& inst, std::vector<int>& order, std::vector<int>& pos) {
    const int n = static_cast<int>(order.size());
    long long gain_total = 0;
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            if (q == p + 1) continue;              // shared city, no-op
            if (p == 0 && q == n - 1) continue;    // same cyclic tour
            int a = order[static_cast<size_t>(p)];
            int b = order[static_cast<size_t>(p + 1)];
            int c = order[static_cast<size_t>(q)];
            int e = order[static_cast<size_t>((q + 1) % n)];
            long long gain = static_cast<long long>(inst.distance(a, b)) + inst.distance(c, e) -
                             inst.distance(a, c) - inst.distance(b, e);
            if (gain > 0) {
                reverse_segment(order, pos, p + 1, q);
                gain_total += gain;
            }
        }
    }
    return gain_total;
}

// Neighbor-list pass: for every city, looks for an improving reversal that
// introduces an edge from its list, on both sides of the city. Sorted lists
// let the scan stop once the new edge is no shorter than the removed one.
long long neighbor_pass(const Instance& inst, const NeighborLists& nl,
                        std::vector<int>& order, std::vector<int>& pos) {
    const int n = static_cast<int>(order.size());
    long long gain_total = 0;
    for (int a = 0; a < n; ++a) {
        bool moved = true;
        while (moved) {
            moved = false;
            int pa = pos[static_cast<size_t>(a)];
            int a_next = order[static_cast<size_t>((pa + 1) % n)];
            int a_prev = order[static_cast<size_t>((pa - 1 + n) % n)];
            int d_next = inst.distance(a, a_next);
            int d_prev = inst.distance(a_prev, a);
            for (int b : nl[static_cast<size_t>(a)]) {
                int d_ab = inst.distance(a, b);
                if (d_ab >= d_next && d_ab >= d_prev) break;
                int pb = pos[static_cast<size_t>(b)];
                if (d_ab < d_next) {
                    int b_next = order[static_cast<size_t>((pb + 1) % n)];
                    if (b != a_next && b_next != a) {
                        long long gain = static_cast<long long>(d_next) +
                                         inst.distance(b, b_next) - d_ab -
                                         inst.distance(a_next, b_next);
                        if (gain > 0) {
                            reverse_segment(order, pos, (pa + 1) % n, pb);
                            gain_total += gain;
                            moved = true;
                            break;
                        }
                    }
                }
                if (d_ab < d_prev) {
                    int b_prev = order[static_cast<size_t>((pb - 1 + n) % n)];
                    if (b != a_prev && b_prev != a) {
                        long long gain = static_cast<long long>(d_prev) +
                                         inst.distance(b_prev, b) - d_ab -
                                         inst.distance(a_prev, b_prev);
                        if (gain > 0) {
                            reverse_segment(order, pos, pa, (pb - 1 + n) % n);
                            gain_total += gain;
                            moved = true;
                            break;
                        }
                    }
                }
            }
        }
    }
    return gain_total;
}

}  // namespace

Tour two_opt(const Instance& inst, Tour tour, const TwoOptOptions& opts) {
    const int n = static_cast<int>(tour.order.size());
    if (n < 4) return tour;

    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(tour.order[static_cast<size_t>(i)])] = i;

    int rounds = 0;
    long long gain = 0;
    do {
        gain = opts.neighbors ? neighbor_pass(inst, *opts.neighbors, tour.order, pos)
                              : full_pass(inst, tour.order, pos);
        tour.length -= gain;
        ++rounds;
    } while (gain > 0 && (opts.max_rounds == 0 || rounds < opts.max_rounds));

    assert(tour.length == tour_length(inst, tour.order));
    return tour;
}

Tour double_bridge(const Instance& inst, const Tour& tour, DoubleBridgeCuts cuts) {
    const int n = static_cast<int>(tour.order.size());
    if (n < 8)
        throw std::invalid_argument("double bridge needs at least 8 cities, tour has " +
                                    std::to_string(n));
    if (!(0 < cuts.a && cuts.a < cuts.b && cuts.b < cuts.c && cuts.c < n))
        throw std::invalid_argument("double bridge cuts must satisfy 0 < a < b < c < n");

    const auto& o = tour.order;
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n));
    out.insert(out.end(), o.begin(), o.begin() + cuts.a);            // A
    out.insert(out.end(), o.begin() + cuts.b, o.begin() + cuts.c);   // C
    out.insert(out.end(), o.begin() + cuts.a, o.begin() + cuts.b);   // B
    out.insert(out.end(), o.begin() + cuts.c, o.end());              // D

    // Only the three joint edges change; the closing edge survives.
    long long removed = static_cast<long long>(inst.distance(o[cuts.a - 1], o[cuts.a])) +
                        inst.distance(o[cuts.b - 1], o[cuts.b]) +
                        inst.distance(o[cuts.c - 1], o[cuts.c]);
    long long added = static_cast<long long>(inst.distance(o[cuts.a - 1], o[cuts.b])) +
                      inst.distance(o[cuts.c - 1], o[cuts.a]) +
                      inst.distance(o[cuts.b - 1], o[cuts.c]);

    Tour result;
    result.order = std::move(out);
    result.length = tour.length - removed + added;
    assert(result.length == tour_length(inst, result.order));
    return result;
}

Tour double_bridge(const Instance& inst, const Tour& tour, Rng& rng) {
    const int n = static_cast<int>(tour.order.size());
    if (n < 8)
        throw std::invalid_argument("double bridge needs at least 8 cities, tour has " +
                                    std::to_string(n));
    int a, b, c;
    do {
        a = uniform_int(rng, 1, n - 1);
        b = uniform_int(rng, 1, n - 1);
        c = uniform_int(rng, 1, n - 1);
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
    } while (a == b || b == c);
    return double_bridge(inst, tour, DoubleBridgeCuts{a, b, c});
}

Tour nearest_neighbor_tour(const Instance& inst, int start) {
    const int n = inst.n();
    assert(start >= 0 && start < n);
    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    order.push_back(start);
    visited[static_cast<size_t>(start)] = 1;
    for (int step = 1; step < n; ++step) {
        int cur = order.back();
        int best = -1, best_d = std::numeric_limits<int>::max();
        for (int j = 0; j < n; ++j) {
            if (visited[static_cast<size_t>(j)]) continue;
            int d = inst.distance(cur, j);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        order.push_back(best);
        visited[static_cast<size_t>(best)] = 1;
    }
    Tour t;
    t.length = tour_length(inst, order);
    t.order = std::move(order);
    return t;
}

}  // namespace antkit
