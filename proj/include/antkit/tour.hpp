#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "antkit/instance.hpp"
#include "antkit/rng.hpp"

namespace antkit {

/// A closed tour: `order` is a permutation of 0..n-1, `length` the cached
/// cyclic length including the edge from order.back() to order.front().
struct Tour {
    std::vector<int> order;
    long long length = 0;
};

/// True iff `order` is a permutation of 0..n-1.
bool is_valid_tour(std::span<const int> order, int n);

/// Cyclic length of a visiting order. Pre: valid permutation.
long long tour_length(const Instance& inst, std::span<const int> order);

/// Validates and wraps a visiting order. Throws std::invalid_argument
/// naming the offending city (1-based label, as in reports) on a duplicate
/// or out-of-range entry, or a missing city.
Tour make_tour(const Instance& inst, std::vector<int> order);

Tour random_tour(const Instance& inst, Rng& rng);

/// "1,2,5,3,..." with 1-based city labels.
std::string format_tour(std::span<const int> order);

/// Inverse of format_tour; validates against instance size n.
std::vector<int> parse_tour(std::string_view text, int n);

}  // namespace antkit
