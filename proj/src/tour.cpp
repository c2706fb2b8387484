#include "antkit/tour.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace antkit {

bool is_valid_tour(std::span<const int> order, int n) {
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int c : order) {
        if (c < 0 || c >= n || seen[static_cast<size_t>(c)]) return false;
        seen[static_cast<size_t>(c)] = 1;
    }
    return true;
}

long long tour_length(const Instance& inst, std::span<const int> order) {
    long long total = 0;
    size_t n = order.size();
    for (size_t i = 0; i < n; ++i)
        total += inst.distance(order[i], order[(i + 1) % n]);
    return total;
}

Tour make_tour(const Instance& inst, std::vector<int> order) {
    int n = inst.n();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("tour visits " + std::to_string(order.size()) +
                                    " cities, instance has " + std::to_string(n));
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int c : order) {
        if (c < 0 || c >= n)
            throw std::invalid_argument("tour contains city " + std::to_string(c + 1) +
                                        " outside 1.." + std::to_string(n));
        if (seen[static_cast<size_t>(c)])
            throw std::invalid_argument("tour visits city " + std::to_string(c + 1) +
                                        " twice");
        seen[static_cast<size_t>(c)] = 1;
    }
    Tour t;
    t.length = tour_length(inst, order);
    t.order = std::move(order);
    return t;
}

Tour random_tour(const Instance& inst, Rng& rng) {
    std::vector<int> order(static_cast<size_t>(inst.n()));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    Tour t;
    t.length = tour_length(inst, order);
    t.order = std::move(order);
    return t;
}

std::string format_tour(std::span<const int> order) {
    std::string out;
    for (size_t i = 0; i < order.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(order[i] + 1);
    }
    return out;
}

std::vector<int> parse_tour(std::string_view text, int n) {
    std::vector<int> order;
    const char* p = text.data();
    const char* end = p + text.size();
    while (p < end) {
        int label = 0;
        auto [next, ec] = std::from_chars(p, end, label);
        if (ec != std::errc() || next == p)
            throw std::invalid_argument("bad tour entry near '" +
                                        std::string(p, std::min<size_t>(8, end - p)) + "'");
        order.push_back(label - 1);
        p = next;
        if (p < end) {
            if (*p != ',') throw std::invalid_argument("expected ',' between tour entries");
            ++p;
        }
    }
    if (!is_valid_tour(order, n))
        throw std::invalid_argument("tour is not a permutation of 1.." + std::to_string(n));
    return order;
}

}  // namespace antkit
