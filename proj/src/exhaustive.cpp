#include "antkit/exhaustive.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace antkit {

Tour exhaustive_optimum(const Instance& inst) {
    const int n = inst.n();
    if (n > kExhaustiveMaxN)
        throw std::invalid_argument("exhaustive search handles at most " +
                                    std::to_string(kExhaustiveMaxN) + " cities, instance has " +
                                    std::to_string(n));

    // City 0 stays fixed; every permutation of the rest is a distinct
    // cyclic tour (directions are enumerated twice, which is harmless).
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> best_order = order;
    long long best_len = std::numeric_limits<long long>::max();
    do {
        long long len = 0;
        for (int i = 0; i < n; ++i)
            len += inst.distance(order[static_cast<size_t>(i)],
                                 order[static_cast<size_t>((i + 1) % n)]);
        if (len < best_len) {
            best_len = len;
            best_order = order;
        }
    } while (std::next_permutation(order.begin() + 1, order.end()));

    Tour t;
    t.order = std::move(best_order);
    t.length = best_len;
    return t;
}

}  // namespace antkit
