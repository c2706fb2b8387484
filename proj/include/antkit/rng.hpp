#pragma once

#include <cstdint>
#include <random>

namespace antkit {

/// All randomized components draw from a single per-run stream so that a
/// fixed seed reproduces a run exactly.
using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi_inclusive) {
    return std::uniform_int_distribution<int>(lo, hi_inclusive)(rng);
}

inline double uniform_unit(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace antkit
