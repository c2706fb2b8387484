#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "antkit/tour.hpp"

namespace antkit {

struct TracePoint {
    int iteration = 0;
    long long best_length = 0;
};

/// Outcome of one solver run.
struct RunReport {
    std::string engine;
    std::string instance;
    std::uint64_t seed = 0;
    Tour best;
    double wall_time_s = 0.0;
    long long tours_built = 0;   ///< constructed (and locally searched) tours
    int iterations_run = 0;
    /// Best-so-far length after every iteration.
    std::vector<TracePoint> trace;
};

}  // namespace antkit
