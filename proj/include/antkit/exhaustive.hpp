#pragma once

#include "antkit/instance.hpp"
#include "antkit/tour.hpp"

namespace antkit {

inline constexpr int kExhaustiveMaxN = 12;

/// Provably optimal tour by enumerating all (n-1)! visiting orders with
/// city 0 fixed. Throws std::invalid_argument for n > kExhaustiveMaxN.
Tour exhaustive_optimum(const Instance& inst);

}  // namespace antkit
