#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antkit/tour.hpp"

namespace antkit {

/// Symmetric pheromone matrix stored as the strict upper triangle, so
/// tau(r,s) and tau(s,r) are one entry by construction. Optional [lo, hi]
/// bounds, once set, are enforced on every write.
class PheromoneStore {
public:
    PheromoneStore(int n, double tau0);

    int size() const { return n_; }
    double tau0() const { return tau0_; }

    double get(int r, int s) const { return tri_[index(r, s)]; }

    void set(int r, int s, double value) { tri_[index(r, s)] = clamp(value); }

    /// Multiplies every entry by `factor` (global evaporation step).
    void scale_all(double factor);

    void set_bounds(double lo, double hi);
    bool has_bounds() const { return bounds_.has_value(); }
    double tau_min() const { return bounds_->first; }
    double tau_max() const { return bounds_->second; }

    /// r,s,tau triples, 1-based labels, upper triangle only.
    std::string debug_csv() const;

private:
    size_t index(int r, int s) const {
        assert(r != s && r >= 0 && s >= 0 && r < n_ && s < n_);
        if (r > s) std::swap(r, s);
        // offset of row r in the strict upper triangle, then column shift
        return static_cast<size_t>(r) * (2 * n_ - r - 1) / 2 +
               static_cast<size_t>(s - r - 1);
    }
    double clamp(double v) const {
        if (!bounds_) return v;
        if (v < bounds_->first) return bounds_->first;
        if (v > bounds_->second) return bounds_->second;
        return v;
    }

    int n_ = 0;
    double tau0_ = 0.0;
    std::vector<double> tri_;
    std::optional<std::pair<double, double>> bounds_;
};

/// Adds `amount` to every edge of the visiting order, closing edge included.
void deposit(PheromoneStore& store, std::span<const int> order, double amount);

/// Ant-System global rule: evaporate every entry by (1 - evaporation), then
/// each ant deposits 1/length on its own tour edges.
void as_global_update(PheromoneStore& store, std::span<const Tour> ants,
                      double evaporation);

/// Step-wise decay toward tau0 on one edge: tau <- (1-rho)*tau + rho*tau0.
void local_update(PheromoneStore& store, int r, int s, double rho, double tau0);

/// Best-tour reinforcement on the edges of `best` only:
/// tau <- (1-rho)*tau + rho/length.
void best_tour_update(PheromoneStore& store, const Tour& best, double rho);

/// Installs trail limits derived from the current best length:
/// hi = 1/(rho*length), lo = hi/(2n). Existing entries are clamped.
void set_mmas_bounds(PheromoneStore& store, long long best_length, double rho);

}  // namespace antkit
