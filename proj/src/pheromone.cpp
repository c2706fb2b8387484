#include "antkit/pheromone.hpp"

#include <charconv>
#include <stdexcept>

namespace antkit {

PheromoneStore::PheromoneStore(int n, double tau0) : n_(n), tau0_(tau0) {
    if (n < 2) throw std::invalid_argument("pheromone store needs at least 2 cities");
    if (!(tau0 > 0.0)) throw std::invalid_argument("tau0 must be positive");
    tri_.assign(static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2, tau0);
}

void PheromoneStore::scale_all(double factor) {
    for (double& v : tri_) v = clamp(v * factor);
}

void PheromoneStore::set_bounds(double lo, double hi) {
    if (!(lo > 0.0) || !(hi >= lo))
        throw std::invalid_argument("pheromone bounds must satisfy 0 < lo <= hi");
    bounds_ = {lo, hi};
    for (double& v : tri_) v = clamp(v);
}

std::string PheromoneStore::debug_csv() const {
    std::string out = "r,s,tau\n";
    char buf[32];
    for (int r = 0; r < n_; ++r) {
        for (int s = r + 1; s < n_; ++s) {
            out += std::to_string(r + 1) + ',' + std::to_string(s + 1) + ',';
            auto [end, ec] = std::to_chars(buf, buf + sizeof buf, get(r, s));
            out.append(buf, ec == std::errc() ? end : buf);
            out += '\n';
        }
    }
    return out;
}

void deposit(PheromoneStore& store, std::span<const int> order, double amount) {
    size_t n = order.size();
    for (size_t i = 0; i < n; ++i) {
        int r = order[i], s = order[(i + 1) % n];
        store.set(r, s, store.get(r, s) + amount);
    }
}

void as_global_update(PheromoneStore& store, std::span<const Tour> ants,
                      double evaporation) {
    store.scale_all(1.0 - evaporation);
    for (const Tour& t : ants) deposit(store, t.order, 1.0 / static_cast<double>(t.length));
}

void local_update(PheromoneStore& store, int r, int s, double rho, double tau0) {
    store.set(r, s, (1.0 - rho) * store.get(r, s) + rho * tau0);
}

void best_tour_update(PheromoneStore& store, const Tour& best, double rho) {
    double bonus = rho / static_cast<double>(best.length);
    size_t n = best.order.size();
    for (size_t i = 0; i < n; ++i) {
        int r = best.order[i], s = best.order[(i + 1) % n];
        store.set(r, s, (1.0 - rho) * store.get(r, s) + bonus);
    }
}

void set_mmas_bounds(PheromoneStore& store, long long best_length, double rho) {
    double hi = 1.0 / (rho * static_cast<double>(best_length));
    double lo = hi / (2.0 * static_cast<double>(store.size()));
    store.set_bounds(lo, hi);
}

}  // namespace antkit
