#include "antkit/engines.hpp"

#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "antkit/local_search.hpp"
#include "antkit/smart_ant.hpp"

namespace antkit {

SearchContext::SearchContext(const Instance& inst, const SolverParams& params)
    : inst_(&inst),
      params_(&params),
      n_(inst.n()),
      neighbors_(nearest_neighbor_lists(inst, params.neighbor_k)) {
    // The eta^beta table costs n^2 doubles; beyond this size the few runs
    // that need it recompute on the fly instead.
    if (n_ <= 2048) {
        eta_beta_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0.0);
        for (int r = 0; r < n_; ++r)
            for (int s = 0; s < n_; ++s)
                if (r != s)
                    eta_beta_[static_cast<size_t>(r) * n_ + s] =
                        std::pow(inst.eta(r, s), params.beta);
    }
}

double SearchContext::eta_beta_slow(int r, int s) const {
    return std::pow(inst_->eta(r, s), params_->beta);
}

double SearchContext::edge_weight(const PheromoneStore& store, int r, int s) const {
    double tau = store.get(r, s);
    double t = params_->alpha == 1.0 ? tau : std::pow(tau, params_->alpha);
    return t * eta_beta(r, s);
}

std::vector<double> transition_probabilities(const PheromoneStore& store,
                                             const Instance& inst,
                                             const AntState& ant,
                                             double alpha, double beta) {
    const int n = inst.n();
    assert(!ant.complete() && ant.current() >= 0);
    const int cur = ant.current();
    std::vector<double> p(static_cast<size_t>(n), 0.0);
    double total = 0.0;
    for (int s = 0; s < n; ++s) {
        if (ant.visited[static_cast<size_t>(s)]) continue;
        double w = std::pow(store.get(cur, s), alpha) * std::pow(inst.eta(cur, s), beta);
        p[static_cast<size_t>(s)] = w;
        total += w;
    }
    assert(total > 0.0);
    for (double& v : p) v /= total;
    return p;
}

namespace {

// Unvisited choices seen from `cur`: the unvisited part of its neighbor
// list, or every unvisited city when the list is exhausted (or lists are
// disabled).
void collect_choices(const SearchContext& ctx, const AntState& ant, int cur,
                     std::vector<int>& out) {
    out.clear();
    if (ctx.params().use_candidate_lists) {
        for (int c : ctx.neighbors()[static_cast<size_t>(cur)])
            if (!ant.visited[static_cast<size_t>(c)]) out.push_back(c);
        if (!out.empty()) return;
    }
    const int n = ctx.inst().n();
    for (int c = 0; c < n; ++c)
        if (!ant.visited[static_cast<size_t>(c)]) out.push_back(c);
}

int argmax_choice(const PheromoneStore& store, const SearchContext& ctx, int cur,
                  const std::vector<int>& choices) {
    int best = choices[0];
    double best_w = ctx.edge_weight(store, cur, best);
    for (size_t i = 1; i < choices.size(); ++i) {
        double w = ctx.edge_weight(store, cur, choices[i]);
        if (w > best_w) {
            best_w = w;
            best = choices[i];
        }
    }
    return best;
}

int roulette_choice(const PheromoneStore& store, const SearchContext& ctx, int cur,
                    const std::vector<int>& choices, Rng& rng) {
    thread_local std::vector<double> weights;
    weights.clear();
    double total = 0.0;
    for (int c : choices) {
        double w = ctx.edge_weight(store, cur, c);
        weights.push_back(w);
        total += w;
    }
    double u = uniform_unit(rng) * total;
    double acc = 0.0;
    for (size_t i = 0; i < choices.size(); ++i) {
        acc += weights[i];
        if (u < acc) return choices[static_cast<size_t>(i)];
    }
    return choices.back();
}

}  // namespace

int as_select_next(const PheromoneStore& store, const SearchContext& ctx,
                   const AntState& ant, Rng& rng) {
    thread_local std::vector<int> choices;
    collect_choices(ctx, ant, ant.current(), choices);
    assert(!choices.empty());
    return roulette_choice(store, ctx, ant.current(), choices, rng);
}

int acs_select_next(const PheromoneStore& store, const SearchContext& ctx,
                    const AntState& ant, Rng& rng) {
    thread_local std::vector<int> choices;
    collect_choices(ctx, ant, ant.current(), choices);
    assert(!choices.empty());
    double q = uniform_unit(rng);
    if (q <= ctx.params().q0)
        return argmax_choice(store, ctx, ant.current(), choices);
    return roulette_choice(store, ctx, ant.current(), choices, rng);
}

double resolve_tau0(const Instance& inst, const SolverParams& params) {
    if (params.tau0 > 0.0) return params.tau0;
    long long l_nn = nearest_neighbor_tour(inst, 0).length;
    double base = static_cast<double>(l_nn < 1 ? 1 : l_nn);
    if (params.engine == Engine::mmas) return 1.0 / (params.evaporation * base);
    return 1.0 / (static_cast<double>(inst.n()) * base);
}

namespace {

Tour construct_classic(PheromoneStore& store, const SearchContext& ctx, Rng& rng,
                       int start, bool pseudo_random, bool acs_local, double tau0) {
    const Instance& inst = ctx.inst();
    const int n = inst.n();
    AntState ant(n);
    ant.visit(start);
    long long length = 0;
    for (int step = 1; step < n; ++step) {
        int cur = ant.current();
        int next = pseudo_random ? acs_select_next(store, ctx, ant, rng)
                                 : as_select_next(store, ctx, ant, rng);
        length += inst.distance(cur, next);
        if (acs_local) local_update(store, cur, next, ctx.params().rho_local, tau0);
        ant.visit(next);
    }
    int last = ant.order.back(), first = ant.order.front();
    length += inst.distance(last, first);
    if (acs_local) local_update(store, last, first, ctx.params().rho_local, tau0);
    Tour t;
    t.order = std::move(ant.order);
    t.length = length;
    return t;
}

RunReport run_classic(const Instance& inst, const SolverParams& params) {
    const auto t_start = std::chrono::steady_clock::now();
    const int n = inst.n();
    const int m = params.ants;
    Rng rng(params.seed);
    SearchContext ctx(inst, params);
    const double tau0 = resolve_tau0(inst, params);
    PheromoneStore store(n, tau0);
    const bool use_ls = params.local_search.value_or(params.engine == Engine::mmas);
    const TwoOptOptions ls_opts{&ctx.neighbors(), 0};
    const bool acs_local = params.engine == Engine::acs;
    const bool pseudo_random = params.engine == Engine::acs;

    RunReport report;
    report.engine = std::string(engine_name(params.engine));
    report.instance = inst.name();
    report.seed = params.seed;
    report.best.length = std::numeric_limits<long long>::max();
    report.trace.reserve(static_cast<size_t>(std::min(params.iterations, 65536)));

    std::vector<int> start_pool(static_cast<size_t>(n));
    std::iota(start_pool.begin(), start_pool.end(), 0);
    std::vector<Tour> ants;
    ants.reserve(static_cast<size_t>(m));

    int stall = 0;
    for (int iter = 0; iter < params.iterations; ++iter) {
        ants.clear();
        const Tour* iter_best = nullptr;
        bool improved = false;
        for (int k = 0; k < m; ++k) {
            int start;
            if (m <= n) {
                int j = uniform_int(rng, k, n - 1);
                std::swap(start_pool[static_cast<size_t>(k)], start_pool[static_cast<size_t>(j)]);
                start = start_pool[static_cast<size_t>(k)];
            } else {
                start = uniform_int(rng, 0, n - 1);
            }
            Tour t = construct_classic(store, ctx, rng, start, pseudo_random, acs_local, tau0);
            if (use_ls) t = two_opt(inst, std::move(t), ls_opts);
            ++report.tours_built;
            ants.push_back(std::move(t));
            if (!iter_best || ants.back().length < iter_best->length)
                iter_best = &ants.back();
        }
        if (iter_best->length < report.best.length) {
            report.best = *iter_best;
            improved = true;
        }

        switch (params.engine) {
            case Engine::as:
                as_global_update(store, ants, params.evaporation);
                break;
            case Engine::acs:
                best_tour_update(store, report.best, params.rho_global);
                break;
            case Engine::mmas:
                store.scale_all(1.0 - params.evaporation);
                deposit(store, report.best.order, 1.0 / static_cast<double>(report.best.length));
                if (improved) set_mmas_bounds(store, report.best.length, params.evaporation);
                break;
            case Engine::hacosa:
                break;  // dispatched elsewhere
        }

        report.trace.push_back({iter, report.best.length});
        ++report.iterations_run;
        stall = improved ? 0 : stall + 1;
        if (params.stall_limit > 0 && stall >= params.stall_limit) break;
        if (params.time_limit_s > 0.0) {
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t_start;
            if (elapsed.count() >= params.time_limit_s) break;
        }
    }

    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t_start;
    report.wall_time_s = elapsed.count();
    return report;
}

}  // namespace

RunReport run_engine(const Instance& inst, const SolverParams& params) {
    params.validate();
    if (params.engine == Engine::hacosa) return run_hacosa(inst, params);
    return run_classic(inst, params);
}

}  // namespace antkit
