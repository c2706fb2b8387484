#include "antkit/smart_ant.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>

#include "antkit/local_search.hpp"

namespace antkit {

PcDistribution pc_probabilities(const PheromoneStore& store, const Instance& inst,
                                const ParentPair& pair, int r,
                                std::span<const std::uint8_t> visited,
                                double alpha, double beta) {
    PcDistribution out;
    out.candidates = candidate_set(pair, r, visited);
    double total = 0.0;
    for (int i = 0; i < out.candidates.count; ++i) {
        int s = out.candidates.city[static_cast<size_t>(i)];
        double w = std::pow(store.get(r, s), alpha) * std::pow(inst.eta(r, s), beta);
        out.probability[static_cast<size_t>(i)] = w;
        total += w;
    }
    for (int i = 0; i < out.candidates.count; ++i)
        out.probability[static_cast<size_t>(i)] /= total;
    return out;
}

namespace {

int nearest_unvisited(const Instance& inst, const AntState& ant, int cur) {
    const int n = inst.n();
    int best = -1, best_d = std::numeric_limits<int>::max();
    for (int c = 0; c < n; ++c) {
        if (ant.visited[static_cast<size_t>(c)]) continue;
        int d = inst.distance(cur, c);
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    return best;
}

}  // namespace

int smart_select_next(const PheromoneStore& store, const SearchContext& ctx,
                      const SmartAnt& smart, Rng& rng) {
    const int cur = smart.ant.current();
    const CandidateSet cand = candidate_set(*smart.pair, cur, smart.ant.visited);
    if (cand.count == 0) return nearest_unvisited(ctx.inst(), smart.ant, cur);

    double q = uniform_unit(rng);
    if (q <= ctx.params().q0) {
        int best = cand.city[0];
        double best_w = ctx.edge_weight(store, cur, best);
        for (int i = 1; i < cand.count; ++i) {
            int c = cand.city[static_cast<size_t>(i)];
            double w = ctx.edge_weight(store, cur, c);
            if (w > best_w) {
                best_w = w;
                best = c;
            }
        }
        return best;
    }

    double weights[4];
    double total = 0.0;
    for (int i = 0; i < cand.count; ++i) {
        weights[i] = ctx.edge_weight(store, cur, cand.city[static_cast<size_t>(i)]);
        total += weights[i];
    }
    double u = uniform_unit(rng) * total;
    double acc = 0.0;
    for (int i = 0; i < cand.count; ++i) {
        acc += weights[i];
        if (u < acc) return cand.city[static_cast<size_t>(i)];
    }
    return cand.city[static_cast<size_t>(cand.count - 1)];
}

Tour construct_child(PheromoneStore& store, const SearchContext& ctx,
                     SmartAnt& smart, Rng& rng, int start) {
    const Instance& inst = ctx.inst();
    const int n = inst.n();
    if (start < 0) start = uniform_int(rng, 0, n - 1);

    smart.ant.reset();
    smart.ant.visit(start);
    long long length = 0;
    const double rho = ctx.params().rho_local;
    for (int step = 1; step < n; ++step) {
        int cur = smart.ant.current();
        int next = smart_select_next(store, ctx, smart, rng);
        length += inst.distance(cur, next);
        local_update(store, cur, next, rho, store.tau0());
        smart.ant.visit(next);
    }
    int last = smart.ant.order.back(), first = smart.ant.order.front();
    length += inst.distance(last, first);
    local_update(store, last, first, rho, store.tau0());

    Tour child;
    child.order = smart.ant.order;
    child.length = length;
    return child;
}

RunReport run_hacosa(const Instance& inst, const SolverParams& params) {
    params.validate();
    const auto t_start = std::chrono::steady_clock::now();
    const int n = inst.n();
    Rng rng(params.seed);
    SearchContext ctx(inst, params);
    PheromoneStore store(n, resolve_tau0(inst, params));
    const bool use_ls = params.local_search.value_or(true);
    const TwoOptOptions ls_opts{&ctx.neighbors(), 0};

    Population pop = Population::initialize(inst, params.population, rng, &ctx.neighbors());

    RunReport report;
    report.engine = std::string(engine_name(Engine::hacosa));
    report.instance = inst.name();
    report.seed = params.seed;
    report.tours_built = pop.size();
    report.best = pop.best();
    report.trace.reserve(static_cast<size_t>(std::min(params.iterations, 65536)));

    int stall = 0;
    for (int gen = 0; gen < params.iterations; ++gen) {
        bool improved = false;
        std::vector<ParentPair> pairs = assign_parents(pop, params.ants, rng);
        for (ParentPair& pair : pairs) {
            SmartAnt smart(n, pair);
            Tour child = construct_child(store, ctx, smart, rng);
            if (use_ls) child = two_opt(inst, std::move(child), ls_opts);
            ++report.tours_built;

            if (child.length < report.best.length) {
                report.best = child;
                improved = true;
            }
            if (params.strict_tau0_global) {
                // text-literal variant: reinforce toward tau0 instead of 1/length
                const auto& o = report.best.order;
                for (size_t i = 0; i < o.size(); ++i)
                    local_update(store, o[i], o[(i + 1) % o.size()],
                                 params.rho_global, store.tau0());
            } else {
                best_tour_update(store, report.best, params.rho_global);
            }

            if (!pop.contains_equivalent(child))
                steady_state_replace(pop, std::move(child), pair);
        }

        report.trace.push_back({gen, report.best.length});
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

}  // namespace antkit
