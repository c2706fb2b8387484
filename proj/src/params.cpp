#include "antkit/params.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace antkit {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
    throw std::invalid_argument("bad value '" + std::string(value) + "' for parameter '" +
                                std::string(key) + "'");
}

double parse_double(std::string_view key, std::string_view value) {
    double out = 0.0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || p != value.data() + value.size()) bad_value(key, value);
    return out;
}

long long parse_int(std::string_view key, std::string_view value) {
    long long out = 0;
    auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || p != value.data() + value.size()) bad_value(key, value);
    return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
    std::string v = lower(value);
    if (v == "1" || v == "true" || v == "on" || v == "yes") return true;
    if (v == "0" || v == "false" || v == "off" || v == "no") return false;
    bad_value(key, value);
}

void check_unit(const char* what, double v, bool allow_zero, bool allow_one) {
    bool lo_ok = allow_zero ? v >= 0.0 : v > 0.0;
    bool hi_ok = allow_one ? v <= 1.0 : v < 1.0;
    if (!lo_ok || !hi_ok)
        throw std::invalid_argument(std::string(what) + " out of range: " + std::to_string(v));
}

}  // namespace

std::string_view engine_name(Engine e) {
    switch (e) {
        case Engine::as: return "AS";
        case Engine::acs: return "ACS";
        case Engine::mmas: return "MMAS";
        case Engine::hacosa: return "HACO-SA";
    }
    return "?";
}

std::optional<Engine> parse_engine(std::string_view name) {
    std::string v = lower(name);
    if (v == "as") return Engine::as;
    if (v == "acs") return Engine::acs;
    if (v == "mmas") return Engine::mmas;
    if (v == "haco-sa" || v == "haco_sa" || v == "hacosa") return Engine::hacosa;
    return std::nullopt;
}

void SolverParams::validate() const {
    if (alpha < 0.0 || beta < 0.0)
        throw std::invalid_argument("alpha and beta must be non-negative");
    check_unit("q0", q0, true, true);
    check_unit("rho_local", rho_local, false, false);
    check_unit("rho_global", rho_global, false, false);
    check_unit("evaporation", evaporation, false, false);
    if (ants < 1) throw std::invalid_argument("ants must be at least 1");
    if (iterations < 1) throw std::invalid_argument("iterations must be at least 1");
    if (population < 2) throw std::invalid_argument("population must be at least 2");
    if (neighbor_k < 1) throw std::invalid_argument("neighbor_k must be at least 1");
    if (stall_limit < 0) throw std::invalid_argument("stall_limit must be non-negative");
    if (time_limit_s < 0.0) throw std::invalid_argument("time_limit_s must be non-negative");
}

SolverParams default_params(Engine e) {
    SolverParams p;
    p.engine = e;
    switch (e) {
        case Engine::as:
            p.evaporation = 0.5;
            break;
        case Engine::acs:
            break;
        case Engine::mmas:
            p.evaporation = 0.02;
            break;
        case Engine::hacosa:
            p.ants = 10;
            p.stall_limit = 200;
            break;
    }
    return p;
}

void apply_param(SolverParams& params, std::string_view key, std::string_view value) {
    std::string k = lower(key);
    if (k == "alpha") params.alpha = parse_double(k, value);
    else if (k == "beta") params.beta = parse_double(k, value);
    else if (k == "q0") params.q0 = parse_double(k, value);
    else if (k == "rho_local") params.rho_local = parse_double(k, value);
    else if (k == "rho_global") params.rho_global = parse_double(k, value);
    else if (k == "evaporation") params.evaporation = parse_double(k, value);
    else if (k == "tau0") params.tau0 = parse_double(k, value);
    else if (k == "ants") params.ants = static_cast<int>(parse_int(k, value));
    else if (k == "iterations") params.iterations = static_cast<int>(parse_int(k, value));
    else if (k == "population") params.population = static_cast<int>(parse_int(k, value));
    else if (k == "neighbor_k") params.neighbor_k = static_cast<int>(parse_int(k, value));
    else if (k == "stall_limit") params.stall_limit = static_cast<int>(parse_int(k, value));
    else if (k == "candidate_lists") params.use_candidate_lists = parse_bool(k, value);
    else if (k == "local_search") params.local_search = parse_bool(k, value);
    else if (k == "strict_tau0_global") params.strict_tau0_global = parse_bool(k, value);
    else if (k == "time_limit_s") params.time_limit_s = parse_double(k, value);
    else if (k == "seed") params.seed = static_cast<std::uint64_t>(parse_int(k, value));
    else
        throw std::invalid_argument("unknown parameter '" + std::string(key) + "'");
}

}  // namespace antkit
