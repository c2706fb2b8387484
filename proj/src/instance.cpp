#include "antkit/instance.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace antkit {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string upper(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

// Shortest decimal form that parses back to the same double.
std::string format_double(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    assert(ec == std::errc());
    return std::string(buf, end);
}

}  // namespace

std::string_view metric_name(Metric m) {
    switch (m) {
        case Metric::euc2d: return "EUC_2D";
        case Metric::att: return "ATT";
        case Metric::explicit_matrix: return "EXPLICIT";
    }
    return "?";
}

int euc2d_distance(double x1, double y1, double x2, double y2) {
    double dx = x1 - x2, dy = y1 - y2;
    return static_cast<int>(std::sqrt(dx * dx + dy * dy) + 0.5);
}

int att_distance(double x1, double y1, double x2, double y2) {
    double dx = x1 - x2, dy = y1 - y2;
    double r = std::sqrt((dx * dx + dy * dy) / 10.0);
    int t = static_cast<int>(r + 0.5);
    return t < r ? t + 1 : t;
}

Instance Instance::from_coords(std::string name, Metric metric,
                               std::vector<double> xs, std::vector<double> ys) {
    if (metric == Metric::explicit_matrix)
        throw std::invalid_argument("explicit metric requires a weight matrix");
    if (xs.size() != ys.size())
        throw std::invalid_argument("coordinate arrays differ in size");
    if (xs.size() < 2)
        throw std::invalid_argument("instance needs at least 2 cities");
    Instance inst;
    inst.name_ = std::move(name);
    inst.metric_ = metric;
    inst.n_ = static_cast<int>(xs.size());
    inst.xs_ = std::move(xs);
    inst.ys_ = std::move(ys);
    if (inst.n_ <= kMatrixThreshold) inst.build_matrix();
    return inst;
}

Instance Instance::from_matrix(std::string name, int n, std::vector<int> weights) {
    if (n < 2) throw std::invalid_argument("instance needs at least 2 cities");
    if (weights.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
        throw std::invalid_argument("weight matrix size does not match dimension");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int w = weights[static_cast<size_t>(i) * n + j];
            if (w < 0) throw std::invalid_argument("negative edge weight");
            if (i == j && w != 0) throw std::invalid_argument("nonzero diagonal entry");
            if (w != weights[static_cast<size_t>(j) * n + i])
                throw std::invalid_argument("weight matrix is not symmetric");
        }
    }
    Instance inst;
    inst.name_ = std::move(name);
    inst.metric_ = Metric::explicit_matrix;
    inst.n_ = n;
    inst.matrix_ = std::move(weights);
    return inst;
}

int Instance::compute_distance(int i, int j) const {
    size_t a = static_cast<size_t>(i), b = static_cast<size_t>(j);
    switch (metric_) {
        case Metric::euc2d: return euc2d_distance(xs_[a], ys_[a], xs_[b], ys_[b]);
        case Metric::att: return att_distance(xs_[a], ys_[a], xs_[b], ys_[b]);
        case Metric::explicit_matrix: break;
    }
    assert(false && "explicit instances always carry their matrix");
    return 0;
}

void Instance::build_matrix() {
    matrix_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            int d = compute_distance(i, j);
            matrix_[static_cast<size_t>(i) * n_ + j] = d;
            matrix_[static_cast<size_t>(j) * n_ + i] = d;
        }
    }
}

Instance parse_tsplib(std::istream& in) {
    std::string name;
    int n = -1;
    std::string weight_type, weight_format;
    bool type_seen = false;
    std::vector<double> xs, ys;
    std::vector<int> weights;
    bool coords_read = false, weights_read = false;

    int line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = trim(line);
        if (sv.empty()) continue;
        if (upper(sv) == "EOF") break;

        if (auto colon = sv.find(':'); colon != std::string_view::npos) {
            std::string key = upper(trim(sv.substr(0, colon)));
            std::string value{trim(sv.substr(colon + 1))};
            if (key == "NAME") {
                name = value;
            } else if (key == "TYPE") {
                if (upper(value) != "TSP")
                    fail(line_no, "unsupported problem type '" + value + "' (only TSP)");
                type_seen = true;
            } else if (key == "DIMENSION") {
                try {
                    n = std::stoi(value);
                } catch (const std::exception&) {
                    fail(line_no, "bad DIMENSION '" + value + "'");
                }
                if (n < 2) fail(line_no, "DIMENSION must be at least 2");
            } else if (key == "EDGE_WEIGHT_TYPE") {
                weight_type = upper(value);
                if (weight_type != "EUC_2D" && weight_type != "ATT" && weight_type != "EXPLICIT")
                    fail(line_no, "unsupported EDGE_WEIGHT_TYPE '" + value + "'");
            } else if (key == "EDGE_WEIGHT_FORMAT") {
                weight_format = upper(value);
                if (weight_format != "FULL_MATRIX")
                    fail(line_no, "unsupported EDGE_WEIGHT_FORMAT '" + value + "'");
            }
            // other headers (COMMENT, DISPLAY_DATA_TYPE, ...) carry no data
            continue;
        }

        std::string section = upper(sv);
        if (section == "NODE_COORD_SECTION") {
            if (n < 0) fail(line_no, "NODE_COORD_SECTION before DIMENSION");
            xs.assign(static_cast<size_t>(n), 0.0);
            ys.assign(static_cast<size_t>(n), 0.0);
            std::vector<char> seen(static_cast<size_t>(n), 0);
            for (int i = 0; i < n; ++i) {
                int label;
                double x, y;
                if (!(in >> label >> x >> y))
                    fail(line_no, "expected " + std::to_string(n) +
                                      " coordinate rows, got " + std::to_string(i));
                if (label < 1 || label > n)
                    fail(line_no, "coordinate label " + std::to_string(label) +
                                      " outside 1.." + std::to_string(n));
                if (seen[static_cast<size_t>(label - 1)])
                    fail(line_no, "duplicate coordinate label " + std::to_string(label));
                seen[static_cast<size_t>(label - 1)] = 1;
                xs[static_cast<size_t>(label - 1)] = x;
                ys[static_cast<size_t>(label - 1)] = y;
            }
            std::getline(in, line);  // rest of the final coordinate row
            ++line_no;
            coords_read = true;
        } else if (section == "EDGE_WEIGHT_SECTION") {
            if (n < 0) fail(line_no, "EDGE_WEIGHT_SECTION before DIMENSION");
            size_t total = static_cast<size_t>(n) * static_cast<size_t>(n);
            weights.resize(total);
            for (size_t i = 0; i < total; ++i) {
                if (!(in >> weights[i]))
                    fail(line_no, "expected " + std::to_string(total) +
                                      " matrix entries, got " + std::to_string(i));
            }
            std::getline(in, line);
            ++line_no;
            weights_read = true;
        } else {
            fail(line_no, "unrecognized line '" + std::string(sv) + "'");
        }
    }

    if (!type_seen) throw ParseError("missing TYPE : TSP header");
    if (n < 0) throw ParseError("missing DIMENSION header");
    if (weight_type.empty()) throw ParseError("missing EDGE_WEIGHT_TYPE header");
    if (name.empty()) name = "unnamed";

    try {
        if (weight_type == "EXPLICIT") {
            if (!weights_read) throw ParseError("EXPLICIT instance without EDGE_WEIGHT_SECTION");
            return Instance::from_matrix(name, n, std::move(weights));
        }
        if (!coords_read) throw ParseError(weight_type + " instance without NODE_COORD_SECTION");
        Metric metric = weight_type == "ATT" ? Metric::att : Metric::euc2d;
        return Instance::from_coords(name, metric, std::move(xs), std::move(ys));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Instance parse_tsplib_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_tsplib(in);
}

Instance parse_tsplib_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return parse_tsplib(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string to_tsplib(const Instance& inst) {
    std::string out;
    out += "NAME : " + inst.name() + "\n";
    out += "TYPE : TSP\n";
    out += "DIMENSION : " + std::to_string(inst.n()) + "\n";
    out += "EDGE_WEIGHT_TYPE : ";
    out += metric_name(inst.metric());
    out += "\n";
    if (inst.metric() == Metric::explicit_matrix) {
        out += "EDGE_WEIGHT_FORMAT : FULL_MATRIX\n";
        out += "EDGE_WEIGHT_SECTION\n";
        for (int i = 0; i < inst.n(); ++i) {
            for (int j = 0; j < inst.n(); ++j) {
                if (j) out += ' ';
                out += std::to_string(inst.distance(i, j));
            }
            out += '\n';
        }
    } else {
        out += "NODE_COORD_SECTION\n";
        for (int i = 0; i < inst.n(); ++i) {
            out += std::to_string(i + 1) + " " + format_double(inst.x(i)) + " " +
                   format_double(inst.y(i)) + "\n";
        }
    }
    out += "EOF\n";
    return out;
}

Instance demo8_instance() {
    // Symmetric 8-city fixture; optimum and several tour lengths are frozen
    // in the tests.
    const std::vector<int> w = {
        0,  12, 19, 31, 22, 17, 23, 12,  //
        12, 0,  15, 37, 21, 28, 35, 22,  //
        19, 15, 0,  50, 36, 35, 35, 21,  //
        31, 37, 50, 0,  20, 21, 37, 38,  //
        22, 21, 36, 20, 0,  25, 40, 33,  //
        17, 28, 35, 21, 25, 0,  16, 18,  //
        23, 35, 35, 37, 40, 16, 0,  14,  //
        12, 22, 21, 38, 33, 18, 14, 0,
    };
    return Instance::from_matrix("demo8", 8, w);
}

NeighborLists nearest_neighbor_lists(const Instance& inst, int k) {
    int n = inst.n();
    int k_eff = std::min(k, n - 1);
    if (k_eff < 0) k_eff = 0;
    NeighborLists lists(static_cast<size_t>(n));
    std::vector<int> others;
    others.reserve(static_cast<size_t>(n) - 1);
    for (int c = 0; c < n; ++c) {
        others.clear();
        for (int j = 0; j < n; ++j)
            if (j != c) others.push_back(j);
        std::partial_sort(others.begin(), others.begin() + k_eff, others.end(),
                          [&](int a, int b) {
                              int da = inst.distance(c, a), db = inst.distance(c, b);
                              return da != db ? da < db : a < b;
                          });
        lists[static_cast<size_t>(c)].assign(others.begin(), others.begin() + k_eff);
    }
    return lists;
}

}  // namespace antkit
