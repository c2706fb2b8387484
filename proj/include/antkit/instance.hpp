#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace antkit {

/// Supported TSPLIB edge-weight functions.
enum class Metric {
    euc2d,            ///< EUC_2D: nint(sqrt(dx^2 + dy^2)), half-up rounding
    att,              ///< ATT pseudo-Euclidean (ceiling-biased tenth-scale)
    explicit_matrix,  ///< EXPLICIT with FULL_MATRIX edge weights
};

std::string_view metric_name(Metric m);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// nint(sqrt(dx^2+dy^2)) with nint(x) = floor(x + 0.5).
int euc2d_distance(double x1, double y1, double x2, double y2);

/// Pseudo-Euclidean: r = sqrt((dx^2+dy^2)/10), t = nint(r),
/// d = t < r ? t + 1 : t.
int att_distance(double x1, double y1, double x2, double y2);

/// A symmetric TSP instance. Cities are indexed 0..n-1 internally; the
/// 1-based TSPLIB labels are index+1 and only appear in parsing and
/// serialization.
///
/// Distances are exact integers as defined by the metric. For instances up
/// to `kMatrixThreshold` cities the full matrix is precomputed; beyond that
/// coordinate metrics are evaluated on demand.
class Instance {
public:
    static constexpr int kMatrixThreshold = 4096;

    static Instance from_coords(std::string name, Metric metric,
                                std::vector<double> xs, std::vector<double> ys);

    /// `weights` is row-major n*n; must be symmetric with a zero diagonal
    /// and no negative entries.
    static Instance from_matrix(std::string name, int n, std::vector<int> weights);

    const std::string& name() const { return name_; }
    Metric metric() const { return metric_; }
    int n() const { return n_; }

    bool has_coords() const { return !xs_.empty(); }
    double x(int i) const { return xs_[static_cast<size_t>(i)]; }
    double y(int i) const { return ys_[static_cast<size_t>(i)]; }

    int distance(int i, int j) const {
        if (!matrix_.empty())
            return matrix_[static_cast<size_t>(i) * static_cast<size_t>(n_) +
                           static_cast<size_t>(j)];
        return compute_distance(i, j);
    }

    /// Heuristic desirability 1 / max(d, 1); guarded so duplicate points
    /// cannot produce a division by zero.
    double eta(int i, int j) const {
        int d = distance(i, j);
        return 1.0 / static_cast<double>(d < 1 ? 1 : d);
    }

private:
    Instance() = default;
    int compute_distance(int i, int j) const;
    void build_matrix();

    std::string name_;
    Metric metric_ = Metric::euc2d;
    int n_ = 0;
    std::vector<double> xs_, ys_;
    std::vector<int> matrix_;
};

/// Parses a TSPLIB file. Accepted: TYPE TSP, EDGE_WEIGHT_TYPE EUC_2D or ATT
/// with NODE_COORD_SECTION, or EDGE_WEIGHT_TYPE EXPLICIT with
/// EDGE_WEIGHT_FORMAT FULL_MATRIX. Header keys may or may not have spaces
/// around the colon; coordinates may use scientific notation; an EOF line is
/// optional. Anything else raises ParseError with the offending line.
Instance parse_tsplib(std::istream& in);
Instance parse_tsplib_text(std::string_view text);
Instance parse_tsplib_file(const std::string& path);

/// Serializes an instance as a TSPLIB file that parses back to an identical
/// instance (coordinates round-trip exactly).
std::string to_tsplib(const Instance& inst);

/// The 8-city explicit-matrix fixture used by the small-scale tests and the
/// "demo8" magic name on the command line.
Instance demo8_instance();

/// lists[c] holds the k nearest cities to c (excluding c), sorted by
/// distance with index as tie-break. k is clamped to n-1.
using NeighborLists = std::vector<std::vector<int>>;
NeighborLists nearest_neighbor_lists(const Instance& inst, int k);

}  // namespace antkit
