#ifndef TRG_DENSITY_HPP
#define TRG_DENSITY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace trg {

// Number of two-edge stars in S: sum over vertices of C(deg, 2).
std::uint64_t x2_count(const EdgeSubset& s);

// Pairs of K_n completed to a triangle by some wedge of S.
EdgeSubset pi_set(const EdgeSubset& s);

// A wedge of K_n, apex x over the pair {u1, u2}, u1 < u2.
struct Wedge {
    int apex;
    int u1;
    int u2;

    friend bool operator==(const Wedge& a, const Wedge& b) {
        return a.apex == b.apex && a.u1 == b.u1 && a.u2 == b.u2;
    }
    friend bool operator<(const Wedge& a, const Wedge& b) {
        if (a.apex != b.apex) return a.apex < b.apex;
        if (a.u1 != b.u1) return a.u1 < b.u1;
        return a.u2 < b.u2;
    }
};

// All wedges of K_n forming a 4-cycle with some wedge of S: apex x over a
// pair of Pi(S), with x distinct from the pair and from at least one
// witnessing apex.  Wedges touching `exclude` edges are dropped.
std::vector<Wedge> xs_family(const EdgeSubset& s,
                             const std::optional<EdgeSubset>& exclude = std::nullopt,
                             std::size_t cap = 0);

struct DensityReport {
    std::uint64_t x2 = 0;
    std::uint64_t pi_size = 0;
    std::uint64_t xs_size = 0;
    double mu = 0;           // |X_S| p^2
    double delta1 = 0;       // ordered overlapping pairs with 3-path union, times p^3
    double delta2 = 0;       // ordered overlapping pairs with K_{1,3} union, times p^3
    double delta_total = 0;  // delta1 + delta2 + mu
    std::uint64_t pair_path_count = 0;     // ordered
    std::uint64_t pair_star_count = 0;     // ordered
    std::uint64_t pair_triangle_count = 0; // ordered pairs whose union is a triangle
    int n = 0;
    double p = 0;
};

// Janson-style first/second moment parameters of the wedge family X_S under
// edge probability p; exact pair counts by union shape.  Families larger than
// `family_cap` wedges are refused.
DensityReport janson_params(const EdgeSubset& s, double p, std::size_t family_cap = 1u << 20);

// Iteratively removes the max-degree vertex (ties by least label) while the
// degree bound c n p / (log(n^2 p) - log e(T)) fails; gives up after n/2
// removals.
std::optional<EdgeSubset> peel_bounded_degree(const EdgeSubset& t, double p, double c);

// The completion threshold evaluator.
enum class ThresholdFlag { upper, lower, critical_window, zero, below_range };

struct ThresholdReport {
    ThresholdFlag flag;
    std::optional<double> value;
    double upper_value; // n^-6 p^-8
    double lower_value; // n^-3 p^-7/2
};

struct ThresholdOptions {
    double critical_window_factor = 2.0; // p within [n^-3/5 / f, f n^-3/5]
    double zero_constant = 1.0;          // zero for p >= C n^-1/2
};

ThresholdReport completion_threshold(double n, double p, const ThresholdOptions& opts = {});

} // namespace trg

#endif
