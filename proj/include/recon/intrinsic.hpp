#pragma once

#include "recon/complex.hpp"
#include "recon/shapes.hpp"

#include <array>
#include <cstdint>

namespace recon {

// One-skeleton of the Rips complex at scale eps, as a weighted graph.
struct EpsGraph {
    int n = 0;
    double eps = 0.0;
    std::vector<std::array<int, 2>> edges;  // i < j, Euclidean length <= eps
    std::vector<double> weights;
    std::vector<std::vector<std::pair<int, double>>> adj;
};

EpsGraph build_eps_graph(const PointCloud& s, double eps);

// Matrix of d_eps values; +inf marks pairs in different components.
using IntrinsicMetric = MetricMatrix;

// Shortest-path metric d_eps (per-source Dijkstra); +inf across components.
IntrinsicMetric compute_d_eps(const EpsGraph& g);

int component_count(const EpsGraph& g);

// Rips complex over the d_eps metric; +inf pairs never share a simplex.
SimplicialComplex intrinsic_rips(const PointCloud& s, const IntrinsicMetric& d_eps,
                                 double alpha, int dim_cap);

struct PathCoveringReport {
    int trials = 0;
    double dh_estimate = 0.0;   // measured against a dense reference sample
    double worst_ratio = 0.0;   // max d_eps/d_L over trials with d_L >= eps
    int violations = 0;         // d_eps >= 3 d_L + 2 eps/3 (never expected)
    int flagged = 0;            // ratio above 2.99, kept for inspection
    double max_hop = 0.0;       // longest hop on any shortest path used
    bool hops_below_eps = true; // every hop strictly below eps
};

// Samples `trials` random on-shape pairs (x, y) and checks
// d_eps(nearest(x), nearest(y)) < 3 d_L(x, y) + slack with hop lengths
// below eps. Requires d_H(shape, S) < eps/3, certified against a dense
// reference sample; throws when that precondition fails.
PathCoveringReport path_covering_check(const ShapeSpec& spec, const PointCloud& s,
                                       double eps, int trials, std::uint64_t seed);

}  // namespace recon
