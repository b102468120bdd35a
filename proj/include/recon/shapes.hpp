#pragma once

#include "recon/geometry.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace recon {

enum class ShapeKind { circle, lemniscate, lissajous, embedded_graph };

// Straight-line embedded graph in R^2.
struct GraphShape {
    std::vector<Point> vertices;
    std::vector<std::array<int, 2>> edges;
};

// Ground-truth shape together with its sampling parameters. `distortion`
// is an upper bound for delta and `convexity_radius` a lower bound for
// rho; they are inputs to the reconstruction theorems, never estimated
// from a sample. For cyclic shapes `shortest_cycle` holds the length b of
// the shortest simple cycle and convexity_radius == b/4.
struct ShapeSpec {
    ShapeKind kind = ShapeKind::circle;

    double radius = 1.0;  // circle
    double scale = 1.0;   // lemniscate / lissajous
    int freq_x = 3;       // lissajous
    int freq_y = 2;
    double phase = 0.0;

    GraphShape graph;  // embedded_graph

    double distortion = 1.0;
    double convexity_radius = 0.0;
    std::optional<double> shortest_cycle;
};

// Built-in shape registry. Distortion values for the curve shapes are
// numerically derived upper bounds (see estimate_distortion); for the
// polygonal shapes they are exact.
ShapeSpec circle_spec(double radius = 1.0);
ShapeSpec lemniscate_spec(double scale = 1.0);
ShapeSpec lissajous_spec(double scale = 1.0);  // 3:2 frequencies, fixed phase
ShapeSpec lissajous_spec(double scale, int freq_x, int freq_y, double phase,
                         double distortion);  // custom curve, delta supplied
ShapeSpec square_spec();
ShapeSpec figure_eight_spec();
ShapeSpec theta_spec();
// User graph; b and rho are derived from the graph, delta must be given.
ShapeSpec graph_spec(GraphShape g, double distortion);

// Arc-length parameterization. Positions live in [0, total length); for
// graphs they run along the edges in declaration order.
double shape_total_length(const ShapeSpec& spec);
Point shape_point_at(const ShapeSpec& spec, double s);

// Length metric d_L, either between arc positions or between points that
// lie on the shape (within tolerance 1e-9; off-shape points are an error).
double geodesic_distance_at(const ShapeSpec& spec, double s, double t);
double geodesic_distance(const ShapeSpec& spec, const Point& x, const Point& y);

// Arc positions of on-shape points; throws for off-shape points.
std::vector<double> shape_positions(const ShapeSpec& spec, const PointCloud& cloud);

struct SampleResult {
    PointCloud cloud;
    double dh_bound = 0.0;  // certified d_H(shape, cloud) <= spacing/2 + noise
};

// Arc-length uniform sample with bounded noise; deterministic in the seed.
SampleResult sample_shape(const ShapeSpec& spec, int count, const NoiseModel& noise = {});

enum class TheoremKind { rips, cech, graph };

// Result of checking one of the sampling precondition chains
// lhs < mid < rhs (all strict).
struct ConditionReport {
    bool pass = false;
    double lhs = 0.0, mid = 0.0, rhs = 0.0;
    std::string lhs_name, mid_name, rhs_name;
    std::string failure;  // failing link as text, empty when pass

    std::string chain() const;
};

ConditionReport verify_sampling_condition(const ShapeSpec& spec, double dh_bound,
                                          double eps, TheoremKind theorem);
ConditionReport verify_sampling_condition(double delta, double rho,
                                          std::optional<double> shortest_cycle,
                                          double dh_bound, double eps,
                                          TheoremKind theorem);

// Diagnostic: lower bound for the distortion of the shape, maximizing
// d_L/||.|| over sampled position pairs with local refinement.
double estimate_distortion(const ShapeSpec& spec, int positions, std::uint64_t seed);

// Betti numbers of the shape itself via the crossing-induced graph
// (curves) or the Euler characteristic (embedded graphs).
int shape_beta1(const ShapeSpec& spec);

// Number of transverse self-crossings of a curve shape. Errors on
// embedded_graph specs.
int curve_crossings(const ShapeSpec& spec);

// Measured Hausdorff distance between the cloud and a dense noiseless
// reference sample of the shape (`ref_count` points).
double hausdorff_to_shape(const ShapeSpec& spec, const PointCloud& cloud, int ref_count);

}  // namespace recon
