#pragma once

#include "recon/intrinsic.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace recon {

// Output region of the graph reconstruction: the union of convex hulls of
// the listed cells. Every listed segment and every triangle edge satisfies
// d_eps < 5*delta*eps.
struct ShadowComplex {
    PointCloud points;
    std::vector<std::array<int, 2>> segments;
    std::vector<std::array<int, 3>> triangles;
    double eps = 0.0;
    double delta = 1.0;

    double threshold() const { return 5.0 * delta * eps; }
};

// Builds G_eps and d_eps on a planar sample, then emits every vertex,
// every pair with d_eps < 5*delta*eps, and every triple whose three
// pairwise d_eps are below the threshold.
ShadowComplex reconstruct_graph(const PointCloud& s, double eps, double delta);

// (beta0, beta1) of the 2-skeleton of the d_eps Rips complex at 5*delta*eps.
std::pair<int, int> shadow_betti(const PointCloud& s, double eps, double delta);

// Hausdorff distance between a resolution-dense sampling of the shadow
// region and one of the shape; the estimate is within `resolution` of the
// true distance.
double shadow_hausdorff(const ShadowComplex& shadow, const ShapeSpec& spec,
                        double resolution);

// Deterministic SVG rendering: triangles filled, segments stroked, sample
// points dotted, ground truth (if given) overlaid.
void export_svg(const ShadowComplex& shadow, const ShapeSpec* truth, std::ostream& os);
void export_svg_file(const ShadowComplex& shadow, const ShapeSpec* truth,
                     const std::string& path);

struct ReconstructionReport {
    int beta0 = 0;
    int beta1 = 0;
    int components = 0;
    double eps = 0.0;
    double delta = 1.0;
    double threshold = 0.0;
    double hausdorff_bound = 0.0;              // (5*delta + 1/3) * eps
    std::optional<double> hausdorff_estimate;  // measured when a spec is given
    std::optional<bool> hausdorff_ok;
};

ReconstructionReport reconstruct_report(const PointCloud& s, double eps, double delta,
                                        const ShapeSpec* spec, double resolution);

}  // namespace recon
