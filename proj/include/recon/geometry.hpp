#pragma once

#include <cstdint>
#include <vector>

namespace recon {

// A point of R^N, N >= 2. Coordinates must be finite.
using Point = std::vector<double>;

// Finite ordered point set; vertex ids are positions in `points`.
struct PointCloud {
    std::vector<Point> points;
    int dim = 0;

    int size() const { return static_cast<int>(points.size()); }
    const Point& operator[](int i) const { return points[i]; }
};

// Validates non-emptiness, consistent dimension and finiteness.
PointCloud make_cloud(std::vector<Point> pts);

double euclidean_distance(const Point& a, const Point& b);
double squared_distance(const Point& a, const Point& b);

// Symmetric Hausdorff distance between finite sets (brute force).
double hausdorff_distance(const PointCloud& a, const PointCloud& b);

struct Ball {
    Point center;
    double radius = 0.0;

    bool contains(const Point& p, double slack = 0.0) const;
};

// Smallest ball containing all of `pts` (Welzl, arbitrary dimension).
Ball minimal_enclosing_ball(const std::vector<Point>& pts);

// Index of the point of `s` closest to `x`; ties broken by smallest index.
int nearest_sample_point(const PointCloud& s, const Point& x);

// Bounded displacement noise: direction uniform, radius uniform in
// [0, magnitude], so every displacement has norm <= magnitude.
struct NoiseModel {
    double magnitude = 0.0;
    std::uint64_t seed = 0;
};

}  // namespace recon
