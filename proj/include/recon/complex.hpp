#pragma once

#include "recon/geometry.hpp"
#include "recon/shapes.hpp"

#include <vector>

namespace recon {

// Vertex ids, strictly increasing.
using Simplex = std::vector<int>;

// Global simplex order: dimension first, then lexicographic ids.
bool simplex_less(const Simplex& a, const Simplex& b);

struct SimplicialComplex {
    int dim_cap = 2;
    std::vector<Simplex> simplices;  // sorted by simplex_less, unique

    bool contains(const Simplex& s) const;
    int count_dim(int k) const;
};

// Symmetric pairwise distance matrix; +inf marks unreachable pairs.
// Zero diagonal is implicit.
class MetricMatrix {
public:
    MetricMatrix() = default;
    explicit MetricMatrix(int n, double fill = 0.0);
    static MetricMatrix from_cloud(const PointCloud& cloud);

    double operator()(int i, int j) const;
    void set(int i, int j, double v);
    int size() const { return n_; }

private:
    int n_ = 0;
    std::vector<double> d_;  // strict lower triangle, row-major
};

struct FiltEntry {
    Simplex simplex;
    double value = 0.0;
};

// Entries sorted by (value, dimension, lexicographic vertex ids), so every
// face precedes its cofaces.
struct Filtration {
    int dim_cap = 2;
    double alpha_max = 0.0;
    std::vector<FiltEntry> entries;
};

// Vietoris-Rips: a simplex enters when its diameter is <= alpha (closed
// condition). Cech: when the minimal enclosing ball radius is < alpha
// (open balls). These conventions are frozen project-wide.
SimplicialComplex rips_complex(const MetricMatrix& metric, double alpha, int dim_cap);
Filtration rips_filtration(const MetricMatrix& metric, double alpha_max, int dim_cap);
SimplicialComplex cech_complex(const PointCloud& cloud, double alpha, int dim_cap);
Filtration cech_filtration(const PointCloud& cloud, double alpha_max, int dim_cap);

// Pairwise d_L matrix of on-shape points.
MetricMatrix geodesic_metric(const ShapeSpec& spec, const PointCloud& cloud);

// Rips complex of on-shape points under the length metric.
SimplicialComplex intrinsic_rips_on_shape(const ShapeSpec& spec, const PointCloud& cloud,
                                          double alpha, int dim_cap);

// Finite-nerve Cech complex under d_L: a simplex needs a witness on the
// shape with d_L < alpha to every vertex. Witnesses are a dense arc-length
// grid plus the sample itself, so the result is a (close) subcomplex of
// the true intrinsic Cech complex.
SimplicialComplex intrinsic_cech_on_shape(const ShapeSpec& spec, const PointCloud& cloud,
                                          double alpha, int dim_cap,
                                          int witness_count = 1024);

bool is_subcomplex(const SimplicialComplex& k, const SimplicialComplex& l);

}  // namespace recon
