#pragma once

#include "recon/complex.hpp"
#include "recon/homology.hpp"
#include "recon/reconstruct.hpp"
#include "recon/shapes.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace recon {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 17 significant digits (round-trip exact); integral values keep a
// trailing ".0"; infinities render as "inf"/"-inf".
std::string format_double(double v);

PointCloud read_cloud_csv(std::istream& is);
PointCloud read_cloud_csv_file(const std::string& path);
void write_cloud_csv(const PointCloud& cloud, std::ostream& os);
void write_cloud_csv_file(const PointCloud& cloud, const std::string& path);

void write_complex_json(const SimplicialComplex& k, std::ostream& os);
void write_complex_json_file(const SimplicialComplex& k, const std::string& path);
SimplicialComplex read_complex_json_file(const std::string& path);

void write_filtration_json(const Filtration& f, std::ostream& os);

void write_metric_csv(const MetricMatrix& m, std::ostream& os);
void write_metric_csv_file(const MetricMatrix& m, const std::string& path);

// One interval per line: "dim birth death", death "inf" for essential
// classes, sorted by (dim, birth, death).
void write_diagram_text(const PersistenceDiagram& d, std::ostream& os);
std::string diagram_json(const PersistenceDiagram& d);

void write_shadow_json(const ShadowComplex& s, std::ostream& os);
void write_shadow_json_file(const ShadowComplex& s, const std::string& path);
ShadowComplex read_shadow_json_file(const std::string& path);

// Shape config: {"kind": ..., parameters..., "delta", "rho", "b"}. Known
// kinds fill delta/rho/b from the registry; explicit fields override.
ShapeSpec read_shape_spec_json_file(const std::string& path);

}  // namespace recon
