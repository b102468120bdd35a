#include "recon/reconstruct.hpp"

#include "recon/homology.hpp"
#include "recon/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace recon {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Cells of the strict d_eps < threshold graph, via upper neighbor lists.
void collect_cells(const MetricMatrix& m, double threshold, ShadowComplex& shadow) {
    const int n = m.size();
    std::vector<std::vector<int>> nbr(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m(i, j) < threshold) {
                nbr[i].push_back(j);
                shadow.segments.push_back({i, j});
            }
    for (int i = 0; i < n; ++i)
        for (std::size_t a = 0; a < nbr[i].size(); ++a)
            for (std::size_t b = a + 1; b < nbr[i].size(); ++b) {
                const int j = nbr[i][a], k = nbr[i][b];
                if (m(j, k) < threshold) shadow.triangles.push_back({i, j, k});
            }
}

struct Pt2 {
    double x = 0.0, y = 0.0;
};

// Lattice point sampling of the shadow region on a cell grid finer than
// half the resolution: cell centers inside triangles (scanline), plus
// walked segments and the vertices, deduplicated by an occupancy bitmap.
std::vector<Pt2> sample_shadow_region(const ShadowComplex& shadow, double resolution) {
    const double cell = resolution / (2.0 * std::sqrt(2.0));
    const auto& pts = shadow.points.points;
    double min_x = kInf, min_y = kInf, max_x = -kInf, max_y = -kInf;
    for (const Point& p : pts) {
        min_x = std::min(min_x, p[0]);
        max_x = std::max(max_x, p[0]);
        min_y = std::min(min_y, p[1]);
        max_y = std::max(max_y, p[1]);
    }
    const int nx = static_cast<int>((max_x - min_x) / cell) + 2;
    const int ny = static_cast<int>((max_y - min_y) / cell) + 2;
    std::vector<std::uint8_t> mark(static_cast<std::size_t>(nx) * ny, 0);
    auto mark_at = [&](double x, double y) {
        const int cx = std::clamp(static_cast<int>((x - min_x) / cell), 0, nx - 1);
        const int cy = std::clamp(static_cast<int>((y - min_y) / cell), 0, ny - 1);
        mark[static_cast<std::size_t>(cy) * nx + cx] = 1;
    };

    for (const Point& p : pts) mark_at(p[0], p[1]);
    for (const auto& [i, j] : shadow.segments) {
        const double len = euclidean_distance(pts[i], pts[j]);
        const int steps = std::max(1, static_cast<int>(std::ceil(len / cell)));
        for (int k = 0; k <= steps; ++k) {
            const double t = static_cast<double>(k) / steps;
            mark_at(pts[i][0] + t * (pts[j][0] - pts[i][0]),
                    pts[i][1] + t * (pts[j][1] - pts[i][1]));
        }
    }
    for (const auto& [i, j, k] : shadow.triangles) {
        const Point& a = pts[i];
        const Point& b = pts[j];
        const Point& c = pts[k];
        const double lo_y = std::min({a[1], b[1], c[1]});
        const double hi_y = std::max({a[1], b[1], c[1]});
        const int cy0 = std::max(0, static_cast<int>((lo_y - min_y) / cell));
        const int cy1 = std::min(ny - 1, static_cast<int>((hi_y - min_y) / cell));
        for (int cy = cy0; cy <= cy1; ++cy) {
            const double y = min_y + (cy + 0.5) * cell;
            double xl = kInf, xr = -kInf;
            const Point* tri[3] = {&a, &b, &c};
            for (int e = 0; e < 3; ++e) {
                const Point& p = *tri[e];
                const Point& q = *tri[(e + 1) % 3];
                if ((p[1] - y) * (q[1] - y) > 0) continue;
                if (p[1] == q[1]) {
                    if (p[1] == y) {
                        xl = std::min({xl, p[0], q[0]});
                        xr = std::max({xr, p[0], q[0]});
                    }
                    continue;
                }
                const double x = p[0] + (y - p[1]) * (q[0] - p[0]) / (q[1] - p[1]);
                xl = std::min(xl, x);
                xr = std::max(xr, x);
            }
            if (xl > xr) continue;
            const int cx0 = std::max(0, static_cast<int>(std::ceil((xl - min_x) / cell - 0.5)));
            const int cx1 = std::min(nx - 1, static_cast<int>(std::floor((xr - min_x) / cell - 0.5)));
            for (int cx = cx0; cx <= cx1; ++cx)
                mark[static_cast<std::size_t>(cy) * nx + cx] = 1;
        }
    }

    std::vector<Pt2> out;
    for (int cy = 0; cy < ny; ++cy)
        for (int cx = 0; cx < nx; ++cx)
            if (mark[static_cast<std::size_t>(cy) * nx + cx])
                out.push_back({min_x + (cx + 0.5) * cell, min_y + (cy + 0.5) * cell});
    return out;
}

std::vector<Pt2> sample_shape_curve(const ShapeSpec& spec, double step) {
    const double total = shape_total_length(spec);
    const int n = std::max(8, static_cast<int>(std::ceil(total / step)));
    std::vector<Pt2> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const Point p = shape_point_at(spec, i * total / n);
        out.push_back({p[0], p[1]});
    }
    return out;
}

// Hausdorff between finite planar sets, both directions in one pass.
double finite_hausdorff(const std::vector<Pt2>& a, const std::vector<Pt2>& b) {
    std::vector<double> bmin(b.size(), kInf);
    double worst_a = 0.0;
    for (const Pt2& p : a) {
        double best = kInf;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const double dx = p.x - b[j].x, dy = p.y - b[j].y;
            const double d = dx * dx + dy * dy;
            if (d < best) best = d;
            if (d < bmin[j]) bmin[j] = d;
        }
        if (best > worst_a) worst_a = best;
    }
    double worst_b = 0.0;
    for (double d : bmin) worst_b = std::max(worst_b, d);
    return std::sqrt(std::max(worst_a, worst_b));
}

}  // namespace

ShadowComplex reconstruct_graph(const PointCloud& s, double eps, double delta) {
    if (s.dim != 2) throw std::invalid_argument("graph reconstruction needs planar input");
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    if (delta < 1.0) throw std::invalid_argument("delta must be >= 1");

    ShadowComplex shadow;
    shadow.points = s;
    shadow.eps = eps;
    shadow.delta = delta;
    const MetricMatrix d_eps = compute_d_eps(build_eps_graph(s, eps));
    collect_cells(d_eps, shadow.threshold(), shadow);
    return shadow;
}

std::pair<int, int> shadow_betti(const PointCloud& s, double eps, double delta) {
    const MetricMatrix d_eps = compute_d_eps(build_eps_graph(s, eps));
    const SimplicialComplex k = intrinsic_rips(s, d_eps, 5.0 * delta * eps, 2);
    return {betti(k, 0), betti(k, 1)};
}

double shadow_hausdorff(const ShadowComplex& shadow, const ShapeSpec& spec,
                        double resolution) {
    if (resolution <= 0) throw std::invalid_argument("resolution must be positive");
    const std::vector<Pt2> region = sample_shadow_region(shadow, resolution);
    const std::vector<Pt2> shape = sample_shape_curve(spec, resolution / 2.0);
    return finite_hausdorff(region, shape);
}

void export_svg(const ShadowComplex& shadow, const ShapeSpec* truth, std::ostream& os) {
    double min_x = kInf, min_y = kInf, max_x = -kInf, max_y = -kInf;
    auto grow = [&](double x, double y) {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    };
    for (const Point& p : shadow.points.points) grow(p[0], p[1]);
    std::vector<Pt2> truth_pts;
    if (truth) {
        truth_pts = sample_shape_curve(*truth, shape_total_length(*truth) / 1024.0);
        for (const Pt2& p : truth_pts) grow(p.x, p.y);
    }
    if (!(min_x < max_x)) {  // no cells at all
        min_x = min_y = 0.0;
        max_x = max_y = 1.0;
    }

    const double margin = 20.0, width = 800.0;
    const double span = std::max(max_x - min_x, max_y - min_y);
    const double scale = (width - 2.0 * margin) / (span > 0 ? span : 1.0);
    const double w = (max_x - min_x) * scale + 2.0 * margin;
    const double h = (max_y - min_y) * scale + 2.0 * margin;
    auto mx = [&](double x) { return margin + (x - min_x) * scale; };
    auto my = [&](double y) { return margin + (max_y - y) * scale; };

    char buf[256];
    auto line = [&](const char* fmt, auto... args) {
        std::snprintf(buf, sizeof buf, fmt, args...);
        os << buf << '\n';
    };

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    line("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.2f\" height=\"%.2f\" "
         "viewBox=\"0 0 %.2f %.2f\">", w, h, w, h);
    const auto& pts = shadow.points.points;
    for (const auto& [i, j, k] : shadow.triangles)
        line("<polygon points=\"%.3f,%.3f %.3f,%.3f %.3f,%.3f\" fill=\"#7ac943\" "
             "fill-opacity=\"0.45\" stroke=\"none\"/>",
             mx(pts[i][0]), my(pts[i][1]), mx(pts[j][0]), my(pts[j][1]),
             mx(pts[k][0]), my(pts[k][1]));
    for (const auto& [i, j] : shadow.segments)
        line("<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" "
             "stroke=\"#3f8f1f\" stroke-width=\"0.6\"/>",
             mx(pts[i][0]), my(pts[i][1]), mx(pts[j][0]), my(pts[j][1]));
    if (truth && !truth_pts.empty()) {
        if (truth->kind == ShapeKind::embedded_graph) {
            for (const auto& [a, b] : truth->graph.edges)
                line("<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" "
                     "stroke=\"#1040c0\" stroke-width=\"1.5\"/>",
                     mx(truth->graph.vertices[a][0]), my(truth->graph.vertices[a][1]),
                     mx(truth->graph.vertices[b][0]), my(truth->graph.vertices[b][1]));
        } else {
            os << "<polyline fill=\"none\" stroke=\"#1040c0\" stroke-width=\"1.5\" points=\"";
            for (const Pt2& p : truth_pts) {
                std::snprintf(buf, sizeof buf, "%.3f,%.3f ", mx(p.x), my(p.y));
                os << buf;
            }
            std::snprintf(buf, sizeof buf, "%.3f,%.3f", mx(truth_pts[0].x), my(truth_pts[0].y));
            os << buf << "\"/>\n";
        }
    }
    for (const Point& p : pts)
        line("<circle cx=\"%.3f\" cy=\"%.3f\" r=\"1.2\" fill=\"#202020\"/>",
             mx(p[0]), my(p[1]));
    os << "</svg>\n";
}

void export_svg_file(const ShadowComplex& shadow, const ShapeSpec* truth,
                     const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path + " for writing");
    export_svg(shadow, truth, os);
    if (!os) throw IoError("failed writing " + path);
}

ReconstructionReport reconstruct_report(const PointCloud& s, double eps, double delta,
                                        const ShapeSpec* spec, double resolution) {
    if (s.dim != 2) throw std::invalid_argument("graph reconstruction needs planar input");
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    if (delta < 1.0) throw std::invalid_argument("delta must be >= 1");

    const EpsGraph g = build_eps_graph(s, eps);
    const MetricMatrix d_eps = compute_d_eps(g);

    ReconstructionReport rep;
    rep.eps = eps;
    rep.delta = delta;
    rep.threshold = 5.0 * delta * eps;
    rep.components = component_count(g);
    rep.hausdorff_bound = (5.0 * delta + 1.0 / 3.0) * eps;

    const SimplicialComplex k = intrinsic_rips(s, d_eps, rep.threshold, 2);
    rep.beta0 = betti(k, 0);
    rep.beta1 = betti(k, 1);

    if (spec) {
        ShadowComplex shadow;
        shadow.points = s;
        shadow.eps = eps;
        shadow.delta = delta;
        collect_cells(d_eps, shadow.threshold(), shadow);
        rep.hausdorff_estimate = shadow_hausdorff(shadow, *spec, resolution);
        rep.hausdorff_ok = *rep.hausdorff_estimate < rep.hausdorff_bound;
    }
    return rep;
}

}  // namespace recon
