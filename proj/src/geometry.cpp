#include "recon/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace recon {

PointCloud make_cloud(std::vector<Point> pts) {
    if (pts.empty()) throw std::invalid_argument("point cloud must be non-empty");
    const int dim = static_cast<int>(pts.front().size());
    if (dim < 1) throw std::invalid_argument("points must have dimension >= 1");
    for (const Point& p : pts) {
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("inconsistent point dimensions in cloud");
        for (double c : p)
            if (!std::isfinite(c)) throw std::invalid_argument("non-finite coordinate");
    }
    PointCloud cloud;
    cloud.points = std::move(pts);
    cloud.dim = dim;
    return cloud;
}

double squared_distance(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double euclidean_distance(const Point& a, const Point& b) {
    return std::sqrt(squared_distance(a, b));
}

double hausdorff_distance(const PointCloud& a, const PointCloud& b) {
    if (a.points.empty() || b.points.empty())
        throw std::invalid_argument("hausdorff_distance: empty input");
    if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch");

    auto directed = [](const PointCloud& from, const PointCloud& to) {
        double worst = 0.0;
        for (const Point& p : from.points) {
            double best = std::numeric_limits<double>::infinity();
            for (const Point& q : to.points) {
                const double d = squared_distance(p, q);
                if (d < best) best = d;
            }
            if (best > worst) worst = best;
        }
        return worst;
    };
    return std::sqrt(std::max(directed(a, b), directed(b, a)));
}

bool Ball::contains(const Point& p, double slack) const {
    const double r = radius + slack;
    return squared_distance(center, p) <= r * r;
}

namespace {

// Smallest ball having every point of `boundary` on its surface. The
// boundary points are affinely independent by construction of Welzl's
// recursion; the Gram system below is solved with partial pivoting.
Ball circumball(const std::vector<Point>& boundary, int dim) {
    Ball ball;
    if (boundary.empty()) {
        ball.center.assign(dim, 0.0);
        ball.radius = -1.0;  // empty ball: contains nothing
        return ball;
    }
    const Point& p0 = boundary.front();
    const int m = static_cast<int>(boundary.size()) - 1;
    if (m == 0) {
        ball.center = p0;
        ball.radius = 0.0;
        return ball;
    }

    // Solve 2 (v_j . v_i) x_i = |v_j|^2 with v_i = p_i - p0; the center is
    // p0 + sum x_i v_i.
    std::vector<std::vector<double>> v(m, std::vector<double>(dim));
    for (int i = 0; i < m; ++i)
        for (int d = 0; d < dim; ++d) v[i][d] = boundary[i + 1][d] - p0[d];

    std::vector<std::vector<double>> a(m, std::vector<double>(m + 1));
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < m; ++i) {
            double dot = 0.0;
            for (int d = 0; d < dim; ++d) dot += v[j][d] * v[i][d];
            a[j][i] = 2.0 * dot;
        }
        double n2 = 0.0;
        for (int d = 0; d < dim; ++d) n2 += v[j][d] * v[j][d];
        a[j][m] = n2;
    }

    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        std::swap(a[col], a[piv]);
        if (a[col][col] == 0.0) continue;  // degenerate; leave x = 0
        for (int r = 0; r < m; ++r) {
            if (r == col) continue;
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (int c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
        }
    }

    ball.center = p0;
    for (int i = 0; i < m; ++i) {
        const double xi = a[i][i] != 0.0 ? a[i][m] / a[i][i] : 0.0;
        for (int d = 0; d < dim; ++d) ball.center[d] += xi * v[i][d];
    }
    ball.radius = euclidean_distance(ball.center, p0);
    return ball;
}

Ball welzl(const std::vector<Point>& pts, std::size_t end,
           std::vector<Point>& boundary, int dim) {
    if (end == 0 || static_cast<int>(boundary.size()) == dim + 1)
        return circumball(boundary, dim);

    const Point& p = pts[end - 1];
    Ball ball = welzl(pts, end - 1, boundary, dim);
    const double slack = 1e-12 * (1.0 + ball.radius);
    if (ball.radius >= 0.0 && ball.contains(p, slack)) return ball;

    boundary.push_back(p);
    ball = welzl(pts, end - 1, boundary, dim);
    boundary.pop_back();
    return ball;
}

}  // namespace

Ball minimal_enclosing_ball(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("minimal_enclosing_ball: empty input");
    const int dim = static_cast<int>(pts.front().size());
    for (const Point& p : pts)
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("dimension mismatch");
    std::vector<Point> boundary;
    return welzl(pts, pts.size(), boundary, dim);
}

int nearest_sample_point(const PointCloud& s, const Point& x) {
    if (s.points.empty()) throw std::invalid_argument("nearest_sample_point: empty cloud");
    int best = 0;
    double best_d = squared_distance(s.points[0], x);
    for (int i = 1; i < s.size(); ++i) {
        const double d = squared_distance(s.points[i], x);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

}  // namespace recon
