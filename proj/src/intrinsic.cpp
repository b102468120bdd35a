#include "recon/intrinsic.hpp"

#include "recon/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace recon {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void dijkstra(const EpsGraph& g, int src, std::vector<double>& dist,
              std::vector<int>* parent = nullptr) {
    dist.assign(g.n, kInf);
    if (parent) parent->assign(g.n, -1);
    dist[src] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.push({0.0, src});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v]) continue;
        for (const auto& [w, len] : g.adj[v]) {
            const double nd = d + len;
            if (nd < dist[w]) {
                dist[w] = nd;
                if (parent) (*parent)[w] = v;
                heap.push({nd, w});
            }
        }
    }
}

}  // namespace

EpsGraph build_eps_graph(const PointCloud& s, double eps) {
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    EpsGraph g;
    g.n = s.size();
    g.eps = eps;
    g.adj.resize(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            const double d = euclidean_distance(s[i], s[j]);
            if (d <= eps) {
                g.edges.push_back({i, j});
                g.weights.push_back(d);
                g.adj[i].push_back({j, d});
                g.adj[j].push_back({i, d});
            }
        }
    return g;
}

MetricMatrix compute_d_eps(const EpsGraph& g) {
    MetricMatrix m(g.n, kInf);
    std::vector<double> dist;
    for (int src = 0; src < g.n; ++src) {
        dijkstra(g, src, dist);
        for (int j = 0; j < src; ++j) m.set(src, j, dist[j]);
    }
    return m;
}

int component_count(const EpsGraph& g) {
    std::vector<int> comp(g.n, -1);
    int count = 0;
    for (int i = 0; i < g.n; ++i) {
        if (comp[i] != -1) continue;
        std::vector<int> stack = {i};
        comp[i] = count;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& [w, len] : g.adj[v])
                if (comp[w] == -1) {
                    comp[w] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }
    return count;
}

SimplicialComplex intrinsic_rips(const PointCloud& s, const MetricMatrix& d_eps,
                                 double alpha, int dim_cap) {
    if (d_eps.size() != s.size())
        throw std::invalid_argument("metric size does not match the cloud");
    return rips_complex(d_eps, alpha, dim_cap);
}

PathCoveringReport path_covering_check(const ShapeSpec& spec, const PointCloud& s,
                                       double eps, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    const double total = shape_total_length(spec);

    PathCoveringReport report;
    report.trials = trials;

    // certify the density precondition against a dense reference sample;
    // ref_cover accounts for the reference's own resolution
    const int ref_count = std::max(4096, 16 * s.size());
    report.dh_estimate = hausdorff_to_shape(spec, s, ref_count);
    const double ref_cover = total / (2.0 * ref_count);
    if (report.dh_estimate + ref_cover >= eps / 3.0)
        throw std::invalid_argument("path covering check requires d_H(X,S) < eps/3");

    const EpsGraph g = build_eps_graph(s, eps);
    Rng rng(seed);
    // the covering construction yields d_eps <= 2 d_L + 2 eps/3; the slack
    // covers its terminal hops, which dominate only when d_L is below eps
    const double slack = (2.0 / 3.0) * eps * (1.0 + 1e-9);

    std::vector<double> dist;
    std::vector<int> parent;
    int cached_src = -1;
    for (int trial = 0; trial < trials; ++trial) {
        const double sp = rng.uniform(0.0, total);
        const double tp = rng.uniform(0.0, total);
        const Point x = shape_point_at(spec, sp);
        const Point y = shape_point_at(spec, tp);
        const int a = nearest_sample_point(s, x);
        const int b = nearest_sample_point(s, y);
        const double dl = geodesic_distance_at(spec, sp, tp);

        if (a != cached_src) {
            dijkstra(g, a, dist, &parent);
            cached_src = a;
        }
        const double de = dist[b];
        if (!(de < 3.0 * dl + slack)) ++report.violations;
        if (dl >= eps) {  // the ratio is meaningful above the hop scale
            const double ratio = de / dl;
            report.worst_ratio = std::max(report.worst_ratio, ratio);
            if (ratio > 2.99) ++report.flagged;
        }
        for (int v = b; v != a && parent[v] != -1; v = parent[v]) {
            const double hop = euclidean_distance(s[v], s[parent[v]]);
            report.max_hop = std::max(report.max_hop, hop);
            if (!(hop < eps)) report.hops_below_eps = false;
        }
    }
    return report;
}

}  // namespace recon
