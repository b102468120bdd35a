#include "recon/complex.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <limits>
#include <stdexcept>

namespace recon {

bool simplex_less(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return std::binary_search(simplices.begin(), simplices.end(), s, simplex_less);
}

int SimplicialComplex::count_dim(int k) const {
    int c = 0;
    for (const Simplex& s : simplices)
        if (static_cast<int>(s.size()) == k + 1) ++c;
    return c;
}

MetricMatrix::MetricMatrix(int n, double fill)
    : n_(n), d_(static_cast<std::size_t>(n) * (n - 1) / 2, fill) {}

MetricMatrix MetricMatrix::from_cloud(const PointCloud& cloud) {
    MetricMatrix m(cloud.size());
    for (int i = 1; i < cloud.size(); ++i)
        for (int j = 0; j < i; ++j)
            m.set(i, j, euclidean_distance(cloud[i], cloud[j]));
    return m;
}

double MetricMatrix::operator()(int i, int j) const {
    if (i == j) return 0.0;
    if (i < j) std::swap(i, j);
    return d_[static_cast<std::size_t>(i) * (i - 1) / 2 + j];
}

void MetricMatrix::set(int i, int j, double v) {
    if (i == j) {
        if (v != 0.0) throw std::invalid_argument("diagonal must stay zero");
        return;
    }
    if (i < j) std::swap(i, j);
    d_[static_cast<std::size_t>(i) * (i - 1) / 2 + j] = v;
}

namespace {

using EmitFn = std::function<void(const Simplex&, double)>;

// Clique expansion over the upper-neighbor lists: only cliques of the
// threshold graph are candidates, no subset scans.
void expand_rips(const MetricMatrix& m, const std::vector<std::vector<int>>& nbr,
                 int dim_cap, Simplex& cur, double cur_value,
                 const std::vector<int>& cand, const EmitFn& emit) {
    for (std::size_t idx = 0; idx < cand.size(); ++idx) {
        const int u = cand[idx];
        double value = cur_value;
        for (int v : cur) value = std::max(value, m(v, u));
        cur.push_back(u);
        emit(cur, value);
        if (static_cast<int>(cur.size()) <= dim_cap) {
            std::vector<int> next;
            for (std::size_t j = idx + 1; j < cand.size(); ++j)
                if (std::binary_search(nbr[u].begin(), nbr[u].end(), cand[j]))
                    next.push_back(cand[j]);
            if (!next.empty()) expand_rips(m, nbr, dim_cap, cur, value, next, emit);
        }
        cur.pop_back();
    }
}

void enumerate_rips(const MetricMatrix& m, double alpha, int dim_cap, const EmitFn& emit) {
    const int n = m.size();
    std::vector<std::vector<int>> nbr(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m(i, j) <= alpha) nbr[i].push_back(j);

    Simplex cur;
    for (int i = 0; i < n; ++i) {
        cur.assign(1, i);
        emit(cur, 0.0);
        if (dim_cap >= 1 && !nbr[i].empty())
            expand_rips(m, nbr, dim_cap, cur, 0.0, nbr[i], emit);
    }
}

// Cech expansion; a failed ball test prunes the whole branch (the minimal
// enclosing ball radius is monotone under inclusion).
void expand_cech(const PointCloud& cloud, const std::vector<std::vector<int>>& nbr,
                 double alpha, bool strict, int dim_cap, Simplex& cur,
                 std::vector<Point>& pts, const std::vector<int>& cand,
                 const EmitFn& emit) {
    for (std::size_t idx = 0; idx < cand.size(); ++idx) {
        const int u = cand[idx];
        cur.push_back(u);
        pts.push_back(cloud[u]);
        double r = 0.0;
        if (cur.size() == 2)
            r = euclidean_distance(pts[0], pts[1]) / 2.0;
        else if (cur.size() > 2)
            r = minimal_enclosing_ball(pts).radius;
        if (strict ? r < alpha : r <= alpha) {
            emit(cur, r);
            if (static_cast<int>(cur.size()) <= dim_cap) {
                std::vector<int> next;
                for (std::size_t j = idx + 1; j < cand.size(); ++j)
                    if (std::binary_search(nbr[u].begin(), nbr[u].end(), cand[j]))
                        next.push_back(cand[j]);
                if (!next.empty())
                    expand_cech(cloud, nbr, alpha, strict, dim_cap, cur, pts, next, emit);
            }
        }
        cur.pop_back();
        pts.pop_back();
    }
}

void enumerate_cech(const PointCloud& cloud, double alpha, bool strict, int dim_cap,
                    const EmitFn& emit) {
    const int n = cloud.size();
    std::vector<std::vector<int>> nbr(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double d = euclidean_distance(cloud[i], cloud[j]);
            if (strict ? d < 2.0 * alpha : d <= 2.0 * alpha) nbr[i].push_back(j);
        }

    Simplex cur;
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        cur.assign(1, i);
        emit(cur, 0.0);
        if (dim_cap >= 1 && !nbr[i].empty()) {
            pts.assign(1, cloud[i]);
            expand_cech(cloud, nbr, alpha, strict, dim_cap, cur, pts, nbr[i], emit);
            pts.clear();
        }
    }
}

void sort_filtration(Filtration& f) {
    std::stable_sort(f.entries.begin(), f.entries.end(),
                     [](const FiltEntry& a, const FiltEntry& b) {
                         if (a.value != b.value) return a.value < b.value;
                         return simplex_less(a.simplex, b.simplex);
                     });
}

// Enforce value(face) <= value(coface). The enclosing-ball radius is
// monotone in exact arithmetic, but Welzl's output can sit an ulp below a
// facet value when the support set is degenerate.
void make_monotone(std::vector<FiltEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const FiltEntry& a, const FiltEntry& b) {
        return simplex_less(a.simplex, b.simplex);
    });
    std::map<Simplex, double> value;
    for (FiltEntry& e : entries) {
        if (e.simplex.size() >= 2) {
            Simplex face(e.simplex.size() - 1);
            for (std::size_t drop = 0; drop < e.simplex.size(); ++drop) {
                std::size_t w = 0;
                for (std::size_t i = 0; i < e.simplex.size(); ++i)
                    if (i != drop) face[w++] = e.simplex[i];
                auto it = value.find(face);
                if (it != value.end()) e.value = std::max(e.value, it->second);
            }
        }
        value.emplace(e.simplex, e.value);
    }
}

// All simplices with enclosing-ball radius <= limit (after the monotone
// fix), used by both the Cech complex and its filtration.
std::vector<FiltEntry> cech_entries(const PointCloud& cloud, double limit, int dim_cap) {
    std::vector<FiltEntry> entries;
    enumerate_cech(cloud, limit, /*strict=*/false, dim_cap,
                   [&](const Simplex& s, double v) { entries.push_back({s, v}); });
    make_monotone(entries);
    entries.erase(std::remove_if(entries.begin(), entries.end(),
                                 [&](const FiltEntry& e) { return e.value > limit; }),
                  entries.end());
    return entries;
}

}  // namespace

SimplicialComplex rips_complex(const MetricMatrix& metric, double alpha, int dim_cap) {
    if (alpha < 0) throw std::invalid_argument("alpha must be >= 0");
    if (dim_cap < 0) throw std::invalid_argument("dim_cap must be >= 0");
    SimplicialComplex k;
    k.dim_cap = dim_cap;
    enumerate_rips(metric, alpha, dim_cap,
                   [&](const Simplex& s, double) { k.simplices.push_back(s); });
    std::sort(k.simplices.begin(), k.simplices.end(), simplex_less);
    return k;
}

Filtration rips_filtration(const MetricMatrix& metric, double alpha_max, int dim_cap) {
    if (alpha_max < 0) throw std::invalid_argument("alpha_max must be >= 0");
    Filtration f;
    f.dim_cap = dim_cap;
    f.alpha_max = alpha_max;
    enumerate_rips(metric, alpha_max, dim_cap,
                   [&](const Simplex& s, double v) { f.entries.push_back({s, v}); });
    sort_filtration(f);
    return f;
}

SimplicialComplex cech_complex(const PointCloud& cloud, double alpha, int dim_cap) {
    if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
    if (dim_cap < 0) throw std::invalid_argument("dim_cap must be >= 0");
    SimplicialComplex k;
    k.dim_cap = dim_cap;
    for (const FiltEntry& e : cech_entries(cloud, alpha, dim_cap))
        if (e.value < alpha) k.simplices.push_back(e.simplex);  // open balls
    std::sort(k.simplices.begin(), k.simplices.end(), simplex_less);
    return k;
}

Filtration cech_filtration(const PointCloud& cloud, double alpha_max, int dim_cap) {
    if (alpha_max <= 0) throw std::invalid_argument("alpha_max must be positive");
    Filtration f;
    f.dim_cap = dim_cap;
    f.alpha_max = alpha_max;
    f.entries = cech_entries(cloud, alpha_max, dim_cap);
    sort_filtration(f);
    return f;
}

MetricMatrix geodesic_metric(const ShapeSpec& spec, const PointCloud& cloud) {
    const std::vector<double> pos = shape_positions(spec, cloud);
    MetricMatrix m(cloud.size());
    for (int i = 1; i < cloud.size(); ++i)
        for (int j = 0; j < i; ++j)
            m.set(i, j, geodesic_distance_at(spec, pos[i], pos[j]));
    return m;
}

SimplicialComplex intrinsic_rips_on_shape(const ShapeSpec& spec, const PointCloud& cloud,
                                          double alpha, int dim_cap) {
    return rips_complex(geodesic_metric(spec, cloud), alpha, dim_cap);
}

SimplicialComplex intrinsic_cech_on_shape(const ShapeSpec& spec, const PointCloud& cloud,
                                          double alpha, int dim_cap, int witness_count) {
    if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
    const std::vector<double> pos = shape_positions(spec, cloud);
    const double total = shape_total_length(spec);

    std::vector<double> wpos = pos;
    for (int i = 0; i < witness_count; ++i) wpos.push_back(i * total / witness_count);

    const int n = cloud.size();
    std::vector<std::vector<double>> wd(wpos.size(), std::vector<double>(n));
    for (std::size_t w = 0; w < wpos.size(); ++w)
        for (int i = 0; i < n; ++i) wd[w][i] = geodesic_distance_at(spec, wpos[w], pos[i]);

    auto witnessed = [&](const Simplex& s) {
        for (std::size_t w = 0; w < wpos.size(); ++w) {
            bool ok = true;
            for (int v : s)
                if (wd[w][v] >= alpha) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        }
        return false;
    };

    // candidate cliques come from the pairwise d_L < 2*alpha graph; a
    // simplex without a witness cannot gain one by growing
    std::vector<std::vector<int>> nbr(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (geodesic_distance_at(spec, pos[i], pos[j]) < 2.0 * alpha)
                nbr[i].push_back(j);

    SimplicialComplex k;
    k.dim_cap = dim_cap;
    std::function<void(Simplex&, const std::vector<int>&)> expand =
        [&](Simplex& cur, const std::vector<int>& cand) {
            for (std::size_t idx = 0; idx < cand.size(); ++idx) {
                const int u = cand[idx];
                cur.push_back(u);
                if (witnessed(cur)) {
                    k.simplices.push_back(cur);
                    if (static_cast<int>(cur.size()) <= dim_cap) {
                        std::vector<int> next;
                        for (std::size_t j = idx + 1; j < cand.size(); ++j)
                            if (std::binary_search(nbr[u].begin(), nbr[u].end(), cand[j]))
                                next.push_back(cand[j]);
                        if (!next.empty()) expand(cur, next);
                    }
                }
                cur.pop_back();
            }
        };

    Simplex cur;
    for (int i = 0; i < n; ++i) {
        cur.assign(1, i);
        k.simplices.push_back(cur);
        if (dim_cap >= 1 && !nbr[i].empty()) expand(cur, nbr[i]);
    }
    std::sort(k.simplices.begin(), k.simplices.end(), simplex_less);
    return k;
}

bool is_subcomplex(const SimplicialComplex& k, const SimplicialComplex& l) {
    for (const Simplex& s : k.simplices)
        if (!l.contains(s)) return false;
    return true;
}

}  // namespace recon
