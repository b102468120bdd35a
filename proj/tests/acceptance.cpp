// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include "recon/complex.hpp"
#include "recon/homology.hpp"
#include "recon/intrinsic.hpp"
#include "recon/reconstruct.hpp"
#include "recon/rng.hpp"
#include "recon/shapes.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace recon;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    std::string id;
    std::string name;
    double budget_seconds;
    std::function<void(std::string&)> body;  // throws on failure
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::string fmt(const char* pattern, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, value);
    return buf;
}

// ---- criterion bodies -------------------------------------------------------

void square_oracle(std::string& detail) {
    const PointCloud square = make_cloud({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const Filtration f = rips_filtration(MetricMatrix::from_cloud(square), 2.0, 2);
    const PersistenceDiagram d = compute_persistence(f);

    std::vector<PersistenceInterval> h1;
    for (const auto& iv : d.intervals)
        if (iv.dim == 1) h1.push_back(iv);
    require(h1.size() == 1, "H1 must contain exactly one interval");
    require(h1[0].birth == 1.0, "H1 birth must be exactly 1.0");
    require(h1[0].death == std::sqrt(2.0), "H1 death must be exactly sqrt(2)");
    require(persistent_betti(d, {1, 1.0, 1.2}) == 1, "beta1(1.0,1.2) must be 1");
    require(persistent_betti(d, {1, 1.0, 1.5}) == 0, "beta1(1.0,1.5) must be 0");
    detail = "H1 = {(1.0, sqrt(2))}, queries 1 and 0";
}

void oracle_equivalence(std::string& detail) {
    Rng rng(2024);
    int checks = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + rng.below(6);  // up to 7 points
        const PointCloud cloud = testutil::random_cloud(rng, n, 2 + rng.below(2));
        const MetricMatrix m = MetricMatrix::from_cloud(cloud);
        const Filtration f = rips_filtration(m, 6.0, 2);
        const PersistenceDiagram d = compute_persistence(f);

        std::vector<double> values;
        for (const auto& e : f.entries) values.push_back(e.value);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());

        const int i = rng.below(static_cast<int>(values.size()));
        const int j = i + rng.below(static_cast<int>(values.size()) - i);
        const double s = values[i] + 1e-7;
        const double t = values[j] + 2e-7;
        if (t > f.alpha_max) continue;
        const SimplicialComplex ks = rips_complex(m, s, 2);
        const SimplicialComplex kt = rips_complex(m, t, 2);
        for (int k = 0; k < 2; ++k) {
            require(persistent_betti(d, {k, s, t}) == image_rank_oracle(ks, kt, k),
                    "persistent Betti disagrees with the image-rank oracle");
            ++checks;
        }
    }
    detail = std::to_string(checks) + " rank comparisons";
}

void rips_reconstruction(std::string& detail) {
    const ShapeSpec circle = circle_spec(1.0);
    const auto sample = sample_shape(circle, 120, {});
    const double eps = 0.25;
    const auto cond = verify_sampling_condition(circle, sample.dh_bound, eps,
                                                TheoremKind::rips);
    require(cond.pass, "rips validator must pass: " + cond.chain());

    const double target = 0.5 * (3.0 * circle.distortion + 1.0) * eps;
    const PersistenceDiagram d = compute_persistence(
        rips_filtration(MetricMatrix::from_cloud(sample.cloud), target, 2));
    const int b0 = persistent_betti(d, {0, eps, target});
    const int b1 = persistent_betti(d, {1, eps, target});
    require(b0 == 1, "persistent beta0 must be 1, got " + std::to_string(b0));
    require(b1 == 1, "persistent beta1 must be 1, got " + std::to_string(b1));
    detail = "image ranks (1, 1) at (0.25, " + fmt("%.4f", target) + ")";
}

void cech_reconstruction(std::string& detail) {
    const ShapeSpec circle = circle_spec(1.0);
    const auto sample = sample_shape(circle, 120, {});
    const double eps = 0.06;
    const auto cond = verify_sampling_condition(circle, sample.dh_bound, eps,
                                                TheoremKind::cech);
    require(cond.pass, "cech validator must pass: " + cond.chain());

    const double target = (4.0 * circle.distortion + 1.0) * eps;
    const PersistenceDiagram d =
        compute_persistence(cech_filtration(sample.cloud, target, 2));
    const int b0 = persistent_betti(d, {0, eps, target});
    const int b1 = persistent_betti(d, {1, eps, target});
    require(b0 == 1, "persistent beta0 must be 1, got " + std::to_string(b0));
    require(b1 == 1, "persistent beta1 must be 1, got " + std::to_string(b1));
    detail = "image ranks (1, 1) at (0.06, " + fmt("%.4f", target) + ")";
}

void lemniscate_two_scales(std::string& detail) {
    const ShapeSpec lem = lemniscate_spec(1.0);
    require(shape_beta1(lem) == 2, "crossing oracle must give beta1 = 2");

    const auto sample = sample_shape(lem, 400, {0.014, 6});
    const double eps = 0.084;
    const auto cond = verify_sampling_condition(lem, sample.dh_bound, eps,
                                                TheoremKind::rips);
    require(cond.pass, "rips validator must pass: " + cond.chain());

    const MetricMatrix m = MetricMatrix::from_cloud(sample.cloud);
    const int spurious = betti(rips_complex(m, 0.034, 2), 1);
    require(spurious > 2, "single-scale beta1 at 0.034 must exceed 2, got " +
                              std::to_string(spurious));

    const double target = 0.5 * (3.0 * lem.distortion + 1.0) * eps;
    const PersistenceDiagram d = compute_persistence(rips_filtration(m, target, 2));
    const int b1 = persistent_betti(d, {1, eps, target});
    require(b1 == 2, "theorem-scale persistent beta1 must be 2, got " + std::to_string(b1));
    detail = "beta1 = " + std::to_string(spurious) + " at 0.034, 2 at the theorem pair";
}

void graph_instance(const ShapeSpec& spec, int count, double eps, double resolution,
                    std::string& detail) {
    const int expected_b1 = shape_beta1(spec);
    const auto sample = sample_shape(spec, count, {});
    const auto cond = verify_sampling_condition(spec, sample.dh_bound, eps,
                                                TheoremKind::graph);
    require(cond.pass, "graph validator must pass: " + cond.chain());

    const ReconstructionReport rep =
        reconstruct_report(sample.cloud, eps, spec.distortion, &spec, resolution);
    require(rep.beta0 == 1, "shadow beta0 must be 1, got " + std::to_string(rep.beta0));
    require(rep.beta1 == expected_b1,
            "shadow beta1 must be " + std::to_string(expected_b1) + ", got " +
                std::to_string(rep.beta1));
    require(rep.hausdorff_estimate && *rep.hausdorff_estimate < rep.hausdorff_bound,
            "shadow must stay within the Hausdorff bound");
    detail = "beta1 = " + std::to_string(rep.beta1) + ", d_H " +
             fmt("%.3f", *rep.hausdorff_estimate) + " < " + fmt("%.3f", rep.hausdorff_bound);
}

void path_covering(std::string& detail) {
    const ShapeSpec circle = circle_spec(1.0);
    const auto sample = sample_shape(circle, 200, {});
    const PathCoveringReport rep = path_covering_check(circle, sample.cloud, 0.1, 500, 12);
    require(rep.violations == 0, "no pair may reach the covering factor 3");
    require(rep.worst_ratio < 3.0, "worst ratio must stay below 3, got " +
                                       fmt("%.4f", rep.worst_ratio));
    detail = "max d_eps/d_L = " + fmt("%.4f", rep.worst_ratio) + " over 500 pairs";
}

void inclusion_lemmas(std::string& detail) {
    const ShapeSpec circle = circle_spec(1.0);
    const double delta = circle.distortion;
    Rng rng(404);
    int subset_checks = 0, map_checks = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 5 + rng.below(14);
        std::vector<Point> pts;
        for (int i = 0; i < n; ++i) {
            const double a = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
            pts.push_back({std::cos(a), std::sin(a)});
        }
        const PointCloud a = make_cloud(std::move(pts));
        const double alpha = rng.uniform(0.1, 2.0);

        const SimplicialComplex euclid = rips_complex(MetricMatrix::from_cloud(a), alpha, 2);
        const SimplicialComplex intr = intrinsic_rips_on_shape(circle, a, alpha, 2);
        const SimplicialComplex intr_up =
            intrinsic_rips_on_shape(circle, a, delta * alpha, 2);
        require(is_subcomplex(intr, euclid), "intrinsic Rips must include into Euclidean");
        require(is_subcomplex(euclid, intr_up),
                "Euclidean Rips must include into intrinsic at delta*alpha");
        ++subset_checks;

        // Hausdorff-perturbation simplicial map
        std::vector<Point> bp;
        for (const Point& p : a.points)
            bp.push_back({p[0] + rng.uniform(-0.04, 0.04), p[1] + rng.uniform(-0.04, 0.04)});
        const PointCloud b = make_cloud(std::move(bp));
        const double eps = hausdorff_distance(a, b) * (1.0 + 1e-12) + 1e-15;
        std::vector<int> nearest;
        for (const Point& p : a.points) nearest.push_back(nearest_sample_point(b, p));
        const SimplicialComplex kb =
            rips_complex(MetricMatrix::from_cloud(b), alpha + 2.0 * eps, 2);
        require(testutil::extends_simplicially(euclid, kb, nearest),
                "nearest-point map must extend simplicially at alpha + 2*eps");
        ++map_checks;
    }
    detail = std::to_string(subset_checks) + " inclusion chains, " +
             std::to_string(map_checks) + " simplicial maps";
}

void apsp_exactness(std::string& detail) {
    Rng rng(555);
    int graphs = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 5 + rng.below(46);  // up to 50 vertices
        const PointCloud cloud = testutil::random_cloud(rng, n, 2);
        const double eps = rng.uniform(0.15, 0.9);
        const EpsGraph g = build_eps_graph(cloud, eps);
        const MetricMatrix fast = compute_d_eps(g);
        const MetricMatrix slow = testutil::relaxation_apsp(g);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j)
                require(fast(i, j) == slow(i, j),
                        "d_eps must match the relaxation oracle exactly");
        ++graphs;
    }
    detail = std::to_string(graphs) + " graphs, exact equality";
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1", "square H1 oracle (exact)", 1.0, square_oracle},
        {"2", "persistent Betti vs image-rank oracle, 200 random clouds", 30.0,
         oracle_equivalence},
        {"3", "Rips reconstruction theorem on the circle", 30.0, rips_reconstruction},
        {"4", "Cech reconstruction theorem on the circle", 60.0, cech_reconstruction},
        {"5", "lemniscate two-scale story", 120.0, lemniscate_two_scales},
        {"6a", "graph reconstruction: circle", 120.0,
         [](std::string& d) { graph_instance(circle_spec(1.0), 200, 0.11, 0.02, d); }},
        {"6b", "graph reconstruction: figure-eight", 120.0,
         [](std::string& d) { graph_instance(figure_eight_spec(), 300, 0.045, 0.01, d); }},
        {"6c", "graph reconstruction: theta graph", 120.0,
         [](std::string& d) { graph_instance(theta_spec(), 250, 0.045, 0.01, d); }},
        {"6d", "graph reconstruction: lissajous (beta1 = 8)", 120.0,
         [](std::string& d) { graph_instance(lissajous_spec(1.0), 2300, 0.010, 0.012, d); }},
        {"7", "path covering factor below 3", 10.0, path_covering},
        {"8", "inclusion lemmas and Hausdorff simplicial maps", 30.0, inclusion_lemmas},
        {"9", "d_eps equals the relaxation oracle", 10.0, apsp_exactness},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = Clock::now();
        std::string detail;
        std::string error;
        try {
            criteria[i].body(detail);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
        if (error.empty() && elapsed > criteria[i].budget_seconds)
            error = "exceeded the runtime budget of " +
                    fmt("%.0f", criteria[i].budget_seconds) + "s";
        if (error.empty()) {
            std::printf("[PASS] %s. %s (%s) [%.1fs]\n", criteria[i].id.c_str(),
                        criteria[i].name.c_str(), detail.c_str(), elapsed);
        } else {
            ++failures;
            std::printf("[FAIL] %s. %s: %s [%.1fs]\n", criteria[i].id.c_str(),
                        criteria[i].name.c_str(), error.c_str(), elapsed);
        }
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures;
}
