#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "recon/geometry.hpp"
#include "recon/rng.hpp"
#include "recon/shapes.hpp"

#include "oracles.hpp"

#include <cmath>

using namespace recon;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("euclidean distance basics") {
    CHECK(euclidean_distance({0, 0}, {0, 0}) == 0.0);
    CHECK(euclidean_distance({0, 0}, {3, 4}) == 5.0);
    // direct formula against the sum-of-squares oracle
    const double d = euclidean_distance({1, 1}, {2, 3});
    CHECK(d == std::sqrt(1.0 * 1.0 + 2.0 * 2.0));
    CHECK(d == doctest::Approx(2.2360679774997896).epsilon(1e-15));
    CHECK_THROWS_AS(euclidean_distance({0, 0}, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("hausdorff distance examples") {
    const PointCloud a = make_cloud({{0, 0}, {10, 0}});
    const PointCloud b = make_cloud({{0, 1}});
    CHECK(hausdorff_distance(a, a) == 0.0);
    CHECK(hausdorff_distance(make_cloud({{0, 0}}), make_cloud({{3, 4}})) == 5.0);
    CHECK(hausdorff_distance(a, b) == doctest::Approx(std::sqrt(101.0)).epsilon(1e-15));
    CHECK(hausdorff_distance(b, a) == hausdorff_distance(a, b));
    CHECK_THROWS_AS(hausdorff_distance(PointCloud{}, a), std::invalid_argument);
}

TEST_CASE("hausdorff distance is a metric on finite sets") {
    Rng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        const PointCloud a = testutil::random_cloud(rng, 3 + rng.below(5), 2);
        const PointCloud b = testutil::random_cloud(rng, 3 + rng.below(5), 2);
        const PointCloud c = testutil::random_cloud(rng, 3 + rng.below(5), 2);
        const double ab = hausdorff_distance(a, b);
        const double bc = hausdorff_distance(b, c);
        const double ac = hausdorff_distance(a, c);
        CHECK(ab == hausdorff_distance(b, a));
        CHECK(ab >= 0.0);
        CHECK(ac <= ab + bc + 1e-12);
        CHECK(hausdorff_distance(a, a) == 0.0);
    }
}

TEST_CASE("minimal enclosing ball examples") {
    const Ball single = minimal_enclosing_ball({{1, 2}});
    CHECK(single.center == Point{1, 2});
    CHECK(single.radius == 0.0);

    const Ball pair = minimal_enclosing_ball({{0, 0}, {2, 0}});
    CHECK(pair.center[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(pair.center[1] == 0.0);
    CHECK(pair.radius == doctest::Approx(1.0).epsilon(1e-15));

    const Ball tri = minimal_enclosing_ball({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
    CHECK(tri.radius == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));

    CHECK_THROWS_AS(minimal_enclosing_ball({}), std::invalid_argument);
}

TEST_CASE("minimal enclosing ball against the support-set oracle") {
    Rng rng(7);
    for (int dim : {2, 3}) {
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 2 + rng.below(9);
            const PointCloud cloud = testutil::random_cloud(rng, n, dim);
            const Ball ball = minimal_enclosing_ball(cloud.points);
            for (const Point& p : cloud.points)
                CHECK(euclidean_distance(ball.center, p) <= ball.radius + 1e-9);
            const double oracle = testutil::brute_force_meb_radius(cloud.points);
            CHECK(ball.radius == doctest::Approx(oracle).epsilon(1e-9));
        }
    }
}

TEST_CASE("nearest sample point with index tie-break") {
    const PointCloud s = make_cloud({{0, 0}, {1, 0}});
    CHECK(nearest_sample_point(s, {1, 0}) == 1);
    CHECK(nearest_sample_point(s, {0.4, 0}) == 0);
    CHECK(nearest_sample_point(s, {0.5, 0}) == 0);  // tie -> smaller index
}

TEST_CASE("shape sampling reports the certified bound") {
    const auto four = sample_shape(circle_spec(1.0), 4, {});
    CHECK(four.cloud.size() == 4);
    CHECK(four.dh_bound == doctest::Approx(kPi / 4.0).epsilon(1e-15));

    const auto dense = sample_shape(circle_spec(1.0), 120, {});
    CHECK(dense.dh_bound == doctest::Approx(kPi / 120.0).epsilon(1e-15));

    const auto square = sample_shape(square_spec(), 40, {0.01, 3});
    CHECK(square.cloud.size() == 40);
    CHECK(square.dh_bound == doctest::Approx(0.06).epsilon(1e-15));
}

TEST_CASE("sampling bound dominates the measured Hausdorff distance") {
    for (const ShapeSpec& spec : {circle_spec(1.0), lemniscate_spec(1.0), square_spec(),
                                  figure_eight_spec()}) {
        const int n = 60;
        const auto sample = sample_shape(spec, n, {0.01, 11});
        const double measured = hausdorff_to_shape(spec, sample.cloud, 100 * n);
        const double ref_cover = shape_total_length(spec) / (2.0 * 100 * n);
        CHECK(measured <= sample.dh_bound + ref_cover);
        CHECK(measured > 0.0);
    }
}

TEST_CASE("noise displaces every point by at most the magnitude") {
    const double eta = 0.05;
    const auto clean = sample_shape(lemniscate_spec(1.0), 80, {});
    const auto noisy = sample_shape(lemniscate_spec(1.0), 80, {eta, 99});
    for (int i = 0; i < 80; ++i)
        CHECK(euclidean_distance(clean.cloud[i], noisy.cloud[i]) <= eta + 1e-12);
    // deterministic in the seed
    const auto again = sample_shape(lemniscate_spec(1.0), 80, {eta, 99});
    CHECK(noisy.cloud.points == again.cloud.points);
}

TEST_CASE("geodesic distances on the built-in shapes") {
    const ShapeSpec circle = circle_spec(1.0);
    CHECK(geodesic_distance(circle, {1, 0}, {-1, 0}) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK_THROWS_AS(geodesic_distance(circle, {2, 0}, {1, 0}), std::invalid_argument);

    const ShapeSpec square = square_spec();
    CHECK(geodesic_distance(square, {0, 0}, {1, 0}) == doctest::Approx(1.0).epsilon(1e-12));
    // opposite corners: both ways around measure 2
    CHECK(geodesic_distance(square, {0, 0}, {1, 1}) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(geodesic_distance(square, {0.5, 0}, {0.5, 1}) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("length metric sits between the Euclidean metric and delta times it") {
    Rng rng(5);
    for (const ShapeSpec& spec : {circle_spec(1.0), lemniscate_spec(1.0), square_spec(),
                                  theta_spec()}) {
        const double total = shape_total_length(spec);
        for (int trial = 0; trial < 200; ++trial) {
            const double s = rng.uniform(0.0, total);
            const double t = rng.uniform(0.0, total);
            const double dl = geodesic_distance_at(spec, s, t);
            const double de = euclidean_distance(shape_point_at(spec, s),
                                                 shape_point_at(spec, t));
            CHECK(dl >= de - 1e-9);
            CHECK(dl <= spec.distortion * de + 1e-9);
        }
    }
}

TEST_CASE("circle distortion approaches pi/2 at near-antipodal pairs") {
    const ShapeSpec circle = circle_spec(1.0);
    Rng rng(13);
    double max_ratio = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const double s = rng.uniform(0.0, 2.0 * kPi);
        const double t = rng.uniform(0.0, 2.0 * kPi);
        const double de =
            euclidean_distance(shape_point_at(circle, s), shape_point_at(circle, t));
        if (de < 1e-9) continue;
        max_ratio = std::max(max_ratio, geodesic_distance_at(circle, s, t) / de);
    }
    CHECK(max_ratio <= kPi / 2.0 + 1e-9);
    CHECK(estimate_distortion(circle, 200, 3) == doctest::Approx(kPi / 2).epsilon(1e-4));
}

TEST_CASE("sampling condition checks evaluate the theorem inequality chains") {
    const ShapeSpec circle = circle_spec(1.0);  // delta = rho = pi/2

    const auto rips_ok = verify_sampling_condition(circle, 0.026, 0.25, TheoremKind::rips);
    CHECK(rips_ok.pass);
    CHECK(rips_ok.mid == doctest::Approx(0.0625).epsilon(1e-15));
    CHECK(rips_ok.rhs == doctest::Approx(1.0 / (3.0 * kPi + 4.0)).epsilon(1e-12));

    const auto rips_bad = verify_sampling_condition(circle, 0.026, 0.31, TheoremKind::rips);
    CHECK_FALSE(rips_bad.pass);
    CHECK(rips_bad.failure == "eps/4 >= rho/(2*delta*(3*delta+2))");

    const auto zero_noise = verify_sampling_condition(circle, 0.0, 0.25, TheoremKind::rips);
    CHECK(zero_noise.pass);

    const auto cech = verify_sampling_condition(circle, 0.026, 0.06, TheoremKind::cech);
    CHECK(cech.pass);
    CHECK(cech.rhs == doctest::Approx(1.0 / (2.0 * (2.0 * kPi + 1.0))).epsilon(1e-12));

    // the graph theorem needs a shortest cycle
    GraphShape path;
    path.vertices = {{0, 0}, {1, 0}, {2, 0}};
    path.edges = {{{0, 1}}, {{1, 2}}};
    const ShapeSpec tree = graph_spec(std::move(path), 1.0);
    CHECK_FALSE(tree.shortest_cycle.has_value());
    CHECK_THROWS_AS(verify_sampling_condition(tree, 0.01, 0.1, TheoremKind::graph),
                    std::invalid_argument);
    CHECK(verify_sampling_condition(circle, 0.01, 0.1, TheoremKind::graph).pass);
}
