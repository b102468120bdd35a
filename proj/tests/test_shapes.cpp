#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "recon/shapes.hpp"

#include <cmath>

using namespace recon;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("registry Betti numbers come from the crossing/Euler oracle") {
    CHECK(shape_beta1(circle_spec(1.0)) == 1);
    CHECK(shape_beta1(lemniscate_spec(1.0)) == 2);
    CHECK(shape_beta1(lissajous_spec(1.0)) == 8);
    CHECK(shape_beta1(square_spec()) == 1);
    CHECK(shape_beta1(figure_eight_spec()) == 2);
    CHECK(shape_beta1(theta_spec()) == 2);

    CHECK(curve_crossings(circle_spec(1.0)) == 0);
    CHECK(curve_crossings(lemniscate_spec(1.0)) == 1);
    CHECK(curve_crossings(lissajous_spec(1.0)) == 7);
    CHECK_THROWS_AS(curve_crossings(square_spec()), std::invalid_argument);
}

TEST_CASE("shortest cycles and convexity radii") {
    const ShapeSpec circle = circle_spec(2.0);
    CHECK(*circle.shortest_cycle == doctest::Approx(4.0 * kPi).epsilon(1e-12));
    CHECK(circle.convexity_radius == doctest::Approx(kPi).epsilon(1e-12));

    CHECK(*square_spec().shortest_cycle == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(*figure_eight_spec().shortest_cycle == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(*theta_spec().shortest_cycle == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(theta_spec().convexity_radius == doctest::Approx(1.0).epsilon(1e-12));

    // lemniscate lobes split the curve in half
    const ShapeSpec lem = lemniscate_spec(1.0);
    CHECK(*lem.shortest_cycle ==
          doctest::Approx(shape_total_length(lem) / 2.0).epsilon(1e-9));
    CHECK(lem.convexity_radius == doctest::Approx(*lem.shortest_cycle / 4.0).epsilon(1e-15));

    // b scales linearly with the curve scale
    const ShapeSpec lem3 = lemniscate_spec(3.0);
    CHECK(*lem3.shortest_cycle == doctest::Approx(3.0 * *lem.shortest_cycle).epsilon(1e-9));
}

TEST_CASE("total lengths") {
    CHECK(shape_total_length(circle_spec(1.5)) == doctest::Approx(3.0 * kPi).epsilon(1e-12));
    CHECK(shape_total_length(square_spec()) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(shape_total_length(figure_eight_spec()) == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(shape_total_length(theta_spec()) == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(shape_total_length(lemniscate_spec(1.0)) ==
          doctest::Approx(5.2441151086).epsilon(1e-9));
}

TEST_CASE("registry distortion values dominate the estimator") {
    // polygonal shapes have distortion exactly 2
    CHECK(estimate_distortion(square_spec(), 200, 1) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(estimate_distortion(figure_eight_spec(), 200, 1) ==
          doctest::Approx(2.0).epsilon(1e-6));
    CHECK(estimate_distortion(theta_spec(), 200, 1) == doctest::Approx(2.0).epsilon(1e-6));

    // numerically derived registry values keep a safety margin
    const double lem = estimate_distortion(lemniscate_spec(1.0), 300, 1);
    CHECK(lem > 1.8);
    CHECK(lem < lemniscate_spec(1.0).distortion);
    const double lis = estimate_distortion(lissajous_spec(1.0), 300, 1);
    CHECK(lis > 3.0);
    CHECK(lis < lissajous_spec(1.0).distortion);
}

TEST_CASE("arc positions invert shape points") {
    for (const ShapeSpec& spec : {lemniscate_spec(1.0), lissajous_spec(1.0), theta_spec()}) {
        const double total = shape_total_length(spec);
        std::vector<Point> pts;
        std::vector<double> pos;
        for (int i = 0; i < 24; ++i) {
            pos.push_back(i * total / 24.0 + 0.01);
            pts.push_back(shape_point_at(spec, pos.back()));
        }
        const auto located = shape_positions(spec, make_cloud(pts));
        for (int i = 0; i < 24; ++i) {
            const Point back = shape_point_at(spec, located[i]);
            CHECK(euclidean_distance(back, pts[i]) < 1e-7);
        }
    }
}

TEST_CASE("points near a crossing locate onto their own branch") {
    const ShapeSpec lem = lemniscate_spec(1.0);
    // arc position of the crossing itself
    const double s_cross = shape_positions(lem, make_cloud({{0.0, 0.0}}))[0];
    for (double off : {1e-4, 2e-4, 5e-4, 1e-3, 5e-3}) {
        const Point x = shape_point_at(lem, s_cross + off);
        const double s = shape_positions(lem, make_cloud({x}))[0];
        CHECK(euclidean_distance(shape_point_at(lem, s), x) < 1e-7);
        // the two-sided distance through the crossing is about 2*off
        const Point y = shape_point_at(lem, s_cross - off);
        CHECK(geodesic_distance(lem, x, y) == doctest::Approx(2 * off).epsilon(0.05));
    }
}

TEST_CASE("coordinate and position forms of the length metric agree") {
    const ShapeSpec lem = lemniscate_spec(1.0);
    const double total = shape_total_length(lem);
    for (int i = 0; i < 12; ++i) {
        const double s = 0.03 + i * total / 12.0;
        const double t = 0.21 + i * total / 17.0;
        const Point x = shape_point_at(lem, s);
        const Point y = shape_point_at(lem, t);
        CHECK(geodesic_distance(lem, x, y) ==
              doctest::Approx(geodesic_distance_at(lem, s, t)).epsilon(1e-6));
    }
}

TEST_CASE("graph sampling stays on the graph with balanced spacing") {
    const ShapeSpec square = square_spec();
    const auto sample = sample_shape(square, 40, {});
    CHECK(sample.cloud.size() == 40);
    for (const Point& p : sample.cloud.points) {
        const bool on_edge = p[0] == 0.0 || p[0] == 1.0 || p[1] == 0.0 || p[1] == 1.0;
        CHECK(on_edge);
    }
    CHECK_THROWS_AS(sample_shape(square, 3, {}), std::invalid_argument);
}

TEST_CASE("custom lissajous specs derive their cycle data") {
    const ShapeSpec custom = lissajous_spec(1.0, 2, 1, 0.4, 3.0);
    CHECK(curve_crossings(custom) == 1);
    CHECK(shape_beta1(custom) == 2);
    CHECK(custom.shortest_cycle.has_value());
    CHECK(custom.convexity_radius == doctest::Approx(*custom.shortest_cycle / 4).epsilon(1e-15));
}
