#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "shapemetric/body.hpp"
#include "shapemetric/field.hpp"
#include "shapemetric/grid.hpp"
#include "shapemetric/random_bodies.hpp"
#include "shapemetric/rng.hpp"

using namespace shapemetric;

namespace {

constexpr double PI = 3.14159265358979323846;

double integral(const SphereGrid& g, const std::vector<double>& f) {
    double acc = 0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += g.weights[i] * f[i];
    return acc;
}

double integral(const SupportField& f) { return integral(*f.grid, f.values); }

}  // namespace

TEST_CASE("weights integrate constants exactly") {
    GridPtr g2 = build_grid(2, 16);
    double s2 = 0;
    for (double w : g2->weights) s2 += w;
    CHECK(std::fabs(s2 - 2 * PI) < 1e-12);

    GridPtr g3 = build_grid(3, 32);
    double s3 = 0;
    for (double w : g3->weights) s3 += w;
    CHECK(std::fabs(s3 - 4 * PI) < 1e-10);
}

TEST_CASE("trig integrals on the circle grid are exact") {
    GridPtr g = build_grid(2, 64);
    std::vector<double> c2(g->nodes.size());
    for (std::size_t i = 0; i < c2.size(); ++i) {
        double c = std::cos(g->theta[i]);
        c2[i] = c * c;
    }
    CHECK(std::fabs(integral(*g, c2) - PI) < 1e-12);
}

TEST_CASE("linear and quadratic moments are integrated exactly") {
    for (int n : {2, 3}) {
        GridPtr g = n == 2 ? build_grid(2, 256) : build_grid(3, 24);
        double sphere = 0;
        for (double w : g->weights) sphere += w;
        for (int a = 0; a < n; ++a) {
            double m1 = 0;
            for (std::size_t i = 0; i < g->nodes.size(); ++i) m1 += g->weights[i] * g->nodes[i][a];
            CHECK(std::fabs(m1) < 1e-10);
            for (int b = 0; b < n; ++b) {
                double m2 = 0;
                for (std::size_t i = 0; i < g->nodes.size(); ++i)
                    m2 += g->weights[i] * g->nodes[i][a] * g->nodes[i][b];
                CHECK(std::fabs(m2 - (a == b ? sphere / n : 0.0)) < 1e-10);
            }
        }
    }
}

TEST_CASE("grid layout fields are consistent") {
    GridPtr g2 = build_grid(2, 32);
    CHECK(g2->theta.size() == 32);
    for (int i = 0; i < 32; ++i) {
        CHECK(g2->theta[i] == doctest::Approx(2 * PI * i / 32).epsilon(1e-15));
        CHECK(std::fabs(norm(g2->nodes[i]) - 1.0) < 1e-14);
    }

    GridPtr g3 = build_grid(3, 16);
    CHECK(g3->n_polar == 16);
    CHECK(g3->n_azimuth == 32);
    CHECK(g3->nodes.size() == std::size_t(16 * 32));
    for (const Vec& u : g3->nodes) CHECK(std::fabs(norm(u) - 1.0) < 1e-14);

    CHECK(g2->same_layout(*build_grid(2, 32)));
    CHECK(!g2->same_layout(*build_grid(2, 64)));
    CHECK(!g2->same_layout(*g3));
}

TEST_CASE("bad grid parameters are rejected") {
    CHECK_THROWS_AS(build_grid(4, 64), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(2, 100), std::invalid_argument);  // not a power of two
    CHECK_NOTHROW(build_grid(3, 100));
    CHECK(default_grid(2)->resolution == kDefaultResolution2d);
    CHECK(default_grid(3)->resolution == kDefaultResolution3d);
}

TEST_CASE("sampled fields of the standard bodies") {
    GridPtr g = build_grid(2, 512);
    SupportField ball = sample_body(make_ball(2, Vec{0, 0, 0}, 1.0), g);
    REQUIRE(ball.has_gradients);
    for (std::size_t i = 0; i < ball.values.size(); ++i) {
        CHECK(std::fabs(ball.values[i] - 1.0) < 1e-14);
        CHECK(norm(ball.gradients[i]) < 1e-13);
    }

    SupportField seg = sample_body(make_segment(2, Vec{-1, 0, 0}, Vec{1, 0, 0}), g);
    for (std::size_t i = 0; i < seg.values.size(); ++i) {
        double t = g->theta[i];
        CHECK(std::fabs(seg.values[i] - std::fabs(std::cos(t))) < 1e-13);
        CHECK(std::fabs(norm(seg.gradients[i]) - std::fabs(std::sin(t))) < 1e-12);
        // gradients are tangential
        CHECK(std::fabs(dot(seg.gradients[i], g->nodes[i])) < 1e-12);
    }
}

TEST_CASE("sup distance sees a uniform enlargement exactly") {
    GridPtr g = build_grid(2, 256);
    BodyDescriptor sq = make_polytope(
        2, {Vec{0.5, 0.5, 0}, Vec{-0.5, 0.5, 0}, Vec{-0.5, -0.5, 0}, Vec{0.5, -0.5, 0}});
    BodyDescriptor fat = make_combination({1.0, 0.125}, {sq, make_ball(2, Vec{0, 0, 0}, 1.0)});
    SupportField f = sample_body(sq, g);
    SupportField h = sample_body(fat, g);
    CHECK(sup_diff(f, h) == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("integration is rotation invariant") {
    SplitMix64 rng(31);
    GridPtr g2 = default_grid(2);
    BodyDescriptor poly = random_polygon(rng, 5, 9);
    double base2 = integral(sample_body(poly, g2));
    for (int k = 0; k < 5; ++k) {
        Mat3 R = random_rotation2(rng);
        double v = integral(sample_body(transform(poly, R, Vec{0, 0, 0}), g2));
        // kink quadrature error grows with the polygon, so the band does too
        CHECK(std::fabs(v - base2) < 1e-6 * (1.0 + base2));
    }

    GridPtr g3 = default_grid(3);
    Mat3 e3;
    e3.m = {1.2, 0.1, 0, 0.1, 0.8, 0, 0, 0, 0.6};
    BodyDescriptor ell = make_ellipsoid(3, Vec{0, 0, 0}, e3);
    double base3 = integral(sample_body(ell, g3));
    for (int k = 0; k < 5; ++k) {
        Mat3 R = random_rotation3(rng);
        double v = integral(sample_body(transform(ell, R, Vec{0, 0, 0}), g3));
        CHECK(std::fabs(v - base3) < 1e-6);
    }
}

TEST_CASE("field metrics vanish only on identical fields") {
    GridPtr g = build_grid(2, 128);
    SupportField f = sample_body(make_ball(2, Vec{0.1, 0, 0}, 1.0), g);
    SupportField h = f;
    CHECK(sup_diff(f, h) == 0.0);
    CHECK(dist_l2(f, h) == 0.0);
    CHECK(dist_h1(f, h) == 0.0);
    h.values[7] += 1e-9;
    CHECK(sup_diff(f, h) > 0.0);
    CHECK(dist_l2(f, h) > 0.0);
    CHECK(dist_h1(f, h) > 0.0);
}
