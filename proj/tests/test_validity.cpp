#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "shapemetric/body.hpp"
#include "shapemetric/field.hpp"
#include "shapemetric/forms.hpp"
#include "shapemetric/grid.hpp"
#include "shapemetric/lift.hpp"
#include "shapemetric/random_bodies.hpp"
#include "shapemetric/rng.hpp"
#include "shapemetric/validity.hpp"

using namespace shapemetric;

namespace {

constexpr double PI = 3.14159265358979323846;

BodyDescriptor unit_square() {
    return make_polytope(
        2, {Vec{0.5, 0.5, 0}, Vec{-0.5, 0.5, 0}, Vec{-0.5, -0.5, 0}, Vec{0.5, -0.5, 0}});
}

BodyDescriptor unit_cube() {
    std::vector<Vec> v;
    for (int s = 0; s < 8; ++s)
        v.push_back(Vec{s & 1 ? 0.5 : -0.5, s & 2 ? 0.5 : -0.5, s & 4 ? 0.5 : -0.5});
    return make_polytope(3, std::move(v));
}

// side-of-probe monotonicity: on each side of [0,1] every valid probe
// lies closer to the interval than every invalid one
void check_probe_order(const TerminalInterval& ti) {
    double hi_valid = 1.0, hi_invalid = 1e300;
    double lo_valid = 0.0, lo_invalid = -1e300;
    for (const auto& [t, ok] : ti.probes) {
        if (t > 1.0) (ok ? hi_valid : hi_invalid) = ok ? std::max(hi_valid, t)
                                                       : std::min(hi_invalid, t);
        if (t < 0.0) (ok ? lo_valid : lo_invalid) = ok ? std::min(lo_valid, t)
                                                       : std::max(lo_invalid, t);
    }
    CHECK(hi_valid <= hi_invalid);
    CHECK(lo_valid >= lo_invalid);
}

}  // namespace

TEST_CASE("sampled convex bodies pass the validity test") {
    SplitMix64 rng(81);
    GridPtr g2 = build_grid(2, 512);
    for (int k = 0; k < 190; ++k) {
        ValidityVerdict v = is_support_function(sample_body(random_body2(rng), g2));
        CHECK(v.valid);
    }
    GridPtr g3 = build_grid(3, 32);
    for (int k = 0; k < 10; ++k) {
        ValidityVerdict v = is_support_function(sample_body(random_body3(rng), g3));
        CHECK(v.valid);
    }
}

TEST_CASE("a second harmonic with a big coefficient is no support function") {
    GridPtr g = build_grid(2, 256);
    SupportField f;
    f.grid = g;
    f.values.resize(g->nodes.size());
    for (std::size_t i = 0; i < f.values.size(); ++i)
        f.values[i] = 1.0 + 0.9 * std::cos(2 * g->theta[i]);
    ValidityVerdict v = is_support_function(f);
    CHECK(!v.valid);
    CHECK(v.worst_violation > 0);
    CHECK(v.witness_index >= 0);
    // radius of curvature h + h'' = 1 - 2.7 cos(2 theta) bottoms out at -1.7
    CHECK(v.worst_violation == doctest::Approx(1.7).epsilon(1e-2));
}

TEST_CASE("eroding a corner body breaks convexity of the support") {
    GridPtr g2 = default_grid(2);
    SupportField sq = sample_body(unit_square(), g2);
    SupportField ball = sample_body(make_ball(2, Vec{0, 0, 0}, 1.0), g2);
    CHECK(is_support_function(sq).valid);
    for (double eps : {1e-3, 1e-2, 1e-1}) {
        SupportField eroded = combine_fields(1.0, sq, -eps, ball);
        CHECK(!is_support_function(eroded).valid);
    }

    GridPtr g3 = default_grid(3);
    SupportField cube = sample_body(unit_cube(), g3);
    SupportField ball3 = sample_body(make_ball(3, Vec{0, 0, 0}, 1.0), g3);
    CHECK(is_support_function(cube).valid);
    SupportField eroded3 = combine_fields(1.0, cube, -0.05, ball3);
    CHECK(!is_support_function(eroded3).valid);
}

TEST_CASE("validity test prerequisites") {
    GridPtr g3 = build_grid(3, 16);
    SupportField f = sample_body(make_ball(3, Vec{0, 0, 0}, 1.0), g3);
    f.has_gradients = false;
    f.gradients.clear();
    CHECK_THROWS_AS(is_support_function(f), std::invalid_argument);

    GridPtr base = build_grid(2, 64);
    auto warped = std::make_shared<SphereGrid>(*base);
    warped->theta[3] += 1e-3;
    SupportField g;
    g.grid = warped;
    g.values.assign(warped->nodes.size(), 1.0);
    CHECK_THROWS_AS(is_support_function(g), std::invalid_argument);
}

TEST_CASE("terminal interval of the disc-to-segment path") {
    GridPtr g2 = default_grid(2);
    BodyDescriptor disc = make_ball(2, Vec{0, 0, 0}, 1.0);
    BodyDescriptor seg = make_segment(2, Vec{-1, 0, 0}, Vec{1, 0, 0});
    TerminalInterval ti = terminal_extension(disc, seg, g2, 0.0, true);
    CHECK(ti.t_min <= 0.0);
    CHECK(ti.t_max >= 1.0);
    CHECK(std::fabs(ti.t_min) < 1e-3);
    CHECK(std::fabs(ti.t_max - 1.0) < 1e-3);
    CHECK(!ti.capped_min);
    CHECK(!ti.capped_max);
    CHECK(ti.probes.size() > 4);
    check_probe_order(ti);

    // boundary endpoints need the explicit flag, and a point cannot be
    // normalized even with it
    CHECK_THROWS_AS(terminal_extension(disc, seg, g2), std::domain_error);
    BodyDescriptor pt = make_point(2, Vec{0.3, -0.1, 0});
    CHECK_THROWS_AS(terminal_extension(disc, pt, g2, 0.0, true), std::domain_error);
}

TEST_CASE("identical endpoints extend to the probe bounds") {
    GridPtr g2 = default_grid(2);
    BodyDescriptor disc = make_ball(2, Vec{0, 0, 0}, 1.0);
    TerminalInterval ti = terminal_extension(disc, disc, g2);
    CHECK(ti.capped_min);
    CHECK(ti.capped_max);
    CHECK(ti.t_min == doctest::Approx(-8.0));
    CHECK(ti.t_max == doctest::Approx(9.0));
}

TEST_CASE("flat disc against the round ball is terminal") {
    GridPtr g3 = default_grid(3);
    Mat3 flat = Mat3::identity();
    flat.m[8] = 0.0;
    BodyDescriptor disc3 = make_ellipsoid(3, Vec{0, 0, 0}, flat);
    BodyDescriptor ball3 = make_ball(3, Vec{0, 0, 0}, 1.0);
    TerminalInterval ti = terminal_extension(disc3, ball3, g3);
    CHECK(!ti.capped_min);
    CHECK(!ti.capped_max);
    CHECK(std::fabs(ti.t_min) < 1e-3);
    CHECK(ti.t_max >= 1.0);
    CHECK(ti.t_max < 1.02);
    check_probe_order(ti);
}

TEST_CASE("the lifted square matches its direct embedding") {
    GridPtr g2 = build_grid(2, 128);
    GridPtr g3 = default_grid(3);
    Vec axis{1 / std::sqrt(14.0), 2 / std::sqrt(14.0), 3 / std::sqrt(14.0)};
    Mat3 frame = Mat3::axis_angle(axis, 0.7);
    SupportField f2 = sample_body(unit_square(), g2);
    SupportField lifted = embed_lift(f2, frame, g3);

    BodyDescriptor flat_sq = transform(
        make_polytope(3, {Vec{0.5, 0.5, 0}, Vec{-0.5, 0.5, 0}, Vec{-0.5, -0.5, 0},
                          Vec{0.5, -0.5, 0}}),
        frame, Vec{0, 0, 0});
    SupportField direct = sample_body(flat_sq, g3);
    CHECK(sup_diff(lifted, direct) < 1e-8);
}

TEST_CASE("lifting preserves the intrinsic volumes of smooth bodies") {
    SplitMix64 rng(82);
    // azimuth count of the sphere grid equals the circle resolution, so the
    // equator sees the same angles the plane grid does
    GridPtr g2 = build_grid(2, 128);
    GridPtr g3 = build_grid(3, 64);
    for (int k = 0; k < 10; ++k) {
        BodyDescriptor ell = random_ellipse(rng);
        Mat3 frame = Mat3::axis_angle(Vec{0, 0, 1}, rng.uniform(0, 2 * PI));
        SupportField f2 = sample_body(ell, g2);
        SupportField f3 = embed_lift(f2, frame, g3);
        FormReport a = form_report(f2);
        FormReport b = form_report(f3);
        CHECK(std::fabs(a.v1 - b.v1) < 1e-8);
        CHECK(std::fabs(a.v2 - b.v2) < 1e-6);
    }
}

TEST_CASE("lifting is linear on plain grid fields") {
    GridPtr g2 = build_grid(2, 128);
    GridPtr g3 = build_grid(3, 32);
    SplitMix64 rng(83);
    SupportField f = sample_body(random_body2(rng), g2);
    SupportField g = sample_body(random_body2(rng), g2);
    // drop the descriptors so both routes interpolate the same way
    f.source.reset();
    g.source.reset();
    Mat3 frame = Mat3::axis_angle(Vec{0.6, -0.8, 0}, 1.1);
    SupportField combo = combine_fields(0.7, f, 1.4, g);
    SupportField left = embed_lift(combo, frame, g3);
    SupportField right =
        combine_fields(0.7, embed_lift(f, frame, g3), 1.4, embed_lift(g, frame, g3));
    CHECK(sup_diff(left, right) < 1e-12);
}

TEST_CASE("lift argument checks") {
    GridPtr g2 = build_grid(2, 64);
    GridPtr g3 = build_grid(3, 16);
    SupportField f2 = sample_body(make_ball(2, Vec{0, 0, 0}, 1.0), g2);
    SupportField f3 = sample_body(make_ball(3, Vec{0, 0, 0}, 1.0), g3);
    CHECK_THROWS_AS(embed_lift(f3, Mat3::identity(), g3), std::invalid_argument);
    CHECK_THROWS_AS(embed_lift(f2, Mat3::identity(), g2), std::invalid_argument);
    Mat3 skew;
    skew.m = {1, 0.3, 0, 0, 1, 0, 0, 0, 1};
    CHECK_THROWS_AS(embed_lift(f2, skew, g3), std::invalid_argument);
}
