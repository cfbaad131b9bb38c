#include "shapemetric/random_bodies.hpp"

#include <cmath>

#include "shapemetric/oracles.hpp"

namespace shapemetric {

namespace {

constexpr double PI = 3.14159265358979323846;

Vec random_unit3(SplitMix64& rng) {
    for (;;) {
        Vec v{rng.normal(), rng.normal(), rng.normal()};
        double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if (n > 1e-6) return Vec{v[0] / n, v[1] / n, v[2] / n};
    }
}

}  // namespace

BodyDescriptor random_polygon(SplitMix64& rng, int min_verts, int max_verts) {
    for (;;) {
        int want = min_verts + int(rng.next() % std::uint64_t(max_verts - min_verts + 1));
        // Random directions with random radii, then hull. Oversample so the
        // hull keeps roughly the requested count.
        std::vector<Vec> pts;
        int raw = want + want / 2 + 2;
        for (int i = 0; i < raw; ++i) {
            double a = rng.uniform(0.0, 2.0 * PI);
            double r = rng.uniform(0.6, 1.4);
            pts.push_back(Vec{r * std::cos(a), r * std::sin(a), 0});
        }
        std::vector<Vec> hull = convex_hull_2d(pts);
        if (int(hull.size()) < min_verts || int(hull.size()) > max_verts) continue;

        double cx = rng.uniform(-0.5, 0.5), cy = rng.uniform(-0.5, 0.5);
        for (Vec& p : hull) { p[0] += cx; p[1] += cy; }
        BodyDescriptor body = make_polytope(2, hull);
        if (polygon_oracles(body).area > 1e-3) return body;
    }
}

BodyDescriptor random_polytope3(SplitMix64& rng, int min_verts, int max_verts) {
    for (;;) {
        int want = min_verts + int(rng.next() % std::uint64_t(max_verts - min_verts + 1));
        double ax = rng.uniform(0.6, 1.5), ay = rng.uniform(0.6, 1.5), az = rng.uniform(0.6, 1.5);
        std::vector<Vec> pts;
        for (int i = 0; i < want; ++i) {
            Vec u = random_unit3(rng);
            double r = rng.uniform(0.8, 1.2);
            pts.push_back(Vec{ax * r * u[0], ay * r * u[1], az * r * u[2]});
        }
        BodyDescriptor body = make_polytope(3, pts);
        if (polyhedron_oracles(body).surface_area > 1e-2) return body;
    }
}

BodyDescriptor random_ellipse(SplitMix64& rng) {
    double a = rng.uniform(0.6, 1.8), b = rng.uniform(0.6, 1.8);
    double ang = rng.uniform(0.0, PI);
    Mat3 r = Mat3::rotation2d(ang);
    // shape = R diag(a^2, b^2) R^T, padded with a unit z entry so the
    // matrix stays invertible-looking; 2D code never reads that slot
    Mat3 d = Mat3::identity();
    d.m[0] = a * a;
    d.m[4] = b * b;
    Mat3 shape = r.mul(d).mul(r.transposed());
    Vec c{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5), 0};
    return make_ellipsoid(2, c, shape);
}

BodyDescriptor random_body2(SplitMix64& rng) {
    switch (rng.next() % 4) {
        case 0: return random_polygon(rng, 5, 12);
        case 1: return random_ellipse(rng);
        case 2: {
            Vec c{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5), 0};
            return make_ball(2, c, rng.uniform(0.5, 1.5));
        }
        default: {
            BodyDescriptor a = random_polygon(rng, 5, 10);
            BodyDescriptor b = (rng.next() % 2) ? random_ellipse(rng)
                                                : make_ball(2, Vec{0, 0, 0}, rng.uniform(0.3, 1.0));
            return make_combination({rng.uniform(0.3, 1.0), rng.uniform(0.3, 1.0)}, {a, b});
        }
    }
}

BodyDescriptor random_body3(SplitMix64& rng) {
    switch (rng.next() % 4) {
        case 0: return random_polytope3(rng, 8, 20);
        case 1: {
            double a = rng.uniform(0.6, 1.6), b = rng.uniform(0.6, 1.6), c = rng.uniform(0.6, 1.6);
            Mat3 r = random_rotation3(rng);
            Mat3 d = Mat3::identity();
            d.m[0] = a * a;
            d.m[4] = b * b;
            d.m[8] = c * c;
            Mat3 shape = r.mul(d).mul(r.transposed());
            Vec ctr{rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4)};
            return make_ellipsoid(3, ctr, shape);
        }
        case 2: {
            Vec ctr{rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4)};
            return make_ball(3, ctr, rng.uniform(0.5, 1.5));
        }
        default: {
            BodyDescriptor a = random_polytope3(rng, 8, 14);
            BodyDescriptor b = make_ball(3, Vec{0, 0, 0}, rng.uniform(0.3, 1.0));
            return make_combination({rng.uniform(0.3, 1.0), rng.uniform(0.3, 1.0)}, {a, b});
        }
    }
}

Mat3 random_rotation2(SplitMix64& rng) {
    return Mat3::rotation2d(rng.uniform(0.0, 2.0 * PI));
}

Mat3 random_rotation3(SplitMix64& rng) {
    for (;;) {
        double q[4];
        double norm2 = 0;
        for (double& c : q) { c = rng.normal(); norm2 += c * c; }
        if (norm2 < 1e-12) continue;
        double n = std::sqrt(norm2);
        return Mat3::from_quaternion(q[0] / n, q[1] / n, q[2] / n, q[3] / n);
    }
}

}  // namespace shapemetric
