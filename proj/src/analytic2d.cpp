#include "shapemetric/analytic2d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "shapemetric/constants.hpp"
#include "shapemetric/gauss.hpp"
#include "shapemetric/oracles.hpp"

namespace shapemetric {

namespace {

constexpr double PI = 3.14159265358979323846;

double wrap_angle(double a) {
    a = std::fmod(a, 2 * PI);
    if (a < 0) a += 2 * PI;
    if (a >= 2 * PI) a = 0;
    return a;
}

void hull_edge_normals(const std::vector<Vec>& verts, std::vector<double>& out) {
    std::vector<Vec> hull = convex_hull_2d(verts);
    const std::size_t m = hull.size();
    auto push = [&](const Vec& a, const Vec& b) {
        Vec e = vsub(b, a);
        if (norm(e) < 1e-300) return;
        out.push_back(wrap_angle(std::atan2(-e[0], e[1])));
    };
    if (m == 2) {
        push(hull[0], hull[1]);
        push(hull[1], hull[0]);
    } else if (m >= 3) {
        for (std::size_t i = 0; i < m; ++i) push(hull[i], hull[(i + 1) % m]);
    }
}

void collect_kinks(const BodyDescriptor& body, std::vector<double>& out) {
    switch (body.kind) {
        case BodyDescriptor::Kind::Point:
        case BodyDescriptor::Kind::Ball:
            return;
        case BodyDescriptor::Kind::Segment:
        case BodyDescriptor::Kind::Polytope:
            hull_edge_normals(body.vertices, out);
            return;
        case BodyDescriptor::Kind::Ellipsoid: {
            // smooth unless the shape matrix is singular, in which case the
            // body is a segment and h kinks where the quadratic form vanishes
            double a = body.shape.m[0], b = body.shape.m[1], c = body.shape.m[4];
            double tr = std::fabs(a) + std::fabs(c);
            if (a * c - b * b > 1e-12 * std::max(tr * tr, 1e-300)) return;
            Vec nullv = (std::fabs(a) + std::fabs(b) >= std::fabs(b) + std::fabs(c))
                            ? Vec{-b, a, 0}
                            : Vec{-c, b, 0};
            if (norm(nullv) < 1e-300) return;  // zero matrix, h is linear
            double ang = std::atan2(nullv[1], nullv[0]);
            out.push_back(wrap_angle(ang));
            out.push_back(wrap_angle(ang + PI));
            return;
        }
        case BodyDescriptor::Kind::HalfEllipse:
            out.push_back(PI / 2);
            out.push_back(PI);
            out.push_back(3 * PI / 2);
            return;
        case BodyDescriptor::Kind::Combination:
            for (std::size_t i = 0; i < body.parts.size(); ++i)
                if (body.weights[i] > 0) collect_kinks(body.parts[i], out);
            return;
        case BodyDescriptor::Kind::Moved: {
            std::vector<double> inner;
            collect_kinks(body.parts[0], inner);
            for (double a : inner) {
                Vec u = body.rotation.apply({std::cos(a), std::sin(a), 0});
                out.push_back(wrap_angle(std::atan2(u[1], u[0])));
            }
            return;
        }
    }
}

std::vector<double> merge_breaks(std::vector<double> angles) {
    std::sort(angles.begin(), angles.end());
    std::vector<double> out;
    for (double a : angles)
        if (out.empty() || a - out.back() > 1e-12) out.push_back(a);
    // a break at ~2pi duplicates one at ~0
    if (out.size() > 1 && (2 * PI - out.back()) + out.front() < 1e-12) out.pop_back();
    return out;
}

}  // namespace

Analytic2D analyze_2d(const BodyDescriptor& body) {
    if (body.dim != 2) throw std::invalid_argument("analyze_2d: body must be 2-dimensional");
    Analytic2D a;
    a.body = body;
    std::vector<double> raw;
    collect_kinks(body, raw);
    a.kinks = merge_breaks(std::move(raw));
    return a;
}

double support_at(const BodyDescriptor& body, double theta) {
    return eval_support(body, {std::cos(theta), std::sin(theta), 0});
}

double support_deriv_at(const BodyDescriptor& body, double theta) {
    // envelope rule: h'(theta) = <u'(theta), argmax point>
    Vec p = support_point(body, {std::cos(theta), std::sin(theta), 0});
    return -std::sin(theta) * p[0] + std::cos(theta) * p[1];
}

double integrate_circle(const std::vector<double>& breaks,
                        const std::function<double(double)>& f) {
    static std::vector<double> gx, gw;
    if (gx.empty()) gauss_legendre(32, gx, gw);

    std::vector<double> arcs;  // consecutive endpoints, increasing
    if (breaks.empty()) {
        arcs = {0.0, 2 * PI};
    } else {
        arcs = breaks;
        arcs.push_back(breaks.front() + 2 * PI);
    }

    const double max_arc = 2 * PI / 64;
    double total = 0;
    for (std::size_t i = 0; i + 1 < arcs.size(); ++i) {
        double lo = arcs[i], hi = arcs[i + 1];
        int nseg = std::max(1, int(std::ceil((hi - lo) / max_arc)));
        double step = (hi - lo) / nseg;
        for (int s = 0; s < nseg; ++s) {
            double a = lo + s * step, mid = a + 0.5 * step, half = 0.5 * step;
            for (std::size_t q = 0; q < gx.size(); ++q)
                total += half * gw[q] * f(mid + half * gx[q]);
        }
    }
    return total;
}

double analytic_v1(const Analytic2D& a) {
    double ih = integrate_circle(a.kinks, [&](double t) { return support_at(a.body, t); });
    return ih / kappa_m(1);
}

Vec analytic_steiner(const Analytic2D& a) {
    double sx = integrate_circle(
        a.kinks, [&](double t) { return support_at(a.body, t) * std::cos(t); });
    double sy = integrate_circle(
        a.kinks, [&](double t) { return support_at(a.body, t) * std::sin(t); });
    return {sx / kappa_m(2), sy / kappa_m(2), 0};
}

double analytic_v2(const Analytic2D& a) { return analytic_v2_pair(a, a); }

double analytic_v2_pair(const Analytic2D& a, const Analytic2D& b) {
    std::vector<double> breaks = a.kinks;
    breaks.insert(breaks.end(), b.kinks.begin(), b.kinks.end());
    breaks = merge_breaks(std::move(breaks));
    return 0.5 * integrate_circle(breaks, [&](double t) {
        return support_at(a.body, t) * support_at(b.body, t) -
               support_deriv_at(a.body, t) * support_deriv_at(b.body, t);
    });
}

}  // namespace shapemetric
