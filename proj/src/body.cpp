#include "shapemetric/body.hpp"

#include <cmath>
#include <stdexcept>

#include "shapemetric/gauss.hpp"

namespace shapemetric {

namespace {
const double PI = 3.14159265358979323846;

// Support of the raw half-ellipse in closed form. The ellipse part has
// shape matrix diag(2, 1/2); for directions pointing into x < 0 the
// maximizer is an endpoint of the flat side {0} x [-1/sqrt(2), 1/sqrt(2)].
double half_ellipse_support(const Vec& u) {
    if (u[0] >= 0.0) return std::sqrt(2.0 * u[0] * u[0] + 0.5 * u[1] * u[1]);
    return std::fabs(u[1]) / std::sqrt(2.0);
}

Vec half_ellipse_point(const Vec& u) {
    if (u[0] >= 0.0) {
        double h = std::sqrt(2.0 * u[0] * u[0] + 0.5 * u[1] * u[1]);
        if (h < 1e-300) return {0, 0, 0};
        return {2.0 * u[0] / h, 0.5 * u[1] / h, 0};
    }
    double y = (u[1] >= 0.0) ? 1.0 : -1.0;
    return {0, y / std::sqrt(2.0), 0};
}
}  // namespace

double eval_support(const BodyDescriptor& body, const Vec& u) {
    switch (body.kind) {
        case BodyDescriptor::Kind::Point:
            return dot(u, body.vertices[0]);
        case BodyDescriptor::Kind::Segment:
            return std::max(dot(u, body.vertices[0]), dot(u, body.vertices[1]));
        case BodyDescriptor::Kind::Polytope: {
            double best = dot(u, body.vertices[0]);
            for (std::size_t i = 1; i < body.vertices.size(); ++i)
                best = std::max(best, dot(u, body.vertices[i]));
            return best;
        }
        case BodyDescriptor::Kind::Ball:
            return body.radius + dot(u, body.center);
        case BodyDescriptor::Kind::Ellipsoid: {
            Vec su = body.shape.apply(u);
            double q = dot(u, su);
            return std::sqrt(std::max(q, 0.0)) + dot(u, body.center);
        }
        case BodyDescriptor::Kind::Combination: {
            double s = 0;
            for (std::size_t i = 0; i < body.parts.size(); ++i)
                s += body.weights[i] * eval_support(body.parts[i], u);
            return s;
        }
        case BodyDescriptor::Kind::Moved: {
            Vec v = body.rotation.apply_transposed(u);
            return body.scale * eval_support(body.parts[0], v) + dot(body.translation, u);
        }
        case BodyDescriptor::Kind::HalfEllipse:
            return half_ellipse_support(u);
    }
    throw std::logic_error("eval_support: unknown kind");
}

Vec support_point(const BodyDescriptor& body, const Vec& u) {
    switch (body.kind) {
        case BodyDescriptor::Kind::Point:
            return body.vertices[0];
        case BodyDescriptor::Kind::Segment:
        case BodyDescriptor::Kind::Polytope: {
            // lowest index among maximizers within 1e-10, for determinism
            double best = dot(u, body.vertices[0]);
            for (std::size_t i = 1; i < body.vertices.size(); ++i)
                best = std::max(best, dot(u, body.vertices[i]));
            for (std::size_t i = 0; i < body.vertices.size(); ++i)
                if (dot(u, body.vertices[i]) >= best - 1e-10) return body.vertices[i];
            return body.vertices[0];
        }
        case BodyDescriptor::Kind::Ball:
            return vadd(body.center, vscale(body.radius, u));
        case BodyDescriptor::Kind::Ellipsoid: {
            Vec su = body.shape.apply(u);
            double q = dot(u, su);
            if (q <= 0.0) return body.center;
            return vadd(body.center, vscale(1.0 / std::sqrt(q), su));
        }
        case BodyDescriptor::Kind::Combination: {
            Vec p{0, 0, 0};
            for (std::size_t i = 0; i < body.parts.size(); ++i)
                p = vadd(p, vscale(body.weights[i], support_point(body.parts[i], u)));
            return p;
        }
        case BodyDescriptor::Kind::Moved: {
            Vec v = body.rotation.apply_transposed(u);
            Vec p = support_point(body.parts[0], v);
            return vadd(body.rotation.apply(vscale(body.scale, p)), body.translation);
        }
        case BodyDescriptor::Kind::HalfEllipse:
            return half_ellipse_point(u);
    }
    throw std::logic_error("support_point: unknown kind");
}

BodyDescriptor transform(const BodyDescriptor& body, const Mat3& rot, const Vec& trans,
                         double scale) {
    if (!is_orthogonal(rot)) throw std::invalid_argument("transform: matrix is not orthogonal");
    if (scale < 0.0) throw std::invalid_argument("transform: negative scale");
    BodyDescriptor b;
    b.kind = BodyDescriptor::Kind::Moved;
    b.dim = body.dim;
    b.parts.push_back(body);
    b.rotation = rot;
    b.translation = trans;
    b.scale = scale;
    return b;
}

BodyDescriptor make_point(int dim, const Vec& p) {
    BodyDescriptor b;
    b.kind = BodyDescriptor::Kind::Point;
    b.dim = dim;
    b.vertices = {p};
    return b;
}

BodyDescriptor make_segment(int dim, const Vec& a, const Vec& b2) {
    BodyDescriptor b;
    b.kind = BodyDescriptor::Kind::Segment;
    b.dim = dim;
    b.vertices = {a, b2};
    return b;
}

BodyDescriptor make_polytope(int dim, std::vector<Vec> vertices) {
    if (vertices.empty()) throw std::invalid_argument("make_polytope: needs at least one vertex");
    BodyDescriptor b;
    b.kind = BodyDescriptor::Kind::Polytope;
    b.dim = dim;
    b.vertices = std::move(vertices);
    return b;
}

BodyDescriptor make_ball(int dim, const Vec& center, double radius) {
    if (radius < 0.0) throw std::invalid_argument("make_ball: negative radius");
    BodyDescriptor b;
    b.kind = BodyDescriptor::Kind::Ball;
    b.dim = dim;
    b.center = center;
    b.radius = radius;
    return b;
}

BodyDescriptor make_ellipsoid(int dim, const Vec& center, const Mat3& shape) {
    BodyDescriptor b;
    b.kind = BodyDescriptor::Kind::Ellipsoid;
    b.dim = dim;
    b.center = center;
    b.shape = shape;
    return b;
}

BodyDescriptor make_combination(std::vector<double> weights, std::vector<BodyDescriptor> parts) {
    if (weights.size() != parts.size() || parts.empty())
        throw std::invalid_argument("make_combination: weight/part count mismatch");
    for (double w : weights)
        if (w < 0.0) throw std::invalid_argument("make_combination: negative weight");
    BodyDescriptor b;
    b.kind = BodyDescriptor::Kind::Combination;
    b.dim = parts[0].dim;
    b.weights = std::move(weights);
    b.parts = std::move(parts);
    return b;
}

BodyDescriptor half_ellipse_raw() {
    BodyDescriptor b;
    b.kind = BodyDescriptor::Kind::HalfEllipse;
    b.dim = 2;
    return b;
}

namespace {
// alpha = v1(K) = (1/2) int k, beta = Steiner x = (1/pi) int k cos.
// The integrands are smooth on the arcs delimited by s = pi/2, pi,
// 3pi/2, so per-arc Gauss-Legendre is exact to machine precision.
void half_ellipse_constants(double& alpha, double& beta) {
    static double a_cached = 0, b_cached = 0;
    static bool ready = false;
    if (!ready) {
        std::vector<double> x, w;
        gauss_legendre(64, x, w);
        double ints[2] = {0, 0};  // int k, int k cos
        const double breaks[4] = {-PI / 2, PI / 2, PI, 3 * PI / 2};
        for (int seg = 0; seg < 3; ++seg) {
            double lo = breaks[seg], hi = breaks[seg + 1];
            double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
            for (std::size_t i = 0; i < x.size(); ++i) {
                double s = mid + half * x[i];
                Vec u{std::cos(s), std::sin(s), 0};
                double k = half_ellipse_support(u);
                ints[0] += w[i] * half * k;
                ints[1] += w[i] * half * k * u[0];
            }
        }
        a_cached = 0.5 * ints[0];
        b_cached = ints[1] / PI;
        ready = true;
    }
    alpha = a_cached;
    beta = b_cached;
}
}  // namespace

double half_ellipse_alpha() {
    double a, b;
    half_ellipse_constants(a, b);
    return a;
}

double half_ellipse_beta() {
    double a, b;
    half_ellipse_constants(a, b);
    return b;
}

BodyDescriptor half_ellipse_k1() {
    double alpha, beta;
    half_ellipse_constants(alpha, beta);
    return transform(half_ellipse_raw(), Mat3::identity(), Vec{-beta / alpha, 0, 0},
                     1.0 / alpha);
}

BodyDescriptor builtin_body(const std::string& name) {
    if (name == "half_ellipse_k1") return half_ellipse_k1();
    throw std::invalid_argument("builtin_body: unknown builtin '" + name + "'");
}

}  // namespace shapemetric
