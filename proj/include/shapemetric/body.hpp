#pragma once

#include <string>
#include <vector>

#include "shapemetric/geom.hpp"

namespace shapemetric {

// Symbolic convex body. Supports exact evaluation of the support
// function h(u) = max_{p in K} <u,p> and of a maximizing point, for
// every variant, including Minkowski combinations and rigid motions.
struct BodyDescriptor {
    enum class Kind { Point, Segment, Polytope, Ball, Ellipsoid, Combination, Moved, HalfEllipse };

    Kind kind = Kind::Point;
    int dim = 2;

    std::vector<Vec> vertices;   // Point (1), Segment (2), Polytope (>= 1)
    Vec center{0, 0, 0};         // Ball, Ellipsoid
    double radius = 0;           // Ball
    Mat3 shape;                  // Ellipsoid: symmetric PSD matrix

    std::vector<double> weights;        // Combination
    std::vector<BodyDescriptor> parts;  // Combination terms; Moved inner = parts[0]

    Mat3 rotation;               // Moved
    Vec translation{0, 0, 0};    // Moved
    double scale = 1.0;          // Moved
};

// u must be a unit direction (callers pass grid nodes).
double eval_support(const BodyDescriptor& body, const Vec& u);
Vec support_point(const BodyDescriptor& body, const Vec& u);

// h'(u) = scale * h(R^T u) + <t, u>. Throws on a non-orthogonal matrix
// or negative scale.
BodyDescriptor transform(const BodyDescriptor& body, const Mat3& rot, const Vec& trans,
                         double scale = 1.0);

BodyDescriptor make_point(int dim, const Vec& p);
BodyDescriptor make_segment(int dim, const Vec& a, const Vec& b);
BodyDescriptor make_polytope(int dim, std::vector<Vec> vertices);
BodyDescriptor make_ball(int dim, const Vec& center, double radius);
BodyDescriptor make_ellipsoid(int dim, const Vec& center, const Mat3& shape);
BodyDescriptor make_combination(std::vector<double> weights, std::vector<BodyDescriptor> parts);

// Half-ellipse demo body: the x >= 0 half of the ellipse with
// half-axes sqrt(2) (x) and 1/sqrt(2) (y). Support in closed form.
BodyDescriptor half_ellipse_raw();

// The same body recentered at its Steiner point and rescaled to mean
// width normalization v1 = 1; built from runtime-computed constants.
BodyDescriptor half_ellipse_k1();

// Normalization constants of the half-ellipse body: alpha = v1(K),
// beta = x coordinate of its Steiner point.
double half_ellipse_alpha();
double half_ellipse_beta();

// Look up descriptor builders by name ("half_ellipse_k1"); throws on
// unknown names.
BodyDescriptor builtin_body(const std::string& name);

}  // namespace shapemetric
