#pragma once

// Oriented-shape distance, geodesic morphs, and the quotient distance
// over rotations/reflections with its 2D spectral scan and 3D net search.

#include <string>
#include <utility>
#include <vector>

#include "shapemetric/body.hpp"
#include "shapemetric/field.hpp"

namespace shapemetric {

struct ShapeDiagnostics {
    int grid_resolution = 0;
    int refinement_iterations = 0;
    std::string method;  // "fft" or "so3-grid"
    bool heuristic = false;
    // 2D only: the spectral refinement of the scan lands at or below
    // every grid sample (circular correlation is exact at grid angles)
    bool certificate_ok = false;
    std::vector<double> best_grid_values;
};

struct ShapeDistanceReport {
    double distance = 0.0;
    Mat3 optimal_rotation = Mat3::identity();
    bool reflected = false;
    std::vector<std::pair<double, double>> objective_trace;  // (parameter, objective)
    ShapeDiagnostics diagnostics;
};

// argcosh of the mixed-over-geometric-mean area ratio, both bodies
// Steiner-centered first. Translation and homothety invariant.
double dist_oriented(const BodyDescriptor& k1, const BodyDescriptor& k2, const GridPtr& grid);

// Point on the shortest path: convex combination of the v2-normalized
// centered fields. allow_boundary switches to raw centered fields so
// degenerate endpoints (segments) can be morphed for demos; no metric
// normalization happens in that mode.
SupportField geodesic_point(const BodyDescriptor& k1, const BodyDescriptor& k2, double t,
                            const GridPtr& grid, bool allow_boundary = false);

// n = 2 registration integrand: int k1(s) k2(s - theta) - k1'(s) k2'(s - theta) ds,
// i.e. twice the mixed area of centered k1 and rotated centered k2.
double rotation_objective(const BodyDescriptor& k1, const BodyDescriptor& k2, double theta,
                          const GridPtr& grid);

ShapeDistanceReport dist_shape(const BodyDescriptor& k1, const BodyDescriptor& k2,
                               const GridPtr& grid);

// cosh(mid) = (cosh a + cosh b) / (2 cosh(c/2)) for a triangle with
// side c between the feet of a and b.
double hyperbolic_mid(double a, double b, double c);

// |d(C, midpoint of A,B) - hyperbolic_mid(d(C,A), d(C,B), d(A,B))|
double midpoint_law_check(const BodyDescriptor& ka, const BodyDescriptor& kb,
                          const BodyDescriptor& kc, const GridPtr& grid);

// closed-form distance between round balls B^p and B^n, 2 <= p <= n
double ball_distance(int p, int n);

// Quotient distance between two sampled 2D fields over the exact
// discrete isometries of the grid (node shifts and reflections). Used
// where the inputs exist only as fields, e.g. geodesic midpoints in
// the curvature comparison.
struct GridAlign {
    double distance = 0.0;
    int shift = 0;
    bool reflected = false;
};
GridAlign align_grid2d(const SupportField& f, const SupportField& g);
double dist_shape_grid2d(const SupportField& f, const SupportField& g);

// The field of the rotated (and optionally reflected) body, built by
// exact index permutation; the grid isometry used by align_grid2d.
SupportField rotate_field_grid2d(const SupportField& f, int shift, bool reflect);

}  // namespace shapemetric
