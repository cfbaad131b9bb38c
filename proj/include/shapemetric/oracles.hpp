#pragma once

#include <cstdint>
#include <vector>

#include "shapemetric/body.hpp"

namespace shapemetric {

// Counterclockwise convex hull (monotone chain), collinear points
// dropped. Works on the xy components.
std::vector<Vec> convex_hull_2d(std::vector<Vec> pts);

struct PolygonOracles {
    double area = 0;
    double perimeter = 0;
};

// Shoelace area and edge-length perimeter of the hull of the body's
// vertices. Degenerate hulls (points, segments) report area 0.
// Accepts Point / Segment / Polytope descriptors.
PolygonOracles polygon_oracles(const BodyDescriptor& body);

// Mixed area via the edge formula
//   V2(K, L) = 1/2 sum over edges of L of h_K(outer normal) * length.
double polygon_mixed_area(const BodyDescriptor& k, const BodyDescriptor& l);

struct PolyhedronOracles {
    double surface_area = 0;
};

// Total face area of the convex hull of a 3D vertex set, by plane
// enumeration (fine for the small vertex counts used in tests).
PolyhedronOracles polyhedron_oracles(const BodyDescriptor& body);

struct SteinerFit {
    double v1_est = 0;
    double v2_est = 0;
    std::vector<double> epsilons;
    std::vector<double> volumes;  // Monte-Carlo vol(K + eps B), per eps
};

// Independent intrinsic-volume oracle: estimate vol(K + eps B) by
// rejection sampling over a bounding box (hit test against the support
// function on a fixed direction set), then least-squares fit the
// polynomial in eps and read off the coefficients.
// Throws when the epsilon list has duplicates or fewer than dim+1
// entries, or when samples < 1e5.
SteinerFit steiner_fit_mc(const BodyDescriptor& body, std::vector<double> epsilons,
                          long samples, std::uint64_t seed);

}  // namespace shapemetric
