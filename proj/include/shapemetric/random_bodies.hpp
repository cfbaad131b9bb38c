#pragma once

// Seeded generators for test bodies and rigid motions. All randomness
// flows through one SplitMix64 stream so fixed seeds reproduce exactly.

#include "shapemetric/body.hpp"
#include "shapemetric/geom.hpp"
#include "shapemetric/rng.hpp"

namespace shapemetric {

// Convex polygon with a hull of min_verts..max_verts vertices, roughly
// unit sized, off-center.
BodyDescriptor random_polygon(SplitMix64& rng, int min_verts = 5, int max_verts = 40);

// Full-dimensional 3D polytope from random points on a squashed sphere.
BodyDescriptor random_polytope3(SplitMix64& rng, int min_verts = 8, int max_verts = 30);

// Off-center ellipse with half-axes in [0.6, 1.8].
BodyDescriptor random_ellipse(SplitMix64& rng);

// Mixed interior 2D / 3D body: polygon or polytope, ellipse/ellipsoid,
// ball, or a Minkowski combination of two of them.
BodyDescriptor random_body2(SplitMix64& rng);
BodyDescriptor random_body3(SplitMix64& rng);

Mat3 random_rotation2(SplitMix64& rng);
Mat3 random_rotation3(SplitMix64& rng);

}  // namespace shapemetric
