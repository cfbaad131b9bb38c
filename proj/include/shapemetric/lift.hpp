#pragma once

// Embedding of planar support fields into R^3: the lift of h is the
// support function of the embedded flat body frame * (K x {0}), sampled
// on a sphere grid.

#include "shapemetric/field.hpp"
#include "shapemetric/geom.hpp"

namespace shapemetric {

// f must live on a circle grid, target on a sphere grid, frame must be
// orthogonal. When f carries a source descriptor the lift is evaluated
// exactly from support points; otherwise values and tangential
// derivatives are interpolated in angle, which keeps the lift linear.
SupportField embed_lift(const SupportField& f, const Mat3& frame, const GridPtr& target);

}  // namespace shapemetric
