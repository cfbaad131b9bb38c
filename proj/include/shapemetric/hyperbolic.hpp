#pragma once

// The three isometric pictures of the metric: hyperboloid sheet (v2 = 1),
// cross-ratio on projective lines, and the Klein slice (v1 = 1).

#include "shapemetric/field.hpp"

namespace shapemetric {

struct HyperboloidPoint {
    SupportField field;  // Steiner-centered, v2 = 1
    double v2 = 1.0;
    double mean = 0.0;
};

struct KleinPoint {
    SupportField field;  // Steiner-centered, v1 = 1
    double v1 = 1.0;
};

// argcosh with the shared clamping policy: arguments within 1e-10 of 1 are
// rounding noise and map to 0, anything below that window is a consistency
// failure. acosh is ill-conditioned at 1, so values inside the window never
// carried information anyway.
double argcosh_checked(double x, const char* who);

HyperboloidPoint normalize_v2(const SupportField& f);
KleinPoint normalize_v1(const SupportField& f);

double dist_hyperboloid(const HyperboloidPoint& h, const HyperboloidPoint& k);
double dist_klein(const KleinPoint& h, const KleinPoint& k);

// roots t1 < 0 < 1 < t2 of v2((1-t)f + tg) = 0 after rescaling g to f's v2
struct CrossRatioRoots {
    double t1 = 0;
    double t2 = 0;
    double defect = 0;  // quadratic discriminant / 4
};
CrossRatioRoots cross_ratio_roots(const SupportField& f, const SupportField& g);
double dist_cross_ratio(const SupportField& f, const SupportField& g);

SupportField project_horizontal(const HyperboloidPoint& h);
HyperboloidPoint lift_horizontal(const SupportField& f);

// v2 of the v1-normalized field; tends to 0 exactly for degenerating shapes
double boundary_gap(const SupportField& f);

}  // namespace shapemetric
