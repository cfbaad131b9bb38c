#pragma once

#include "shapemetric/field.hpp"

namespace shapemetric {

// Weighted quadrature sums; inner_grad throws when either field lacks
// gradients.
double inner_l2(const SupportField& f, const SupportField& g);
double inner_grad(const SupportField& f, const SupportField& g);

// The intrinsic-area bilinear form
//   v2_form(f,g) = c_n * ( (f,g)_L2 - (grad f, grad g)_L2 / (n-1) ).
// For sampled convex bodies v2_form(f,f) is the intrinsic area (area
// in the plane, half the surface area in space).
double v2_form(const SupportField& f, const SupportField& g);
double v2_form(const SupportField& f);

// (1 / kappa_{n-1}) * int f : mean width rescaled so segments report
// their length and planar bodies half their perimeter.
double v1(const SupportField& f);

// Average of f over the sphere.
double mean_value(const SupportField& f);

// (1 / kappa_n) * int f(x) x.
Vec steiner_point(const SupportField& f);

// Subtract the linear part <steiner, x> from values (and its tangential
// part from gradients). Linear fields span the kernel of v2_form in
// exact arithmetic but not of the quadrature, so every v2 evaluation
// that feeds a distance goes through this first.
SupportField center_field(const SupportField& f);

// v2_form(f,g)^2 - v2_form(f)*v2_form(g); nonnegative for convex
// bodies (Alexandrov-Fenchel).
double af_defect(const SupportField& f, const SupportField& g);

struct FormReport {
    double v1 = 0;
    double v2 = 0;
    double mean = 0;
    Vec steiner{0, 0, 0};
    bool valid_cone = false;  // v2 > 0 and mean > 0
};

// v2 is computed on the centered field (translation invariance).
FormReport form_report(const SupportField& f);

// Scale-invariant "not a point, not a segment" test: v2 > 1e-9 * v1^2.
bool interior_shape(const SupportField& f);
bool interior_shape(double v2, double v1);

}  // namespace shapemetric
