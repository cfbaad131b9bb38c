#pragma once

// Closed-form 2D evaluation path. Support functions of the bodies we handle
// are piecewise analytic in the angle; splitting the circle at the kink
// angles and applying Gauss-Legendre per arc gives integrals at machine
// precision, far beyond what the uniform grid can do.

#include <functional>
#include <vector>

#include "shapemetric/body.hpp"

namespace shapemetric {

struct Analytic2D {
    BodyDescriptor body;
    std::vector<double> kinks;  // sorted angles in [0, 2pi) where h or h' breaks
};

Analytic2D analyze_2d(const BodyDescriptor& body);

// support value and angular derivative at a single angle
double support_at(const BodyDescriptor& body, double theta);
double support_deriv_at(const BodyDescriptor& body, double theta);

// integral of f over [0, 2pi), split at the given break angles
double integrate_circle(const std::vector<double>& breaks,
                        const std::function<double(double)>& f);

double analytic_v1(const Analytic2D& a);
Vec analytic_steiner(const Analytic2D& a);
double analytic_v2(const Analytic2D& a);
// the translation-invariant mixed form, (1/2) int (h k - h' k')
double analytic_v2_pair(const Analytic2D& a, const Analytic2D& b);

}  // namespace shapemetric
