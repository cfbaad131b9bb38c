#pragma once

#include <vector>

namespace shapemetric {

// Dimensional constants used throughout: unit-ball volumes kappa_m,
// Wallis integrals W_m, and the normalization constant c_n of the
// intrinsic-area form. Everything comes from two-term recurrences,
// no gamma functions involved.
struct DimConstants {
    int n = 0;
    std::vector<double> kappa;   // kappa[0..n]
    std::vector<double> wallis;  // wallis[0..n]
    double c_n = 0;
    double r1 = 0;       // 1 / v1_ball
    double r2 = 0;       // 1 / sqrt(v2_ball)
    double lambda1 = 0;  // first nonzero sphere Laplacian eigenvalue, n-1
    double lambda2 = 0;  // second one, 2n
    double v1_ball = 0;  // V1(B^n) = pi / W_{n-1}
    double v2_ball = 0;  // V2(B^n) = (n-1) pi
};

// Throws std::invalid_argument for n < 2.
DimConstants build_constants(int n);

// kappa_m and W_m for a single index (m >= 0).
double kappa_m(int m);
double wallis_m(int m);

}  // namespace shapemetric
