#include "shapemetric/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace shapemetric {

namespace {
const double PI = 3.14159265358979323846;
}

double kappa_m(int m) {
    if (m < 0) throw std::invalid_argument("kappa_m: negative index");
    double k0 = 1.0, k1 = 2.0;
    if (m == 0) return k0;
    if (m == 1) return k1;
    double prev = (m % 2 == 0) ? k0 : k1;
    for (int i = (m % 2 == 0) ? 2 : 3; i <= m; i += 2)
        prev *= 2.0 * PI / i;
    return prev;
}

double wallis_m(int m) {
    if (m < 0) throw std::invalid_argument("wallis_m: negative index");
    double w0 = PI / 2.0, w1 = 1.0;
    if (m == 0) return w0;
    if (m == 1) return w1;
    double prev = (m % 2 == 0) ? w0 : w1;
    for (int i = (m % 2 == 0) ? 2 : 3; i <= m; i += 2)
        prev *= double(i - 1) / i;
    return prev;
}

DimConstants build_constants(int n) {
    if (n < 2) throw std::invalid_argument("build_constants: dimension must be >= 2");
    DimConstants c;
    c.n = n;
    c.kappa.resize(n + 1);
    c.wallis.resize(n + 1);
    c.kappa[0] = 1.0;
    c.wallis[0] = PI / 2.0;
    if (n >= 1) { c.kappa[1] = 2.0; c.wallis[1] = 1.0; }
    for (int m = 2; m <= n; ++m) {
        c.kappa[m] = 2.0 * PI / m * c.kappa[m - 2];
        c.wallis[m] = double(m - 1) / m * c.wallis[m - 2];
    }
    c.c_n = (n - 1) * c.wallis[n - 1] / c.kappa[n - 1];
    c.v2_ball = (n - 1) * PI;
    c.v1_ball = PI / c.wallis[n - 1];
    c.r1 = 1.0 / c.v1_ball;
    c.r2 = 1.0 / std::sqrt(c.v2_ball);
    c.lambda1 = n - 1;
    c.lambda2 = 2.0 * n;
    return c;
}

}  // namespace shapemetric
