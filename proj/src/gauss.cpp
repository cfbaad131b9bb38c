#include "shapemetric/gauss.hpp"

#include <cmath>
#include <stdexcept>

namespace shapemetric {

void gauss_legendre(int npts, std::vector<double>& nodes, std::vector<double>& weights) {
    if (npts < 1) throw std::invalid_argument("gauss_legendre: npts must be >= 1");
    nodes.assign(npts, 0.0);
    weights.assign(npts, 0.0);
    const double pi = 3.14159265358979323846;
    int half = (npts + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n(x) = 0
        double x = std::cos(pi * (i + 0.75) / (npts + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= npts; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = npts * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[npts - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[npts - 1 - i] = w;
    }
    if (npts % 2 == 1) nodes[npts / 2] = 0.0;
}

}  // namespace shapemetric
