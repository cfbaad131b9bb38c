#include "shapemetric/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "shapemetric/gauss.hpp"

namespace shapemetric {

namespace {
const double PI = 3.14159265358979323846;
}

GridPtr build_grid(int n, int resolution) {
    if (n != 2 && n != 3) throw std::invalid_argument("build_grid: n must be 2 or 3");
    if (resolution < 8) throw std::invalid_argument("build_grid: resolution must be >= 8");
    auto g = std::make_shared<SphereGrid>();
    g->n = n;
    g->resolution = resolution;
    if (n == 2) {
        if ((resolution & (resolution - 1)) != 0)
            throw std::invalid_argument("build_grid: 2d resolution must be a power of two");
        g->nodes.resize(resolution);
        g->weights.assign(resolution, 2.0 * PI / resolution);
        g->theta.resize(resolution);
        for (int i = 0; i < resolution; ++i) {
            double th = 2.0 * PI * i / resolution;
            g->theta[i] = th;
            g->nodes[i] = {std::cos(th), std::sin(th), 0};
        }
    } else {
        // latitude t in (-pi/2, pi/2): map GL nodes from [-1,1], weight
        // picks up the pi/2 interval scaling and the cos(t) area factor
        int np = resolution, na = 2 * resolution;
        std::vector<double> x, w;
        gauss_legendre(np, x, w);
        g->n_polar = np;
        g->n_azimuth = na;
        g->polar.resize(np);
        g->azimuth.resize(na);
        g->nodes.resize(std::size_t(np) * na);
        g->weights.resize(std::size_t(np) * na);
        for (int i = 0; i < na; ++i) g->azimuth[i] = 2.0 * PI * i / na;
        for (int j = 0; j < np; ++j) {
            double t = 0.5 * PI * x[j];
            g->polar[j] = t;
            double wrow = w[j] * (0.5 * PI) * std::cos(t) * (2.0 * PI / na);
            double ct = std::cos(t), st = std::sin(t);
            for (int i = 0; i < na; ++i) {
                std::size_t idx = std::size_t(j) * na + i;
                double phi = g->azimuth[i];
                g->nodes[idx] = {ct * std::cos(phi), ct * std::sin(phi), st};
                g->weights[idx] = wrow;
            }
        }
    }
    return g;
}

GridPtr default_grid(int n) {
    return build_grid(n, n == 2 ? kDefaultResolution2d : kDefaultResolution3d);
}

}  // namespace shapemetric
