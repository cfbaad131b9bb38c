#pragma once

#include <memory>
#include <vector>

#include "shapemetric/geom.hpp"

namespace shapemetric {

// Quadrature grid on S^1 or S^2. For n = 2: N equispaced angles with
// weight 2*pi/N. For n = 3: Gauss-Legendre in latitude (with the
// cosine Jacobian folded into the weights) times equispaced azimuth;
// resolution is the latitude count, azimuth gets twice as many nodes.
struct SphereGrid {
    int n = 2;
    int resolution = 0;
    std::vector<Vec> nodes;
    std::vector<double> weights;

    std::vector<double> theta;    // n = 2: node angles
    std::vector<double> polar;    // n = 3: latitude per row
    std::vector<double> azimuth;  // n = 3: azimuth per column
    int n_polar = 0;
    int n_azimuth = 0;

    bool same_layout(const SphereGrid& other) const {
        return n == other.n && nodes.size() == other.nodes.size() &&
               resolution == other.resolution;
    }
};

using GridPtr = std::shared_ptr<const SphereGrid>;

// n in {2,3}; resolution >= 8, and a power of two when n = 2.
GridPtr build_grid(int n, int resolution);

constexpr int kDefaultResolution2d = 4096;
constexpr int kDefaultResolution3d = 64;

GridPtr default_grid(int n);

}  // namespace shapemetric
