#include "shapemetric/lift.hpp"

#include <cmath>
#include <stdexcept>

#include "shapemetric/body.hpp"

namespace shapemetric {

namespace {

constexpr double PI = 3.14159265358979323846;

// periodic linear interpolation on the (uniform) circle grid
double interp_circle(const std::vector<double>& vals, double phi) {
    const std::size_t n = vals.size();
    double pos = phi / (2.0 * PI) * double(n);
    pos -= std::floor(pos / double(n)) * double(n);
    std::size_t i0 = std::size_t(pos) % n;
    double frac = pos - std::floor(pos);
    return (1.0 - frac) * vals[i0] + frac * vals[(i0 + 1) % n];
}

}  // namespace

SupportField embed_lift(const SupportField& f, const Mat3& frame, const GridPtr& target) {
    if (f.grid->n != 2) throw std::invalid_argument("embed_lift: source field must live on a circle grid");
    if (target->n != 3) throw std::invalid_argument("embed_lift: target must be a sphere grid");
    if (!is_orthogonal(frame)) throw std::invalid_argument("embed_lift: frame must be orthogonal");

    const std::size_t m = target->nodes.size();
    SupportField out;
    out.grid = target;
    out.values.resize(m);
    out.gradients.resize(m);
    out.has_gradients = true;

    // tangential derivative samples for the interpolation fallback
    std::vector<double> der;
    if (!f.source) {
        const std::size_t n = f.grid->nodes.size();
        der.resize(n);
        if (f.has_gradients) {
            for (std::size_t i = 0; i < n; ++i) {
                double th = f.grid->theta[i];
                der[i] = -std::sin(th) * f.gradients[i][0] + std::cos(th) * f.gradients[i][1];
            }
        } else {
            double dt = 2.0 * PI / double(n);
            for (std::size_t i = 0; i < n; ++i)
                der[i] = (f.values[(i + 1) % n] - f.values[(i + n - 1) % n]) / (2.0 * dt);
        }
    }

    for (std::size_t i = 0; i < m; ++i) {
        const Vec& u = target->nodes[i];
        Vec v = frame.apply_transposed(u);
        double ct = std::hypot(v[0], v[1]);  // latitude cosine; GL rows never hit the poles

        if (f.source) {
            Vec x{1, 0, 0};
            if (ct > 1e-15) x = Vec{v[0] / ct, v[1] / ct, 0};
            Vec p2 = support_point(*f.source, x);
            double value = v[0] * p2[0] + v[1] * p2[1];
            Vec p3 = frame.apply(Vec{p2[0], p2[1], 0});
            out.values[i] = value;
            out.gradients[i] = Vec{p3[0] - value * u[0], p3[1] - value * u[1], p3[2] - value * u[2]};
        } else {
            double phi = std::atan2(v[1], v[0]);
            if (phi < 0) phi += 2.0 * PI;
            double h2 = interp_circle(f.values, phi);
            double d2 = interp_circle(der, phi);
            double value = ct * h2;

            // gradient in source coordinates, then rotated by the frame:
            // d2 along the azimuth circle, -sin(t) h2 along the meridian
            Vec e_phi{-v[1] / ct, v[0] / ct, 0};
            Vec e_lat{-v[2] * v[0] / ct, -v[2] * v[1] / ct, ct};
            Vec gv{d2 * e_phi[0] - v[2] * h2 * e_lat[0],
                   d2 * e_phi[1] - v[2] * h2 * e_lat[1],
                   d2 * e_phi[2] - v[2] * h2 * e_lat[2]};
            out.values[i] = value;
            out.gradients[i] = frame.apply(gv);
        }
    }
    return out;
}

}  // namespace shapemetric
