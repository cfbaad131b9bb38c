#include "shapemetric/forms.hpp"

#include <cmath>
#include <stdexcept>

#include "shapemetric/constants.hpp"

namespace shapemetric {

double inner_l2(const SupportField& f, const SupportField& g) {
    require_same_grid(f, g, "inner_l2");
    double s = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        s += f.grid->weights[i] * f.values[i] * g.values[i];
    return s;
}

double inner_grad(const SupportField& f, const SupportField& g) {
    require_same_grid(f, g, "inner_grad");
    if (!f.has_gradients || !g.has_gradients)
        throw std::invalid_argument("inner_grad: missing gradients");
    double s = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        s += f.grid->weights[i] * dot(f.gradients[i], g.gradients[i]);
    return s;
}

namespace {
double cn_cached(int n) {
    // grids only come in n = 2 or 3
    static const double c[2] = {build_constants(2).c_n, build_constants(3).c_n};
    return c[n - 2];
}
}  // namespace

double v2_form(const SupportField& f, const SupportField& g) {
    int n = f.grid->n;
    return cn_cached(n) * (inner_l2(f, g) - inner_grad(f, g) / (n - 1));
}

double v2_form(const SupportField& f) { return v2_form(f, f); }

double v1(const SupportField& f) {
    double s = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        s += f.grid->weights[i] * f.values[i];
    return s / kappa_m(f.grid->n - 1);
}

double mean_value(const SupportField& f) {
    double s = 0, vol = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        s += f.grid->weights[i] * f.values[i];
        vol += f.grid->weights[i];
    }
    return s / vol;
}

Vec steiner_point(const SupportField& f) {
    Vec s{0, 0, 0};
    for (std::size_t i = 0; i < f.values.size(); ++i)
        s = vadd(s, vscale(f.grid->weights[i] * f.values[i], f.grid->nodes[i]));
    return vscale(1.0 / kappa_m(f.grid->n), s);
}

SupportField center_field(const SupportField& f) {
    Vec st = steiner_point(f);
    SupportField out = f;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const Vec& u = f.grid->nodes[i];
        out.values[i] -= dot(st, u);
        if (out.has_gradients) {
            // tangential part of the constant vector field st
            Vec tang = vsub(st, vscale(dot(st, u), u));
            out.gradients[i] = vsub(out.gradients[i], tang);
        }
    }
    if (f.source)
        out.source = transform(*f.source, Mat3::identity(), vscale(-1.0, st), 1.0);
    return out;
}

double af_defect(const SupportField& f, const SupportField& g) {
    double m = v2_form(f, g);
    return m * m - v2_form(f) * v2_form(g);
}

FormReport form_report(const SupportField& f) {
    FormReport r;
    r.v1 = v1(f);
    r.mean = mean_value(f);
    r.steiner = steiner_point(f);
    r.v2 = v2_form(center_field(f));
    r.valid_cone = (r.v2 > 0.0 && r.mean > 0.0);
    return r;
}

bool interior_shape(double v2, double v1val) { return v2 > 1e-9 * v1val * v1val; }

bool interior_shape(const SupportField& f) {
    FormReport r = form_report(f);
    return interior_shape(r.v2, r.v1);
}

}  // namespace shapemetric
