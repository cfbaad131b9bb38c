#include "shapemetric/hyperbolic.hpp"

#include <cmath>
#include <stdexcept>

#include "shapemetric/constants.hpp"
#include "shapemetric/forms.hpp"

namespace shapemetric {

double argcosh_checked(double x, const char* who) {
    if (x >= 1.0 + 1e-10) return std::acosh(x);
    if (x >= 1.0 - 1e-10) return 0.0;
    throw std::runtime_error(std::string(who) +
                             ": cosh argument " + std::to_string(x) +
                             " below 1, inputs are inconsistent");
}

namespace {

void require_interior(double v2v, double v1v, const char* who) {
    if (!interior_shape(v2v, v1v))
        throw std::domain_error(std::string(who) +
                                ": boundary shape (intrinsic area vanishes)");
}

}  // namespace

HyperboloidPoint normalize_v2(const SupportField& f) {
    SupportField c = center_field(f);
    double v2v = v2_form(c);
    double v1v = v1(c);
    require_interior(v2v, v1v, "normalize_v2");
    c = scale_field(1.0 / std::sqrt(v2v), c);
    HyperboloidPoint p;
    p.v2 = v2_form(c);
    p.mean = mean_value(c);
    p.field = std::move(c);
    return p;
}

KleinPoint normalize_v1(const SupportField& f) {
    SupportField c = center_field(f);
    double v2v = v2_form(c);
    double v1v = v1(c);
    require_interior(v2v, v1v, "normalize_v1");
    if (v1v <= 0) throw std::domain_error("normalize_v1: v1 must be positive");
    c = scale_field(1.0 / v1v, c);
    KleinPoint p;
    p.v1 = v1(c);
    p.field = std::move(c);
    return p;
}

double dist_hyperboloid(const HyperboloidPoint& h, const HyperboloidPoint& k) {
    return argcosh_checked(v2_form(h.field, k.field), "dist_hyperboloid");
}

double dist_klein(const KleinPoint& h, const KleinPoint& k) {
    double vh = v2_form(h.field);
    double vk = v2_form(k.field);
    if (vh <= 0 || vk <= 0)
        throw std::domain_error("dist_klein: boundary shape");
    return argcosh_checked(v2_form(h.field, k.field) / std::sqrt(vh * vk),
                           "dist_klein");
}

CrossRatioRoots cross_ratio_roots(const SupportField& f, const SupportField& g) {
    SupportField fc = center_field(f);
    SupportField gc = center_field(g);
    double a = v2_form(fc);
    double vg = v2_form(gc);
    require_interior(a, v1(fc), "dist_cross_ratio");
    require_interior(vg, v1(gc), "dist_cross_ratio");
    gc = scale_field(std::sqrt(a / vg), gc);

    // quadratic q t^2 + 2 B t + a = 0 along the chord (1-t) f + t g
    SupportField diff = combine_fields(1.0, fc, -1.0, gc);
    double q = v2_form(diff);
    double c = v2_form(fc, gc);
    double B = c - a;
    double defect = B * B - q * a;  // equals c^2 - a^2 in exact arithmetic
    CrossRatioRoots r;
    r.defect = defect;
    if (defect <= 0)
        throw std::runtime_error(
            "dist_cross_ratio: nonpositive discriminant for distinct shapes");
    double s = std::sqrt(defect);
    r.t1 = (-B + s) / q;  // q < 0, so this is the nonpositive root
    r.t2 = (-B - s) / q;
    return r;
}

double dist_cross_ratio(const SupportField& f, const SupportField& g) {
    SupportField fc = center_field(f);
    SupportField gc = center_field(g);
    double a = v2_form(fc);
    double vg = v2_form(gc);
    require_interior(a, v1(fc), "dist_cross_ratio");
    require_interior(vg, v1(gc), "dist_cross_ratio");
    gc = scale_field(std::sqrt(a / vg), gc);
    double scale = 0;
    for (double v : fc.values) scale = std::max(scale, std::fabs(v));
    if (sup_diff(fc, gc) <= 1e-12 * std::max(scale, 1e-300)) return 0.0;

    CrossRatioRoots r = cross_ratio_roots(f, g);
    double cr = (r.t1 * (1.0 - r.t2)) / (r.t2 * (1.0 - r.t1));
    return std::fabs(0.5 * std::log(cr));
}

SupportField project_horizontal(const HyperboloidPoint& h) {
    SupportField f = h.field;
    double m = mean_value(f);
    for (double& v : f.values) v -= m;
    f.source.reset();
    return f;
}

HyperboloidPoint lift_horizontal(const SupportField& f) {
    const int n = f.grid->n;
    double v2v = v2_form(f);
    double c = build_constants(n).r2 * std::sqrt(std::max(0.0, 1.0 - v2v));
    SupportField lifted = f;
    for (double& v : lifted.values) v += c;
    lifted.source.reset();
    HyperboloidPoint p;
    p.v2 = v2_form(lifted);
    p.mean = mean_value(lifted);
    p.field = std::move(lifted);
    return p;
}

double boundary_gap(const SupportField& f) {
    SupportField c = center_field(f);
    double v1v = v1(c);
    if (v1v <= 0) throw std::domain_error("boundary_gap: v1 must be positive");
    return v2_form(c) / (v1v * v1v);
}

}  // namespace shapemetric
