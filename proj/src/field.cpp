#include "shapemetric/field.hpp"

#include <cmath>
#include <stdexcept>

namespace shapemetric {

SupportField sample_body(const BodyDescriptor& body, const GridPtr& grid) {
    if (!grid) throw std::invalid_argument("sample_body: null grid");
    if (body.dim != grid->n)
        throw std::invalid_argument("sample_body: body/grid dimension mismatch");
    SupportField f;
    f.grid = grid;
    f.values.resize(grid->nodes.size());
    f.gradients.resize(grid->nodes.size());
    f.has_gradients = true;
    f.source = body;
    for (std::size_t i = 0; i < grid->nodes.size(); ++i) {
        const Vec& u = grid->nodes[i];
        Vec p = support_point(body, u);
        double h = dot(u, p);
        f.values[i] = h;
        f.gradients[i] = vsub(p, vscale(h, u));
    }
    return f;
}

void require_same_grid(const SupportField& f, const SupportField& g, const char* who) {
    if (!f.grid || !g.grid || !f.grid->same_layout(*g.grid))
        throw std::invalid_argument(std::string(who) + ": grid mismatch");
}

double sup_diff(const SupportField& f, const SupportField& g) {
    require_same_grid(f, g, "sup_diff");
    double m = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        m = std::max(m, std::fabs(f.values[i] - g.values[i]));
    return m;
}

double dist_l2(const SupportField& f, const SupportField& g) {
    require_same_grid(f, g, "dist_l2");
    double s = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        double d = f.values[i] - g.values[i];
        s += f.grid->weights[i] * d * d;
    }
    return std::sqrt(s);
}

double dist_h1(const SupportField& f, const SupportField& g) {
    require_same_grid(f, g, "dist_h1");
    if (!f.has_gradients || !g.has_gradients)
        throw std::invalid_argument("dist_h1: missing gradients");
    double s = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        double d = f.values[i] - g.values[i];
        Vec dg = vsub(f.gradients[i], g.gradients[i]);
        s += f.grid->weights[i] * (d * d + dot(dg, dg));
    }
    return std::sqrt(s);
}

SupportField combine_fields(double a, const SupportField& f, double b, const SupportField& g) {
    require_same_grid(f, g, "combine_fields");
    SupportField out;
    out.grid = f.grid;
    out.values.resize(f.values.size());
    out.has_gradients = f.has_gradients && g.has_gradients;
    if (out.has_gradients) out.gradients.resize(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        out.values[i] = a * f.values[i] + b * g.values[i];
        if (out.has_gradients)
            out.gradients[i] = vadd(vscale(a, f.gradients[i]), vscale(b, g.gradients[i]));
    }
    return out;
}

SupportField scale_field(double a, const SupportField& f) {
    SupportField out;
    out.grid = f.grid;
    out.values.resize(f.values.size());
    out.has_gradients = f.has_gradients;
    if (out.has_gradients) out.gradients.resize(f.values.size());
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        out.values[i] = a * f.values[i];
        if (out.has_gradients) out.gradients[i] = vscale(a, f.gradients[i]);
    }
    if (f.source && a >= 0.0)
        out.source = make_combination({a}, {*f.source});
    return out;
}

}  // namespace shapemetric
