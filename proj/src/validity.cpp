#include "shapemetric/validity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "shapemetric/forms.hpp"
#include "shapemetric/geom.hpp"

namespace shapemetric {

namespace {

constexpr double PI = 3.14159265358979323846;
constexpr double NEG_INF = -std::numeric_limits<double>::infinity();

double auto_tol(const SupportField& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::fabs(v));
    return 1e-6 * m;
}

ValidityVerdict check_2d(const SupportField& f, double tol) {
    const SphereGrid& g = *f.grid;
    const std::size_t n = g.nodes.size();
    if (n < 4) throw std::invalid_argument("is_support_function: grid too coarse");
    const double dt = 2.0 * PI / double(n);
    for (std::size_t i = 0; i < n; ++i) {
        double next = g.theta[(i + 1) % n] + (i + 1 == n ? 2.0 * PI : 0.0);
        if (std::fabs(next - g.theta[i] - dt) > 1e-9)
            throw std::invalid_argument("is_support_function: second-difference test needs a uniform angular grid");
    }

    ValidityVerdict out;
    out.tol_used = tol;
    out.worst_violation = NEG_INF;
    // convexity of the homogeneous extension is h + h'' >= 0 on the circle
    for (std::size_t i = 0; i < n; ++i) {
        double dd = f.values[(i + 1) % n] - 2.0 * f.values[i] + f.values[(i + n - 1) % n];
        double q = f.values[i] + dd / (dt * dt);
        if (-q > out.worst_violation) {
            out.worst_violation = -q;
            out.witness = g.nodes[i];
            out.witness_index = int(i);
        }
    }
    out.valid = out.worst_violation <= tol;
    return out;
}

ValidityVerdict check_3d(const SupportField& f, double tol) {
    if (!f.has_gradients)
        throw std::invalid_argument("is_support_function: 3D test needs gradient samples");
    const SphereGrid& g = *f.grid;
    const std::size_t n = g.nodes.size();

    // Contact cloud: candidate touching points, one per node. For a genuine
    // support function its own support resamples to f exactly; any excess is
    // a convexity violation.
    std::vector<Vec> cloud(n);
    for (std::size_t j = 0; j < n; ++j) {
        cloud[j] = Vec{f.values[j] * g.nodes[j][0] + f.gradients[j][0],
                       f.values[j] * g.nodes[j][1] + f.gradients[j][1],
                       f.values[j] * g.nodes[j][2] + f.gradients[j][2]};
    }

    ValidityVerdict out;
    out.tol_used = tol;
    out.worst_violation = NEG_INF;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec& u = g.nodes[i];
        double best = NEG_INF;
        for (std::size_t j = 0; j < n; ++j) {
            double d = u[0] * cloud[j][0] + u[1] * cloud[j][1] + u[2] * cloud[j][2];
            if (d > best) best = d;
        }
        double excess = best - f.values[i];
        if (excess > out.worst_violation) {
            out.worst_violation = excess;
            out.witness = u;
            out.witness_index = int(i);
        }
    }
    out.valid = out.worst_violation <= tol;
    return out;
}

}  // namespace

ValidityVerdict is_support_function(const SupportField& f, double tol) {
    if (tol <= 0.0) tol = auto_tol(f);
    return f.grid->n == 2 ? check_2d(f, tol) : check_3d(f, tol);
}

TerminalInterval terminal_extension(const BodyDescriptor& k1, const BodyDescriptor& k2,
                                    const GridPtr& grid, double tol, bool allow_boundary) {
    SupportField f1 = center_field(sample_body(k1, grid));
    SupportField f2 = center_field(sample_body(k2, grid));

    if (allow_boundary) {
        double a = v1(f1), b = v1(f2);
        if (a <= 1e-12 || b <= 1e-12)
            throw std::domain_error("terminal_extension: endpoint has vanishing mean width, nothing to normalize");
        f1 = scale_field(1.0 / a, f1);
        f2 = scale_field(1.0 / b, f2);
    } else {
        if (!interior_shape(f1) || !interior_shape(f2))
            throw std::domain_error("terminal_extension: boundary endpoint, set allow_boundary to probe with v1 normalization");
        f1 = scale_field(1.0 / std::sqrt(v2_form(f1)), f1);
        f2 = scale_field(1.0 / std::sqrt(v2_form(f2)), f2);
    }

    TerminalInterval out;
    auto probe = [&](double t) {
        SupportField g = combine_fields(1.0 - t, f1, t, f2);
        bool ok = is_support_function(g, tol).valid;
        out.probes.emplace_back(t, ok);
        return ok;
    };

    if (!probe(0.0))
        throw std::invalid_argument("terminal_extension: first endpoint is not a valid support function");
    if (!probe(1.0))
        throw std::invalid_argument("terminal_extension: second endpoint is not a valid support function");

    const double kLo = -8.0, kHi = 9.0, kRes = 1e-4;

    if (probe(kHi)) {
        out.t_max = kHi;
        out.capped_max = true;
    } else {
        double lo = 1.0, hi = kHi;
        while (hi - lo > kRes) {
            double mid = 0.5 * (lo + hi);
            (probe(mid) ? lo : hi) = mid;
        }
        out.t_max = lo;
    }

    if (probe(kLo)) {
        out.t_min = kLo;
        out.capped_min = true;
    } else {
        double lo = kLo, hi = 0.0;
        while (hi - lo > kRes) {
            double mid = 0.5 * (lo + hi);
            (probe(mid) ? hi : lo) = mid;
        }
        out.t_min = hi;
    }

    return out;
}

}  // namespace shapemetric
