#pragma once

// Numerical support-function tests and terminal-point probing along
// geodesic chords extended beyond [0,1].

#include <utility>
#include <vector>

#include "shapemetric/body.hpp"
#include "shapemetric/field.hpp"

namespace shapemetric {

struct ValidityVerdict {
    bool valid = false;
    double worst_violation = 0.0;
    Vec witness{0, 0, 0};
    int witness_index = -1;
    double tol_used = 0.0;
};

// 2D: h + h'' >= -tol via second central differences (uniform grid only).
// 3D: rebuild the contact cloud f_i u_i + grad_i and compare its support
// against f; the cloud can only poke above f where convexity fails.
// tol <= 0 selects the default 1e-6 * max |f|.
ValidityVerdict is_support_function(const SupportField& f, double tol = 0.0);

struct TerminalInterval {
    double t_min = 0.0;
    double t_max = 1.0;
    bool capped_min = false;
    bool capped_max = false;
    std::vector<std::pair<double, bool>> probes;  // (t, valid) in probe order
};

// Largest [t_min, t_max] containing [0,1] on which (1-t) h1 + t h2 stays
// a support function, bisected to 1e-4 within the search box [-8, 9].
// Fields are Steiner-centered and v2-normalized; allow_boundary switches
// to v1 normalization so segment endpoints can be probed.
TerminalInterval terminal_extension(const BodyDescriptor& k1, const BodyDescriptor& k2,
                                    const GridPtr& grid, double tol = 0.0,
                                    bool allow_boundary = false);

}  // namespace shapemetric
