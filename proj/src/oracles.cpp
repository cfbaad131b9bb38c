#include "shapemetric/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "shapemetric/constants.hpp"
#include "shapemetric/rng.hpp"

namespace shapemetric {

namespace {

double cross2(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<Vec> body_vertices(const BodyDescriptor& body, const char* who) {
    switch (body.kind) {
        case BodyDescriptor::Kind::Point:
        case BodyDescriptor::Kind::Segment:
        case BodyDescriptor::Kind::Polytope:
            return body.vertices;
        default:
            throw std::invalid_argument(std::string(who) + ": needs a polytope-like body");
    }
}

}  // namespace

std::vector<Vec> convex_hull_2d(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Vec& a, const Vec& b) {
                              return a[0] == b[0] && a[1] == b[1];
                          }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Vec> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

PolygonOracles polygon_oracles(const BodyDescriptor& body) {
    std::vector<Vec> hull = convex_hull_2d(body_vertices(body, "polygon_oracles"));
    PolygonOracles o;
    const std::size_t m = hull.size();
    if (m < 2) return o;
    if (m == 2) {
        // degenerate: a segment traversed on both sides
        o.perimeter = 2.0 * norm(vsub(hull[1], hull[0]));
        return o;
    }
    for (std::size_t i = 0; i < m; ++i) {
        const Vec& a = hull[i];
        const Vec& b = hull[(i + 1) % m];
        o.area += 0.5 * (a[0] * b[1] - b[0] * a[1]);
        o.perimeter += norm(vsub(b, a));
    }
    return o;
}

double polygon_mixed_area(const BodyDescriptor& k, const BodyDescriptor& l) {
    std::vector<Vec> hull = convex_hull_2d(body_vertices(l, "polygon_mixed_area"));
    const std::size_t m = hull.size();
    if (m < 2) return 0.0;
    double acc = 0;
    auto edge_term = [&](const Vec& a, const Vec& b) {
        Vec e = vsub(b, a);
        double len = norm(e);
        if (len < 1e-300) return;
        // ccw polygon: outward normal is the edge rotated clockwise
        Vec nrm{e[1] / len, -e[0] / len, 0};
        acc += eval_support(k, nrm) * len;
    };
    if (m == 2) {
        edge_term(hull[0], hull[1]);
        edge_term(hull[1], hull[0]);
    } else {
        for (std::size_t i = 0; i < m; ++i) edge_term(hull[i], hull[(i + 1) % m]);
    }
    return 0.5 * acc;
}

PolyhedronOracles polyhedron_oracles(const BodyDescriptor& body) {
    std::vector<Vec> pts = body_vertices(body, "polyhedron_oracles");
    PolyhedronOracles o;
    const std::size_t m = pts.size();
    if (m < 3) return o;
    double scale = 0;
    for (const Vec& p : pts) scale = std::max({scale, std::fabs(p[0]), std::fabs(p[1]), std::fabs(p[2])});
    const double eps = 1e-9 * std::max(scale, 1.0);

    std::vector<std::pair<Vec, double>> planes;  // (unit normal, offset)
    auto known = [&](const Vec& n, double d) {
        for (const auto& pl : planes)
            if (norm(vsub(pl.first, n)) < 1e-7 && std::fabs(pl.second - d) < 1e-7 * std::max(scale, 1.0))
                return true;
        return false;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k2 = j + 1; k2 < m; ++k2) {
                Vec nrm = cross(vsub(pts[j], pts[i]), vsub(pts[k2], pts[i]));
                double len = norm(nrm);
                if (len < eps) continue;
                nrm = vscale(1.0 / len, nrm);
                double d = dot(nrm, pts[i]);
                bool below = true, above = true;
                for (const Vec& p : pts) {
                    double s = dot(nrm, p) - d;
                    if (s > eps) below = false;
                    if (s < -eps) above = false;
                }
                if (below && !known(nrm, d)) planes.emplace_back(nrm, d);
                if (above && !known(vscale(-1.0, nrm), -d))
                    planes.emplace_back(vscale(-1.0, nrm), -d);
            }

    for (const auto& [nrm, d] : planes) {
        // gather the face's vertices and measure them in a plane basis
        Vec a = std::fabs(nrm[0]) < 0.9 ? Vec{1, 0, 0} : Vec{0, 1, 0};
        Vec t1 = vsub(a, vscale(dot(a, nrm), nrm));
        t1 = vscale(1.0 / norm(t1), t1);
        Vec t2 = cross(nrm, t1);
        std::vector<Vec> flat;
        for (const Vec& p : pts)
            if (std::fabs(dot(nrm, p) - d) <= eps) flat.push_back({dot(p, t1), dot(p, t2), 0});
        if (flat.size() < 3) continue;
        std::vector<Vec> hull = convex_hull_2d(flat);
        double area = 0;
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const Vec& p = hull[i];
            const Vec& q = hull[(i + 1) % hull.size()];
            area += 0.5 * (p[0] * q[1] - q[0] * p[1]);
        }
        o.surface_area += std::fabs(area);
    }
    return o;
}

namespace {

// fixed hit-test direction sets, shared by all Monte-Carlo calls
std::vector<Vec> hit_directions(int dim) {
    const double pi = 3.14159265358979323846;
    std::vector<Vec> dirs;
    if (dim == 2) {
        dirs.resize(256);
        for (int i = 0; i < 256; ++i) {
            double th = 2.0 * pi * i / 256;
            dirs[i] = {std::cos(th), std::sin(th), 0};
        }
    } else {
        const int n = 256;
        const double golden = pi * (3.0 - std::sqrt(5.0));
        dirs.resize(n);
        for (int i = 0; i < n; ++i) {
            double z = 1.0 - 2.0 * (i + 0.5) / n;
            double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            double phi = golden * i;
            dirs[i] = {r * std::cos(phi), r * std::sin(phi), z};
        }
    }
    return dirs;
}

void solve_dense(std::vector<double>& a, std::vector<double>& b, int n) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a[r * n + col]) > std::fabs(a[piv * n + col])) piv = r;
        if (std::fabs(a[piv * n + col]) < 1e-14)
            throw std::invalid_argument("steiner_fit_mc: singular fit (duplicate epsilons?)");
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            double f = a[r * n + col] / a[col * n + col];
            for (int c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
            b[r] -= f * b[col];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        for (int c = r + 1; c < n; ++c) b[r] -= a[r * n + c] * b[c];
        b[r] /= a[r * n + r];
    }
}

}  // namespace

SteinerFit steiner_fit_mc(const BodyDescriptor& body, std::vector<double> epsilons,
                          long samples, std::uint64_t seed) {
    const int dim = body.dim;
    if (int(epsilons.size()) < dim + 1)
        throw std::invalid_argument("steiner_fit_mc: need at least dim+1 epsilon values");
    if (samples < 100000) throw std::invalid_argument("steiner_fit_mc: need >= 1e5 samples");
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        if (epsilons[i] <= 0.0) throw std::invalid_argument("steiner_fit_mc: epsilon must be > 0");
        for (std::size_t j = i + 1; j < epsilons.size(); ++j)
            if (std::fabs(epsilons[i] - epsilons[j]) < 1e-12)
                throw std::invalid_argument("steiner_fit_mc: duplicate epsilon");
    }

    std::vector<Vec> dirs = hit_directions(dim);
    std::vector<double> hsupp(dirs.size());
    for (std::size_t d = 0; d < dirs.size(); ++d) hsupp[d] = eval_support(body, dirs[d]);

    // axis-aligned bounds of K itself
    double lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
    for (int ax = 0; ax < dim; ++ax) {
        Vec e{0, 0, 0};
        e[ax] = 1.0;
        hi[ax] = eval_support(body, e);
        e[ax] = -1.0;
        lo[ax] = -eval_support(body, e);
    }

    SteinerFit fit;
    fit.epsilons = epsilons;
    SplitMix64 rng(seed);
    for (double eps : epsilons) {
        double boxvol = 1.0;
        for (int ax = 0; ax < dim; ++ax) boxvol *= (hi[ax] - lo[ax] + 2.0 * eps);
        long hits = 0;
        for (long s = 0; s < samples; ++s) {
            Vec x{0, 0, 0};
            for (int ax = 0; ax < dim; ++ax)
                x[ax] = rng.uniform(lo[ax] - eps, hi[ax] + eps);
            bool inside = true;
            for (std::size_t d = 0; d < dirs.size(); ++d) {
                if (dot(x, dirs[d]) - hsupp[d] > eps) {
                    inside = false;
                    break;
                }
            }
            if (inside) ++hits;
        }
        fit.volumes.push_back(boxvol * double(hits) / double(samples));
    }

    // least squares for vol(eps) = sum_j a_j eps^j, j = 0..dim
    const int nc = dim + 1;
    std::vector<double> ata(nc * nc, 0.0), atb(nc, 0.0);
    for (std::size_t r = 0; r < epsilons.size(); ++r) {
        std::vector<double> row(nc);
        row[0] = 1.0;
        for (int j = 1; j < nc; ++j) row[j] = row[j - 1] * epsilons[r];
        for (int i = 0; i < nc; ++i) {
            atb[i] += row[i] * fit.volumes[r];
            for (int j = 0; j < nc; ++j) ata[i * nc + j] += row[i] * row[j];
        }
    }
    solve_dense(ata, atb, nc);
    // coefficient of eps^j is kappa_j * V_{dim-j}
    fit.v1_est = atb[dim - 1] / kappa_m(dim - 1);
    fit.v2_est = atb[dim - 2] / kappa_m(dim - 2);
    return fit;
}

}  // namespace shapemetric
