#include "shapemetric/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shapemetric {

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
    if (n < 1 || int(a.size()) != n * n)
        throw std::invalid_argument("symmetric_eigenvalues: bad dimensions");
    auto at = [&](int i, int j) -> double& { return a[i * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(at(p, q)) < 1e-300) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = at(i, i);
    return eig;
}

double golden_minimize(const std::function<double(double)>& f, double lo, double hi,
                       double xtol, int max_iter) {
    const double phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    return (f1 <= f2) ? x1 : x2;
}

std::vector<double> nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> x0, double step, int max_iter,
                                double ftol) {
    const int dim = int(x0.size());
    std::vector<std::vector<double>> simplex(dim + 1, x0);
    for (int i = 0; i < dim; ++i) simplex[i + 1][i] += step;
    std::vector<double> fv(dim + 1);
    for (int i = 0; i <= dim; ++i) fv[i] = f(simplex[i]);

    auto order = [&]() {
        std::vector<int> idx(dim + 1);
        for (int i = 0; i <= dim; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fv[a] < fv[b]; });
        std::vector<std::vector<double>> s2(dim + 1);
        std::vector<double> f2(dim + 1);
        for (int i = 0; i <= dim; ++i) {
            s2[i] = simplex[idx[i]];
            f2[i] = fv[idx[i]];
        }
        simplex = s2;
        fv = f2;
    };

    for (int it = 0; it < max_iter; ++it) {
        order();
        if (std::fabs(fv[dim] - fv[0]) < ftol) break;
        std::vector<double> centroid(dim, 0.0);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) centroid[j] += simplex[i][j] / dim;
        auto lerp = [&](double t) {
            std::vector<double> p(dim);
            for (int j = 0; j < dim; ++j) p[j] = centroid[j] + t * (simplex[dim][j] - centroid[j]);
            return p;
        };
        auto xr = lerp(-1.0);
        double fr = f(xr);
        if (fr < fv[0]) {
            auto xe = lerp(-2.0);
            double fe = f(xe);
            if (fe < fr) { simplex[dim] = xe; fv[dim] = fe; }
            else { simplex[dim] = xr; fv[dim] = fr; }
        } else if (fr < fv[dim - 1]) {
            simplex[dim] = xr;
            fv[dim] = fr;
        } else {
            auto xc = lerp(0.5);
            double fc = f(xc);
            if (fc < fv[dim]) { simplex[dim] = xc; fv[dim] = fc; }
            else {
                for (int i = 1; i <= dim; ++i) {
                    for (int j = 0; j < dim; ++j)
                        simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
                    fv[i] = f(simplex[i]);
                }
            }
        }
    }
    order();
    return simplex[0];
}

}  // namespace shapemetric
