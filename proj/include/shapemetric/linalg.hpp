#pragma once

#include <functional>
#include <vector>

namespace shapemetric {

// Eigenvalues of a small dense symmetric matrix (row-major, size n*n),
// cyclic Jacobi sweeps. Returned unsorted.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

// Golden-section minimization of f on [lo, hi]; returns argmin.
double golden_minimize(const std::function<double(double)>& f, double lo, double hi,
                       double xtol = 1e-12, int max_iter = 200);

// Nelder-Mead on R^dim starting from x0 with the given initial step.
std::vector<double> nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> x0, double step, int max_iter = 200,
                                double ftol = 1e-14);

}  // namespace shapemetric
