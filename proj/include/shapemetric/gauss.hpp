#pragma once

#include <vector>

namespace shapemetric {

// Gauss-Legendre nodes and weights on [-1,1], Newton iteration on the
// Legendre recurrence. Exact for polynomials of degree 2*npts - 1.
void gauss_legendre(int npts, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace shapemetric
