#pragma once

#include <complex>
#include <vector>

namespace shapemetric {

// In-place radix-2 FFT; size must be a power of two. inverse = true
// applies the 1/N scaling.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

// c[j] = sum_i a[i] * b[(i - j) mod N], all N shifts at once.
// Sizes must match and be a power of two.
std::vector<double> circular_cross_correlation(const std::vector<double>& a,
                                               const std::vector<double>& b);

}  // namespace shapemetric
