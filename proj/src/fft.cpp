#include "shapemetric/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace shapemetric {

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_inplace: size must be a power of two");
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const double pi = 3.14159265358979323846;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * pi / double(len) * (inverse ? 1.0 : -1.0);
        std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                std::complex<double> u = a[i + k];
                std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& x : a) x /= double(n);
}

std::vector<double> circular_cross_correlation(const std::vector<double>& a,
                                               const std::vector<double>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("circular_cross_correlation: size mismatch");
    const std::size_t n = a.size();
    std::vector<std::complex<double>> fa(n), fb(n);
    for (std::size_t i = 0; i < n; ++i) {
        fa[i] = a[i];
        fb[i] = b[i];
    }
    fft_inplace(fa, false);
    fft_inplace(fb, false);
    for (std::size_t i = 0; i < n; ++i) fa[i] *= std::conj(fb[i]);
    fft_inplace(fa, true);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = fa[i].real();
    return out;
}

}  // namespace shapemetric
