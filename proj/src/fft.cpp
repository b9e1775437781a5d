#include "frmbank/detail/fft.hpp"

#include <cmath>

namespace frmbank::detail {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft(std::vector<cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw numeric_error("fft: size must be a nonzero power of two");

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? kTwoPi : -kTwoPi) / static_cast<double>(len);
        const cplx wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double s = 1.0 / static_cast<double>(n);
        for (cplx& x : a) x *= s;
    }
}

std::vector<double> magnitude_grid(std::span<const cplx> coeffs, std::size_t grid_size) {
    const std::size_t m = next_pow2(std::max(grid_size, coeffs.size()));
    std::vector<cplx> buf(m, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) buf[i] = coeffs[i];
    fft(buf);
    std::vector<double> mag(m);
    for (std::size_t i = 0; i < m; ++i) mag[i] = std::abs(buf[i]);
    return mag;
}

} // namespace frmbank::detail
