#include "frmbank/transforms.hpp"

#include <cmath>

namespace frmbank {

Fir interpolate(const Fir& filter, int l_factor) {
    if (l_factor < 1)
        throw spec_error("interpolate: factor must be >= 1");
    if (l_factor == 1)
        return filter;
    const std::size_t n = filter.length();
    const std::size_t l = static_cast<std::size_t>(l_factor);
    std::vector<cplx> out((n - 1) * l + 1, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) out[k * l] = filter[k];
    return Fir(std::move(out));
}

Fir modulate(const Fir& filter, double center) {
    if (center == 0.0)
        return filter;
    std::vector<cplx> out(filter.length());
    for (std::size_t n = 0; n < filter.length(); ++n)
        out[n] = filter[n] * std::polar(1.0, center * static_cast<double>(n));
    return Fir(std::move(out));
}

Fir complement(const Fir& filter) {
    if (!filter.is_real() || filter.symmetry() != Symmetry::EvenSymmetric ||
        filter.length() % 2 == 0)
        throw spec_error("complement: requires a real even-symmetric odd-length filter");
    std::vector<cplx> out(filter.coeffs().begin(), filter.coeffs().end());
    for (cplx& c : out) c = -c;
    out[(filter.length() - 1) / 2] += 1.0;
    return Fir(std::move(out));
}

Fir cascade(const Fir& a, const Fir& b) {
    const std::size_t na = a.length(), nb = b.length();
    std::vector<cplx> out(na + nb - 1, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < out.size(); ++k) {
        cplx acc(0.0, 0.0);
        const std::size_t ilo = k >= nb - 1 ? k - (nb - 1) : 0;
        const std::size_t ihi = std::min(k, na - 1);
        for (std::size_t i = ilo; i <= ihi; ++i) acc += a[i] * b[k - i];
        out[k] = acc;
    }
    return Fir(std::move(out));
}

Fir parallel_sum(std::span<const Fir> filters) {
    if (filters.empty())
        throw spec_error("parallel_sum: empty filter list");
    std::size_t n = 0;
    for (const Fir& f : filters) n = std::max(n, f.length());
    std::vector<cplx> out(n, cplx(0.0, 0.0));
    for (const Fir& f : filters)
        for (std::size_t i = 0; i < f.length(); ++i) out[i] += f[i];
    return Fir(std::move(out));
}

} // namespace frmbank
