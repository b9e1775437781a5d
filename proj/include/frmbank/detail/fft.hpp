#pragma once

#include <cstddef>
#include <vector>

#include "frmbank/types.hpp"

namespace frmbank::detail {

/// In-place iterative radix-2 FFT. Size must be a power of two.
/// Only used for magnitude grids; arbitrary-grid evaluation goes through
/// freq_response().
void fft(std::vector<cplx>& data, bool inverse = false);

std::size_t next_pow2(std::size_t n);

/// |H(e^{j 2 pi k / M})| for k = 0..M-1, M a power of two >= coefficient count.
std::vector<double> magnitude_grid(std::span<const cplx> coeffs, std::size_t grid_size);

} // namespace frmbank::detail
