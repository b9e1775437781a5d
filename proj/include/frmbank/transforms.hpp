#pragma once

#include <span>

#include "frmbank/types.hpp"

namespace frmbank {

/// Replace each unit delay by L delays: output[k*L] = input[k], zeros
/// elsewhere. H_out(e^{jw}) = H_in(e^{jwL}). Output length L*(N-1)+1.
Fir interpolate(const Fir& filter, int l_factor);

/// Coefficient modulation h[n] * e^{j*center*n}, shifting the response right
/// by `center`. center = 0 returns the input unchanged.
Fir modulate(const Fir& filter, double center);

/// Delay-complement z^{-(N-1)/2} - H(z). Requires a real even-symmetric
/// odd-length filter so the delay term is an integer delay.
Fir complement(const Fir& filter);

/// Linear convolution of the coefficient sequences.
Fir cascade(const Fir& a, const Fir& b);

/// Coefficient-wise sum after right-padding to the longest input. All inputs
/// are taken to share zero leading delay.
Fir parallel_sum(std::span<const Fir> filters);

} // namespace frmbank
