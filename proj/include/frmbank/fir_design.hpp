#pragma once

#include <optional>
#include <span>
#include <vector>

#include "frmbank/types.hpp"

namespace frmbank {

/// One band of a piecewise-constant design target. `weight` is the error
/// weight; with weight = 1/delta the achieved weighted deviation is <= 1
/// exactly when every band meets its allowed deviation.
struct Band {
    double lo = 0.0;
    double hi = 0.0;
    double desired = 0.0;
    double weight = 1.0;
};

struct RemezOptions {
    int grid_density = 16;      // grid points per basis function
    int max_iterations = 64;
    double convergence = 1e-10; // relative change of the extremal deviation
};

struct RemezResult {
    Fir filter;
    double deviation = 0.0;                // achieved weighted minimax deviation
    int iterations = 0;
    std::vector<double> extremal_freqs;    // final reference set, ascending
};

/// Weighted-Chebyshev linear-phase FIR design by Remez exchange. Supports
/// odd lengths (type I) and even lengths (type II); even-length designs have
/// a structural zero at w = pi, so no band may require a nonzero value there.
RemezResult remez_design(std::span<const Band> bands, int length, const RemezOptions& opts = {});

struct DesignOptions {
    int max_length = 1601;  // auto-increment cap
    int search_back = 6;    // taps below the order estimate to start the search
    double slack_db = 0.0;  // measurement slack when gating against the spec
    RemezOptions remez{};
};

/// Herrmann-style closed-form order estimate, rounded to the nearest odd
/// length (>= 3). Rejects transition widths below 1e-5 * pi.
int estimate_order(const FilterSpec& spec);

/// Equiripple two-band lowpass design. With `length` given, designs exactly
/// that (odd) length; otherwise starts near estimate_order() and increments
/// by 2 until measure_spec passes, up to opts.max_length.
Fir equiripple_design(const FilterSpec& spec, std::optional<int> length = {},
                      const DesignOptions& opts = {});

/// H(e^{jw}) = sum_n h[n] e^{-jwn} per grid point.
std::vector<cplx> freq_response(const Fir& filter, std::span<const double> grid);

/// Single-point evaluation of H(e^{jw}).
cplx freq_response_at(const Fir& filter, double omega);

/// Dense-grid measurement (16N-point power-of-two grid plus the exact band
/// edges): worst-case peak-to-peak passband deviation, minimum stopband
/// attenuation, and the spec transition width.
BandMeasurement measure_spec(const Fir& filter, const FilterSpec& spec);

bool meets_spec(const BandMeasurement& meas, const FilterSpec& spec, double slack_db = 0.0);

} // namespace frmbank
