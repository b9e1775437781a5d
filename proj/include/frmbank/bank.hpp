#pragma once

#include <vector>

#include "frmbank/frm.hpp"
#include "frmbank/types.hpp"

namespace frmbank {

/// Masker assignment for one channel of the alternate masking scheme.
struct ChannelParity {
    bool even_branch_uses_ma = true; // false means the maskers are swapped
};

struct UniformBank {
    ModFrmDesign design;
    int channel_count = 0;
    std::vector<Fir> channels;
    std::vector<ChannelParity> parity_map;
};

/// Channel count C = (m+1)*L/5 for Case I, (m+1)*L/3 for Case II. The
/// divisibility is a hard requirement of the masking geometry.
int channel_count_formula(int m, int l_factor, MaskingCase masking_case);

/// C_max = ceil(1/f_s) for a stopband frequency f_s given in units of pi.
int max_channels(double stopband_over_pi);

/// All M channels of the alternate masking scheme: the even/odd interpolated
/// branch sums are fixed, only the masking filters are modulated per channel
/// (swapped for odd channels).
UniformBank build_uniform_bank(const ModFrmDesign& design);

struct DistortionReport {
    double peak_deviation_db = 0.0;
    std::size_t grid_size = 0;
};

/// Peak of |10 log10 sum_k |H_k|^2 - offset| with the offset normalizing the
/// grid median to 0 dB.
DistortionReport amplitude_distortion(const UniformBank& bank, std::size_t grid_size);

struct Allocation {
    std::vector<int> counts;
    std::vector<int> start_channels;
    std::vector<int> signs; // one per source channel consumed by the merge
};

/// Choose per-channel signs for each merged group (exhaustive over the
/// group, first sign pinned to +1) minimizing the peak passband ripple of
/// the merged magnitude over the union of constituent passbands.
Allocation plan_merge(const UniformBank& bank, std::span<const int> counts);

/// Non-uniform bank: each output is the signed sum of a_i adjacent channels.
std::vector<Fir> merge_channels(const UniformBank& bank, std::span<const int> counts);
std::vector<Fir> merge_channels(const UniformBank& bank, const Allocation& allocation);

} // namespace frmbank
