#include "frmbank/bank.hpp"

#include <algorithm>
#include <cmath>

#include "frmbank/detail/fft.hpp"
#include "frmbank/transforms.hpp"

namespace frmbank {

int channel_count_formula(int m, int l_factor, MaskingCase masking_case) {
    if (m < 1 || m % 2 == 0)
        throw spec_error("channel_count_formula: m must be a positive odd integer");
    if (l_factor < 1)
        throw spec_error("channel_count_formula: interpolation factor must be >= 1");
    const int divisor = masking_case == MaskingCase::CaseI ? 5 : 3;
    const int product = (m + 1) * l_factor;
    if (product % divisor != 0)
        throw spec_error("channel_count_formula: (m+1)*L must be divisible by " +
                         std::to_string(divisor));
    return product / divisor;
}

int max_channels(double stopband_over_pi) {
    if (!(stopband_over_pi > 0.0 && stopband_over_pi <= 1.0))
        throw spec_error("max_channels: stopband frequency must lie in (0, 1] (units of pi)");
    return static_cast<int>(std::ceil((1.0 / stopband_over_pi) * (1.0 - 1e-12)));
}

UniformBank build_uniform_bank(const ModFrmDesign& design) {
    const int m_channels =
        channel_count_formula(design.config.m, design.config.l_factor,
                              design.config.masking_case);
    const auto [ma, mc] =
        detail::align_masking_pair(design.hma.effective, design.hmc.effective);
    const Fir even = detail::branch_sum(design.modal, design.config.m,
                                        design.config.l_factor, 0);
    const Fir odd = detail::branch_sum(design.modal, design.config.m,
                                       design.config.l_factor, 1);

    UniformBank bank{design, m_channels, {}, {}};
    bank.channels.reserve(static_cast<std::size_t>(m_channels));
    bank.parity_map.reserve(static_cast<std::size_t>(m_channels));
    for (int k = 0; k < m_channels; ++k) {
        const double wk = kTwoPi * k / static_cast<double>(m_channels);
        const bool even_uses_ma = (k % 2 == 0);
        const Fir& even_mask = even_uses_ma ? ma : mc;
        const Fir& odd_mask = even_uses_ma ? mc : ma;
        const Fir branches[] = {cascade(even, modulate(even_mask, wk)),
                                cascade(odd, modulate(odd_mask, wk))};
        bank.channels.push_back(parallel_sum(branches));
        bank.parity_map.push_back(ChannelParity{even_uses_ma});
    }
    return bank;
}

DistortionReport amplitude_distortion(const UniformBank& bank, std::size_t grid_size) {
    std::size_t len = 0;
    for (const Fir& c : bank.channels) len = std::max(len, c.length());
    const std::size_t grid = detail::next_pow2(std::max(grid_size, 8 * len));
    std::vector<double> total(grid, 0.0);
    for (const Fir& c : bank.channels) {
        const std::vector<double> mag = detail::magnitude_grid(c.coeffs(), grid);
        for (std::size_t i = 0; i < grid; ++i) total[i] += mag[i] * mag[i];
    }
    std::vector<double> db(grid);
    for (std::size_t i = 0; i < grid; ++i)
        db[i] = total[i] > 0.0 ? 10.0 * std::log10(total[i]) : -300.0;
    std::vector<double> sorted = db;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double offset = sorted[sorted.size() / 2];
    double peak = 0.0;
    for (double v : db) peak = std::max(peak, std::abs(v - offset));
    return DistortionReport{peak, grid};
}

namespace {

void validate_counts(const UniformBank& bank, std::span<const int> counts) {
    if (counts.empty())
        throw spec_error("merge_channels: empty allocation");
    long total = 0;
    for (int c : counts) {
        if (c < 1)
            throw spec_error("merge_channels: allocation counts must be positive");
        if (c > 16)
            throw spec_error("merge_channels: allocation group too large for sign search");
        total += c;
    }
    if (total > bank.channel_count)
        throw spec_error("merge_channels: allocation exceeds the channel count");
}

} // namespace

Allocation plan_merge(const UniformBank& bank, std::span<const int> counts) {
    validate_counts(bank, counts);
    const double hw = overall_spec(bank.design).passband_edge;
    const int m_channels = bank.channel_count;

    std::size_t len = 0;
    for (const Fir& c : bank.channels) len = std::max(len, c.length());
    const std::size_t grid = detail::next_pow2(std::max<std::size_t>(8 * len, 4096));

    // complex responses, computed once per consumed channel
    std::vector<std::vector<cplx>> resp(bank.channels.size());
    auto response = [&](int k) -> const std::vector<cplx>& {
        auto& r = resp[static_cast<std::size_t>(k)];
        if (r.empty()) {
            r.assign(grid, cplx(0.0, 0.0));
            const Fir& f = bank.channels[static_cast<std::size_t>(k)];
            for (std::size_t i = 0; i < f.length(); ++i) r[i] = f[i];
            detail::fft(r);
        }
        return r;
    };

    Allocation alloc;
    alloc.counts.assign(counts.begin(), counts.end());
    int start = 0;
    for (int a : counts) {
        alloc.start_channels.push_back(start);

        // grid indices inside the union of the constituent passbands
        std::vector<std::size_t> idx;
        for (int k = start; k < start + a; ++k) {
            const double center = kTwoPi * k / static_cast<double>(m_channels);
            const long lo = static_cast<long>(
                std::ceil((center - hw) / kTwoPi * static_cast<double>(grid)));
            const long hi = static_cast<long>(
                std::floor((center + hw) / kTwoPi * static_cast<double>(grid)));
            for (long g = lo; g <= hi; ++g)
                idx.push_back(static_cast<std::size_t>((g % static_cast<long>(grid) +
                                                        static_cast<long>(grid)) %
                                                       static_cast<long>(grid)));
        }
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());

        // exhaustive sign search, first sign pinned to +1
        double best_ripple = std::numeric_limits<double>::infinity();
        unsigned best_bits = 0;
        for (unsigned bits = 0; bits < (1u << (a - 1)); ++bits) {
            double vmax = 0.0, vmin = std::numeric_limits<double>::infinity();
            for (std::size_t g : idx) {
                cplx acc(0.0, 0.0);
                for (int j = 0; j < a; ++j) {
                    const double s = (j > 0 && (bits >> (j - 1)) & 1u) ? -1.0 : 1.0;
                    acc += s * response(start + j)[g];
                }
                const double v = std::abs(acc);
                vmax = std::max(vmax, v);
                vmin = std::min(vmin, v);
            }
            const double ripple = vmin > 0.0 ? vmax / vmin
                                             : std::numeric_limits<double>::infinity();
            if (ripple < best_ripple) {
                best_ripple = ripple;
                best_bits = bits;
            }
        }
        for (int j = 0; j < a; ++j)
            alloc.signs.push_back(j > 0 && (best_bits >> (j - 1)) & 1u ? -1 : 1);
        start += a;
    }
    return alloc;
}

std::vector<Fir> merge_channels(const UniformBank& bank, const Allocation& allocation) {
    std::vector<Fir> out;
    out.reserve(allocation.counts.size());
    std::size_t sign_pos = 0;
    for (std::size_t i = 0; i < allocation.counts.size(); ++i) {
        const int start = allocation.start_channels[i];
        const int a = allocation.counts[i];
        std::size_t len = 0;
        for (int k = start; k < start + a; ++k)
            len = std::max(len, bank.channels[static_cast<std::size_t>(k)].length());
        std::vector<cplx> acc(len, cplx(0.0, 0.0));
        for (int j = 0; j < a; ++j) {
            const double s = static_cast<double>(allocation.signs[sign_pos++]);
            const Fir& f = bank.channels[static_cast<std::size_t>(start + j)];
            for (std::size_t n = 0; n < f.length(); ++n) acc[n] += s * f[n];
        }
        out.emplace_back(std::move(acc));
    }
    return out;
}

std::vector<Fir> merge_channels(const UniformBank& bank, std::span<const int> counts) {
    return merge_channels(bank, plan_merge(bank, counts));
}

} // namespace frmbank
