#include "frmbank/frm.hpp"

#include <cmath>

#include "frmbank/detail/fft.hpp"
#include "frmbank/transforms.hpp"

namespace frmbank {

void ModalConfig::validate() const {
    if (m < 1 || m % 2 == 0)
        throw spec_error("ModalConfig: m must be a positive odd integer");
    if (l_factor < 1)
        throw spec_error("ModalConfig: interpolation factor must be >= 1");
    if (!(theta > 0.0 && theta < phi && phi < kPi))
        throw spec_error("ModalConfig: need 0 < theta < phi < pi");
    if (std::abs((m + 1) * (theta + phi) - kTwoPi) > 1e-9)
        throw spec_error("ModalConfig: (m+1)*(theta+phi) must equal 2*pi");
}

MaskingEdges masking_edges(const ModalConfig& config) {
    config.validate();
    const double t = config.theta, p = config.phi;
    const double l = static_cast<double>(config.l_factor);
    if (config.masking_case == MaskingCase::CaseI)
        return {(3.0 * t + 2.0 * p) / l, (4.0 * t + 3.0 * p) / l,
                (t + 2.0 * p) / l, (2.0 * t + 3.0 * p) / l};
    return {p / l, (t + 2.0 * p) / l, (2.0 * t + p) / l, (3.0 * t + 2.0 * p) / l};
}

namespace {

// Residue class of the modal length that keeps adjacent interpolated
// replicas in phase quadrature: consecutive replica centers differ by a
// static phase pi*(N-1)/(m+1), which must be an odd multiple of pi/2.
int modal_length_residue(int m) {
    const int period = m + 1;
    return (1 + period / 2) % period;
}

Fir modal_at_offset(const FilterSpec& spec, double offset, int length,
                    const RemezOptions& remez) {
    const FilterSpec s{spec.passband_edge + offset, spec.stopband_edge + offset,
                       spec.passband_ripple_db, spec.stopband_atten_db};
    const std::vector<Band> bands = {
        Band{0.0, s.passband_edge, 1.0, 1.0 / s.passband_delta()},
        Band{s.stopband_edge, kPi, 0.0, 1.0 / s.stopband_delta()}};
    return remez_design(bands, length, remez).filter;
}

} // namespace

ModalDesign design_modal_info(const FilterSpec& spec, const ModalConfig& config,
                              const DesignOptions& opts) {
    spec.validate();
    config.validate();
    if (std::abs(spec.passband_edge - config.theta) > 1e-12 ||
        std::abs(spec.stopband_edge - config.phi) > 1e-12)
        throw spec_error("design_modal: spec edges must equal (theta, phi)");

    const int period = config.m + 1;
    const int residue = modal_length_residue(config.m);

    int n = std::max(2, estimate_order(spec) - opts.search_back);
    while (n % period != residue) ++n;

    Fir unshifted = Fir::impulse();
    bool found = false;
    for (; n <= opts.max_length; n += period) {
        Fir f = modal_at_offset(spec, 0.0, n, opts.remez);
        if (meets_spec(measure_spec(f, spec), spec, opts.slack_db)) {
            unshifted = std::move(f);
            found = true;
            break;
        }
    }
    if (!found)
        throw numeric_error("design_modal: length cap exceeded (unachievable modal spec)");

    // Bisect the common edge offset until the crossover sits at -3.01 dB.
    const double crossover = 0.5 * (config.theta + config.phi);
    const double half_width = 0.5 * spec.transition_width();
    const double target = 1.0 / std::sqrt(2.0);
    auto gain_at = [&](double offset) {
        const Fir f = modal_at_offset(spec, offset, n, opts.remez);
        return std::abs(freq_response_at(f, crossover));
    };
    double lo = -half_width, hi = half_width;
    if (spec.passband_edge + lo <= 0.0) lo = -spec.passband_edge * 0.5;
    if (spec.stopband_edge + hi >= kPi) hi = 0.5 * (kPi - spec.stopband_edge);
    if (!(gain_at(lo) < target && gain_at(hi) > target))
        throw numeric_error("design_modal: cannot bracket the 3-dB point");

    double offset = 0.0, gain = gain_at(0.0);
    for (int it = 0; it < 80 && std::abs(gain - target) > 1e-4; ++it) {
        if (gain > target)
            hi = offset;
        else
            lo = offset;
        offset = 0.5 * (lo + hi);
        gain = gain_at(offset);
    }
    if (std::abs(gain - target) > 1e-4)
        throw numeric_error("design_modal: 3-dB adjustment did not converge");

    ModalDesign out{modal_at_offset(spec, offset, n, opts.remez), offset,
                    FilterSpec{spec.passband_edge + offset, spec.stopband_edge + offset,
                               spec.passband_ripple_db, spec.stopband_atten_db}};
    const BandMeasurement m = measure_spec(out.filter, out.shifted_spec);
    if (!meets_spec(m, out.shifted_spec, 1.0))
        throw numeric_error("design_modal: shifted design lost more than 1 dB");
    return out;
}

Fir design_modal(const FilterSpec& spec, const ModalConfig& config, const DesignOptions& opts) {
    return design_modal_info(spec, config, opts).filter;
}

double check_power_complementarity(const Fir& modal, int m, std::size_t grid_size) {
    if (!modal.is_real() || modal.symmetry() != Symmetry::EvenSymmetric)
        throw spec_error("check_power_complementarity: modal must be real and symmetric");
    if (m < 1 || m % 2 == 0)
        throw spec_error("check_power_complementarity: m must be a positive odd integer");
    const std::size_t grid =
        detail::next_pow2(std::max<std::size_t>(grid_size, 8 * modal.length()));
    std::vector<double> total(grid, 0.0);
    for (int q = 0; q <= m; ++q) {
        const Fir hq = modulate(modal, kTwoPi * q / static_cast<double>(m + 1));
        const std::vector<double> mag = detail::magnitude_grid(hq.coeffs(), grid);
        for (std::size_t i = 0; i < grid; ++i) total[i] += mag[i] * mag[i];
    }
    double dev = 0.0;
    for (double t : total) dev = std::max(dev, std::abs(t - 1.0));
    return dev;
}

namespace detail {

std::pair<Fir, Fir> align_masking_pair(const Fir& a, const Fir& b) {
    if ((a.length() + b.length()) % 2 != 0)
        throw spec_error("masking filters must have lengths of matching parity");
    auto pad = [](const Fir& f, std::size_t target) {
        if (f.length() == target) return f;
        const std::size_t side = (target - f.length()) / 2;
        std::vector<cplx> c(target, cplx(0.0, 0.0));
        for (std::size_t i = 0; i < f.length(); ++i) c[i + side] = f[i];
        return Fir(std::move(c));
    };
    const std::size_t target = std::max(a.length(), b.length());
    return {pad(a, target), pad(b, target)};
}

Fir branch_sum(const Fir& modal, int m, int l_factor, int parity) {
    std::vector<Fir> parts;
    for (int q = parity; q <= m; q += 2)
        parts.push_back(
            interpolate(modulate(modal, kTwoPi * q / static_cast<double>(m + 1)), l_factor));
    return parallel_sum(parts);
}

} // namespace detail

Fir compose_frm(const Fir& ha, const Fir& hma, const Fir& hmc, int l_factor) {
    if (!ha.is_real() || ha.symmetry() != Symmetry::EvenSymmetric || ha.length() % 2 == 0)
        throw spec_error("compose_frm: band-edge filter must be real, symmetric, odd-length");
    const auto [ma, mc] = detail::align_masking_pair(hma, hmc);
    const Fir branch_a = cascade(interpolate(ha, l_factor), ma);
    const Fir branch_c = cascade(interpolate(complement(ha), l_factor), mc);
    if (branch_a.length() != branch_c.length())
        throw numeric_error("compose_frm: branch delays failed to align");
    const Fir branches[] = {branch_a, branch_c};
    return parallel_sum(branches);
}

ModFrmDesign compose_modfrm(const ModalConfig& config, const Fir& modal, const IfirPair& hma,
                            const IfirPair& hmc, double edge_offset,
                            const FilterSpec& modal_spec) {
    config.validate();
    const auto [ma, mc] = detail::align_masking_pair(hma.effective, hmc.effective);
    const Fir even = detail::branch_sum(modal, config.m, config.l_factor, 0);
    const Fir odd = detail::branch_sum(modal, config.m, config.l_factor, 1);
    const Fir branch_a = cascade(even, ma);
    const Fir branch_c = cascade(odd, mc);
    if (branch_a.length() != branch_c.length())
        throw numeric_error("compose_modfrm: branch delays failed to align");
    const Fir branches[] = {branch_a, branch_c};
    ModFrmDesign d{modal, config, hma, hmc, parallel_sum(branches), edge_offset, modal_spec};
    return d;
}

FilterSpec overall_spec(const ModFrmDesign& design) {
    const MaskingEdges e = masking_edges(design.config);
    const double shift = design.edge_offset / static_cast<double>(design.config.l_factor);
    const double pass =
        design.config.masking_case == MaskingCase::CaseI ? e.ma_pass : e.mc_pass;
    const double stop =
        design.config.masking_case == MaskingCase::CaseI ? e.mc_stop : e.ma_stop;
    FilterSpec s = design.modal_spec;
    s.passband_edge = pass + shift;
    s.stopband_edge = stop + shift;
    return s;
}

} // namespace frmbank
