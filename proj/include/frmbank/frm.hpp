#pragma once

#include "frmbank/fir_design.hpp"
#include "frmbank/ifir.hpp"
#include "frmbank/types.hpp"

namespace frmbank {

enum class MaskingCase { CaseI, CaseII };

/// Modal-filter configuration. theta/phi are the nominal band edges; the
/// modulated copies of the modal filter tile [0, 2pi) when
/// (m+1)*(theta+phi) = 2pi and m is odd.
struct ModalConfig {
    double theta = 0.0;
    double phi = 0.0;
    int m = 1;
    int l_factor = 1;
    MaskingCase masking_case = MaskingCase::CaseI;

    void validate() const;
};

struct MaskingEdges {
    double ma_pass = 0.0;
    double ma_stop = 0.0;
    double mc_pass = 0.0;
    double mc_stop = 0.0;
};

/// Masking-filter band edges for the configured case:
///   Case I:  Ma = ((3t+2p)/L, (4t+3p)/L),  Mc = ((t+2p)/L, (2t+3p)/L)
///   Case II: Ma = (p/L, (t+2p)/L),         Mc = ((2t+p)/L, (3t+2p)/L)
MaskingEdges masking_edges(const ModalConfig& config);

struct ModalDesign {
    Fir filter;
    double edge_offset = 0.0; // common shift applied to both band edges
    FilterSpec shifted_spec;  // the spec the returned filter actually meets
};

/// Equiripple modal design with the band edges shifted by a common offset
/// (transition width held constant) until |H| at the channel crossover
/// (theta+phi)/2 equals 1/sqrt(2) within 1e-4. The filter length is pinned
/// to the residue class that keeps adjacent interpolated replicas in phase
/// quadrature, so summed replicas join flat at their -3 dB crossings:
/// N = 1 + (m+1)/2 (mod m+1). For m = 1 this forces an even length.
ModalDesign design_modal_info(const FilterSpec& spec, const ModalConfig& config,
                              const DesignOptions& opts = {});

Fir design_modal(const FilterSpec& spec, const ModalConfig& config,
                 const DesignOptions& opts = {});

/// max over the grid of | sum_{q=0}^{m} |H_q(e^{jw})|^2 - 1 | where H_q are
/// the DFT modulations of the modal filter at centers 2*pi*q/(m+1).
double check_power_complementarity(const Fir& modal, int m, std::size_t grid_size);

/// Conventional two-branch composition
/// H(z) = Ha(z^L) HMa(z) + Hc(z^L) HMc(z), branch delays equalized by
/// symmetric zero-padding of the shorter masking filter.
Fir compose_frm(const Fir& ha, const Fir& hma, const Fir& hmc, int l_factor);

struct ModFrmDesign {
    Fir modal;
    ModalConfig config;
    IfirPair hma;
    IfirPair hmc;
    Fir overall;
    double edge_offset = 0.0;   // modal edge shift from the 3-dB adjustment
    FilterSpec modal_spec{};    // nominal modal design target
};

/// Narrow-transition-band composition: even-indexed modulated channels are
/// interpolated, summed and masked by HMa, odd-indexed by HMc.
ModFrmDesign compose_modfrm(const ModalConfig& config, const Fir& modal, const IfirPair& hma,
                            const IfirPair& hmc, double edge_offset = 0.0,
                            const FilterSpec& modal_spec = {});

/// Band edges the composed `overall` filter actually realizes: the masking
/// arithmetic of the nominal edges plus the modal 3-dB shift divided by L.
FilterSpec overall_spec(const ModFrmDesign& design);

namespace detail {
/// Zero-pad the shorter filter symmetrically to the longer one's length so
/// both carry the same group delay. Lengths must share parity.
std::pair<Fir, Fir> align_masking_pair(const Fir& a, const Fir& b);

/// Sum of the interpolated modulated channels of one parity (0 = even).
Fir branch_sum(const Fir& modal, int m, int l_factor, int parity);
} // namespace detail

} // namespace frmbank
