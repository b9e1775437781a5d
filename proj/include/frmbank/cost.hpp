#pragma once

#include "frmbank/frm.hpp"
#include "frmbank/types.hpp"

namespace frmbank {

/// Distinct coefficient multipliers: symmetric pairs share one multiplier
/// and exact zeros (e.g. from interpolation) cost nothing.
int multiplier_count(const Fir& filter);

/// Per-subfilter multiplier counts. Interpolated and modulated copies reuse
/// the same multipliers, so the modal filter and each masking-filter stage
/// are counted exactly once across all channels.
struct CostReport {
    int m_modal = 0;
    int m_ma_pr = 0;
    int m_ma_is = 0;
    int m_mc_pr = 0;
    int m_mc_is = 0;
    int total = 0;
};

CostReport total_cost(const ModFrmDesign& design);

} // namespace frmbank
