#include "frmbank/cost.hpp"

namespace frmbank {

int multiplier_count(const Fir& filter) {
    const std::size_t n = filter.length();
    int count = 0;
    if (filter.symmetry() == Symmetry::EvenSymmetric) {
        for (std::size_t i = 0; i < (n + 1) / 2; ++i)
            if (filter[i] != cplx(0.0, 0.0)) ++count;
    } else {
        for (std::size_t i = 0; i < n; ++i)
            if (filter[i] != cplx(0.0, 0.0)) ++count;
    }
    return count;
}

CostReport total_cost(const ModFrmDesign& design) {
    CostReport r;
    r.m_modal = multiplier_count(design.modal);
    r.m_ma_pr = multiplier_count(design.hma.prototype);
    r.m_ma_is = multiplier_count(design.hma.image_suppressor);
    r.m_mc_pr = multiplier_count(design.hmc.prototype);
    r.m_mc_is = multiplier_count(design.hmc.image_suppressor);
    r.total = r.m_modal + r.m_ma_pr + r.m_ma_is + r.m_mc_pr + r.m_mc_is;
    return r;
}

} // namespace frmbank
