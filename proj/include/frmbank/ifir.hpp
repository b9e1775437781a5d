#pragma once

#include "frmbank/fir_design.hpp"
#include "frmbank/types.hpp"

namespace frmbank {

/// Two-stage realization of a narrow filter: a prototype stretched by
/// `l_ifir` cascaded with an image suppressor. l_ifir = 1 degenerates to a
/// direct design with an impulse suppressor.
struct IfirPair {
    Fir prototype;
    Fir image_suppressor;
    int l_ifir = 1;
    Fir effective; // cascade(interpolate(prototype, l_ifir), image_suppressor)

    static IfirPair direct(Fir filter);
};

/// A stretch factor is usable when the stretched prototype stopband stays
/// below pi and the first spectral image clears the passband.
bool ifir_factor_feasible(const FilterSpec& spec, int l_ifir);

/// Design both stages for a fixed factor. The passband ripple budget is
/// halved per stage (linear deviation); each stage independently meets the
/// full stopband attenuation, slightly tightened so the cascade cannot fall
/// short where one stage's passband ripple multiplies the other's stopband.
IfirPair design_ifir(const FilterSpec& spec, int l_ifir, const DesignOptions& opts = {});

/// Sweep l_ifir in [1, search_max], keep the pair with the fewest prototype
/// plus suppressor multipliers; ties go to the smaller factor.
IfirPair optimize_lifir(const FilterSpec& spec, int search_max = 16,
                        const DesignOptions& opts = {});

} // namespace frmbank
