#include "frmbank/ifir.hpp"

#include <cmath>

#include "frmbank/cost.hpp"
#include "frmbank/transforms.hpp"

namespace frmbank {

namespace {

double pp_ripple_db(double delta) { return 20.0 * std::log10((1.0 + delta) / (1.0 - delta)); }

FilterSpec stage_spec(double pass, double stop, double dp, double ds) {
    return FilterSpec{pass, stop, pp_ripple_db(dp), -20.0 * std::log10(ds)};
}

} // namespace

IfirPair IfirPair::direct(Fir filter) {
    Fir effective = filter;
    return IfirPair{std::move(filter), Fir::impulse(), 1, std::move(effective)};
}

bool ifir_factor_feasible(const FilterSpec& spec, int l_ifir) {
    if (l_ifir < 1) return false;
    if (l_ifir == 1) return true;
    const double l = static_cast<double>(l_ifir);
    if (l * spec.stopband_edge >= kPi - 1e-9) return false;          // stretched bands stay valid
    if (kTwoPi / l - spec.stopband_edge <= spec.passband_edge + 1e-12)
        return false;                                                 // first image clears passband
    return true;
}

IfirPair design_ifir(const FilterSpec& spec, int l_ifir, const DesignOptions& opts) {
    spec.validate();
    if (!ifir_factor_feasible(spec, l_ifir))
        throw spec_error("design_ifir: infeasible stretch factor (image overlaps passband)");
    if (l_ifir == 1)
        return IfirPair::direct(equiripple_design(spec, {}, opts));

    const double l = static_cast<double>(l_ifir);
    const double dp_stage = 0.5 * spec.passband_delta();
    // tightened so a stage passband peak times the other stage's stopband
    // ripple cannot exceed the composite stopband target
    const double ds_stage = spec.stopband_delta() / (1.0 + dp_stage);

    const FilterSpec proto_spec =
        stage_spec(l * spec.passband_edge, l * spec.stopband_edge, dp_stage, ds_stage);
    const FilterSpec supp_spec =
        stage_spec(spec.passband_edge, kTwoPi / l - spec.stopband_edge, dp_stage, ds_stage);

    Fir prototype = equiripple_design(proto_spec, {}, opts);
    Fir suppressor = equiripple_design(supp_spec, {}, opts);
    Fir effective = cascade(interpolate(prototype, l_ifir), suppressor);
    if (!meets_spec(measure_spec(effective, spec), spec, opts.slack_db))
        throw numeric_error("design_ifir: cascade missed the spec after budget split");
    return IfirPair{std::move(prototype), std::move(suppressor), l_ifir, std::move(effective)};
}

IfirPair optimize_lifir(const FilterSpec& spec, int search_max, const DesignOptions& opts) {
    spec.validate();
    if (search_max < 1)
        throw spec_error("optimize_lifir: search_max must be >= 1");
    IfirPair best = IfirPair::direct(equiripple_design(spec, {}, opts));
    int best_cost = multiplier_count(best.prototype) + multiplier_count(best.image_suppressor);
    for (int l = 2; l <= search_max; ++l) {
        if (!ifir_factor_feasible(spec, l)) continue;
        try {
            IfirPair cand = design_ifir(spec, l, opts);
            const int cost =
                multiplier_count(cand.prototype) + multiplier_count(cand.image_suppressor);
            if (cost < best_cost) {
                best = std::move(cand);
                best_cost = cost;
            }
        } catch (const numeric_error&) {
            // infeasible at this factor, not fatal for the sweep
        }
    }
    return best;
}

} // namespace frmbank
