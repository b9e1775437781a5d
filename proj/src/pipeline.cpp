#include "frmbank/pipeline.hpp"

namespace frmbank {

ModFrmDesign design_with_modal(const ModalDesign& modal, const FilterSpec& spec,
                               const ModalConfig& config, const PipelineOptions& opts) {
    const MaskingEdges edges = masking_edges(config);
    const FilterSpec ma_spec{edges.ma_pass, edges.ma_stop, spec.passband_ripple_db,
                             spec.stopband_atten_db};
    const FilterSpec mc_spec{edges.mc_pass, edges.mc_stop, spec.passband_ripple_db,
                             spec.stopband_atten_db};
    const IfirPair hma = optimize_lifir(ma_spec, opts.lifir_search_max, opts.design);
    const IfirPair hmc = optimize_lifir(mc_spec, opts.lifir_search_max, opts.design);
    return compose_modfrm(config, modal.filter, hma, hmc, modal.edge_offset, spec);
}

ModFrmDesign design_pipeline(const FilterSpec& spec, const ModalConfig& config,
                             const PipelineOptions& opts) {
    const ModalDesign modal = design_modal_info(spec, config, opts.design);
    return design_with_modal(modal, spec, config, opts);
}

} // namespace frmbank
