#pragma once

#include "frmbank/bank.hpp"
#include "frmbank/cost.hpp"
#include "frmbank/frm.hpp"
#include "frmbank/ifir.hpp"

namespace frmbank {

struct PipelineOptions {
    int lifir_search_max = 16;
    DesignOptions design{};
};

/// Full synthesis chain: 3-dB-adjusted modal design, masking-edge
/// derivation, IFIR-optimized masking filters, composition.
ModFrmDesign design_pipeline(const FilterSpec& spec, const ModalConfig& config,
                             const PipelineOptions& opts = {});

/// Same chain but reusing an already designed modal filter; the modal
/// depends only on (theta, phi, m), so interpolation sweeps share it.
ModFrmDesign design_with_modal(const ModalDesign& modal, const FilterSpec& spec,
                               const ModalConfig& config, const PipelineOptions& opts = {});

} // namespace frmbank
