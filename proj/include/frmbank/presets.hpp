#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frmbank/frm.hpp"

namespace frmbank {

/// Named channelizer configuration: a uniform bank plus the allocation that
/// merges it into the standards listed in `standards` (documentation only;
/// the normalized-frequency allocation is what defines the preset).
struct StandardPreset {
    std::string name;
    std::string standards;
    int uniform_channels = 0;
    std::vector<int> allocation;
    ModalConfig config;
    FilterSpec spec;
};

std::span<const StandardPreset> standard_presets();
const StandardPreset* find_preset(std::string_view name);

} // namespace frmbank
