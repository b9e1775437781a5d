#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "frmbank/frm.hpp"

namespace frmbank {

/// On-disk representation of one synthesized design. Coefficient arrays are
/// written as decimal strings with 17 significant digits so a write/read
/// round-trip reproduces every double bit-exactly. The composed filter and
/// the bank are not stored; they are recomputed from the parts on load.
struct DesignFile {
    int schema_version = 1;
    std::string command_line;
    std::string created; // ISO-8601 UTC
    ModalConfig config;
    FilterSpec spec;
    ModFrmDesign design;
    std::optional<std::vector<int>> allocation;
};

void save_design(const DesignFile& file, const std::filesystem::path& path);
DesignFile load_design(const std::filesystem::path& path);

} // namespace frmbank
