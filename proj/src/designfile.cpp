#include "frmbank/designfile.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "frmbank/transforms.hpp"

namespace frmbank {

namespace {

using nlohmann::json;

json coeffs_to_json(const Fir& f) {
    json arr = json::array();
    char buf[40];
    for (double v : f.real_coeffs()) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        arr.push_back(std::string(buf));
    }
    return arr;
}

Fir coeffs_from_json(const json& arr) {
    if (!arr.is_array() || arr.empty())
        throw spec_error("design file: coefficient array missing or empty");
    std::vector<double> c;
    c.reserve(arr.size());
    for (const json& v : arr) {
        if (!v.is_string())
            throw spec_error("design file: coefficients must be decimal strings");
        const std::string s = v.get<std::string>();
        char* end = nullptr;
        const double d = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
            throw spec_error("design file: unparsable coefficient '" + s + "'");
        c.push_back(d);
    }
    return Fir::real(std::move(c));
}

json pair_to_json(const IfirPair& p) {
    return json{{"l_ifir", p.l_ifir},
                {"prototype", coeffs_to_json(p.prototype)},
                {"image_suppressor", coeffs_to_json(p.image_suppressor)}};
}

IfirPair pair_from_json(const json& j) {
    Fir proto = coeffs_from_json(j.at("prototype"));
    Fir supp = coeffs_from_json(j.at("image_suppressor"));
    const int l = j.at("l_ifir").get<int>();
    if (l < 1)
        throw spec_error("design file: invalid l_ifir");
    Fir effective = cascade(interpolate(proto, l), supp);
    return IfirPair{std::move(proto), std::move(supp), l, std::move(effective)};
}

} // namespace

void save_design(const DesignFile& file, const std::filesystem::path& path) {
    json j{
        {"schema_version", file.schema_version},
        {"provenance", {{"command_line", file.command_line}, {"created", file.created}}},
        {"config",
         {{"theta", file.config.theta},
          {"phi", file.config.phi},
          {"m", file.config.m},
          {"L", file.config.l_factor},
          {"case", file.config.masking_case == MaskingCase::CaseI ? "I" : "II"}}},
        {"spec",
         {{"passband_edge", file.spec.passband_edge},
          {"stopband_edge", file.spec.stopband_edge},
          {"passband_ripple_db", file.spec.passband_ripple_db},
          {"stopband_atten_db", file.spec.stopband_atten_db}}},
        {"modal",
         {{"edge_offset", file.design.edge_offset},
          {"coeffs", coeffs_to_json(file.design.modal)}}},
        {"hma", pair_to_json(file.design.hma)},
        {"hmc", pair_to_json(file.design.hmc)},
        {"channels", channel_count_formula(file.config.m, file.config.l_factor,
                                           file.config.masking_case)},
    };
    if (file.allocation)
        j["allocation"] = *file.allocation;

    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw spec_error("cannot open for writing: " + tmp.string());
        out << j.dump(2) << "\n";
        if (!out)
            throw spec_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

DesignFile load_design(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw spec_error("cannot open design file: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw spec_error("design file is not valid JSON: " + std::string(e.what()));
    }
    try {
        DesignFile f;
        f.schema_version = j.at("schema_version").get<int>();
        if (f.schema_version != 1)
            throw spec_error("unsupported design file schema_version");
        if (j.contains("provenance")) {
            f.command_line = j["provenance"].value("command_line", "");
            f.created = j["provenance"].value("created", "");
        }
        const json& jc = j.at("config");
        f.config.theta = jc.at("theta").get<double>();
        f.config.phi = jc.at("phi").get<double>();
        f.config.m = jc.at("m").get<int>();
        f.config.l_factor = jc.at("L").get<int>();
        const std::string cs = jc.at("case").get<std::string>();
        if (cs != "I" && cs != "II")
            throw spec_error("design file: case must be 'I' or 'II'");
        f.config.masking_case = cs == "I" ? MaskingCase::CaseI : MaskingCase::CaseII;
        const json& js = j.at("spec");
        f.spec.passband_edge = js.at("passband_edge").get<double>();
        f.spec.stopband_edge = js.at("stopband_edge").get<double>();
        f.spec.passband_ripple_db = js.at("passband_ripple_db").get<double>();
        f.spec.stopband_atten_db = js.at("stopband_atten_db").get<double>();
        f.config.validate();
        f.spec.validate();

        Fir modal = coeffs_from_json(j.at("modal").at("coeffs"));
        const double offset = j.at("modal").at("edge_offset").get<double>();
        IfirPair hma = pair_from_json(j.at("hma"));
        IfirPair hmc = pair_from_json(j.at("hmc"));
        f.design = compose_modfrm(f.config, modal, hma, hmc, offset, f.spec);
        if (j.contains("allocation"))
            f.allocation = j["allocation"].get<std::vector<int>>();
        return f;
    } catch (const json::exception& e) {
        throw spec_error("design file schema error: " + std::string(e.what()));
    }
}

} // namespace frmbank
