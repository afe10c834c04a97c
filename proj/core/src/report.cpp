#include "detrees/report.hpp"

#include <json.hpp>
#include <sstream>

#include "detrees/errors.hpp"

namespace detrees {

namespace {

using json = nlohmann::ordered_json;

std::string status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "?";
}

CheckStatus status_from(const std::string& s) {
    if (s == "pass") return CheckStatus::Pass;
    if (s == "fail") return CheckStatus::Fail;
    if (s == "skip") return CheckStatus::Skip;
    throw InputError("report: unknown status '" + s + "'");
}

json check_to_json(const CheckReport& c) {
    json j;
    j["name"] = c.name;
    j["status"] = status_str(c.status);
    if (c.status == CheckStatus::Skip) j["reason"] = c.skip_reason;
    j["witnesses"] = c.witnesses;
    json params = json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    j["params"] = params;
    if (!c.comparisons.empty()) {
        json comps = json::array();
        for (const auto& cmp : c.comparisons) {
            json jc;
            jc["quantity"] = cmp.quantity;
            jc["formula"] = cmp.formula;
            jc["computed"] = cmp.computed;
            jc["equal"] = cmp.equal;
            comps.push_back(jc);
        }
        j["comparisons"] = comps;
    }
    j["millis"] = c.millis;
    return j;
}

json shape_report_to_json(const ShapeReport& r) {
    json j;
    j["shape"] = {{"n", r.shape.n}, {"r", r.shape.r}, {"s", r.shape.s}};
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(check_to_json(c));
    j["checks"] = checks;
    return j;
}

CheckReport check_from_json(const json& j, const Shape& sh) {
    CheckReport c;
    c.name = j.at("name").get<std::string>();
    c.shape = sh;
    c.status = status_from(j.at("status").get<std::string>());
    if (j.contains("reason")) c.skip_reason = j.at("reason").get<std::string>();
    for (const auto& w : j.at("witnesses")) c.witnesses.push_back(w.get<std::string>());
    for (const auto& [k, v] : j.at("params").items()) c.params.push_back({k, v.get<std::string>()});
    if (j.contains("comparisons")) {
        for (const auto& jc : j.at("comparisons")) {
            InvariantComparison cmp;
            cmp.quantity = jc.at("quantity").get<std::string>();
            cmp.formula = jc.at("formula").get<std::string>();
            cmp.computed = jc.at("computed").get<std::string>();
            cmp.equal = jc.at("equal").get<bool>();
            c.comparisons.push_back(std::move(cmp));
        }
    }
    c.millis = j.at("millis").get<double>();
    return c;
}

ShapeReport shape_report_from_json(const json& j) {
    ShapeReport r;
    r.shape = shape_validate(j.at("shape").at("n").get<int>(), j.at("shape").at("r").get<int>(),
                             j.at("shape").at("s").get<int>());
    for (const auto& jc : j.at("checks")) r.checks.push_back(check_from_json(jc, r.shape));
    return r;
}

}  // namespace

std::string reports_to_json(const ShapeReport& report, int indent) {
    return shape_report_to_json(report).dump(indent);
}

std::string reports_to_json(const std::vector<ShapeReport>& reports, int indent) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(shape_report_to_json(r));
    return arr.dump(indent);
}

ShapeReport parse_shape_report(const std::string& json_text) {
    try {
        return shape_report_from_json(json::parse(json_text));
    } catch (const json::exception& e) {
        throw InputError(std::string("report parse: ") + e.what());
    }
}

std::vector<ShapeReport> parse_shape_reports(const std::string& json_text) {
    try {
        json arr = json::parse(json_text);
        std::vector<ShapeReport> out;
        for (const auto& j : arr) out.push_back(shape_report_from_json(j));
        return out;
    } catch (const json::exception& e) {
        throw InputError(std::string("report parse: ") + e.what());
    }
}

std::string report_to_text(const ShapeReport& report) {
    std::ostringstream out;
    out << "shape " << report.shape.str() << "\n";
    for (const auto& c : report.checks) {
        out << "  [" << status_str(c.status) << "] " << c.name;
        out << " (" << static_cast<long>(c.millis) << " ms)";
        if (c.status == CheckStatus::Skip) out << "  -- " << c.skip_reason;
        out << "\n";
        for (const auto& cmp : c.comparisons)
            out << "      " << cmp.quantity << ": formula " << cmp.formula << (cmp.equal ? " == " : " != ")
                << "computed " << cmp.computed << "\n";
        for (const auto& w : c.witnesses) out << "      witness: " << w << "\n";
    }
    return out.str();
}

}  // namespace detrees
