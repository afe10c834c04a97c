#pragma once

#include <string>
#include <vector>

#include "detrees/checks.hpp"

namespace detrees {

struct ShapeReport {
    Shape shape;
    std::vector<CheckReport> checks;
};

/// JSON with stable key order:
/// {"shape":{"n":..,"r":..,"s":..},"checks":[{"name":..,"status":"pass|fail|skip",
///  "witnesses":[..],"params":{..},"millis":..}, ...]}
std::string reports_to_json(const ShapeReport& report, int indent = 2);
std::string reports_to_json(const std::vector<ShapeReport>& reports, int indent = 2);

/// Inverse of reports_to_json; throws InputError on malformed input.
ShapeReport parse_shape_report(const std::string& json_text);
std::vector<ShapeReport> parse_shape_reports(const std::string& json_text);

std::string report_to_text(const ShapeReport& report);

}  // namespace detrees
