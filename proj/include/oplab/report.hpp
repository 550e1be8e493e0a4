#pragma once

#include <string>

#include "json.hpp"
#include "oplab/error.hpp"

namespace oplab {

struct InequalityReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0; // rhs - lhs
    bool holds = false;
    bool equality = false;
    nlohmann::json context = nlohmann::json::object();
};

/// holds iff slack >= -tolerance; equality additionally needs |slack| <= 1e-8.
InequalityReport make_report(std::string name, double lhs, double rhs, double tolerance = kDefaultTolerance,
                             nlohmann::json context = nlohmann::json::object());

/// Failing report for a trial that threw: lhs 1, rhs 0, context {"error": message}.
InequalityReport error_report(std::string name, const std::string& message);

nlohmann::json to_json(const InequalityReport& r);

} // namespace oplab
