#include "oplab/report.hpp"

#include <cmath>

namespace oplab {

InequalityReport make_report(std::string name, double lhs, double rhs, double tolerance, nlohmann::json context)
{
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.holds = std::isfinite(r.slack) && r.slack >= -tolerance;
    r.equality = r.holds && std::abs(r.slack) <= kEqualityTolerance;
    r.context = context.is_null() ? nlohmann::json::object() : std::move(context);
    return r;
}

InequalityReport error_report(std::string name, const std::string& message)
{
    InequalityReport r = make_report(std::move(name), 1.0, 0.0, 0.0);
    r.context = {{"error", message}};
    return r;
}

nlohmann::json to_json(const InequalityReport& r)
{
    return {{"name", r.name},     {"lhs", r.lhs},           {"rhs", r.rhs},          {"slack", r.slack},
            {"holds", r.holds},   {"equality", r.equality}, {"context", r.context}};
}

} // namespace oplab
