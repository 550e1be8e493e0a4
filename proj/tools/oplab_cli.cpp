#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "oplab/contraction_criteria.hpp"
#include "oplab/json_io.hpp"
#include "oplab/linalg.hpp"
#include "oplab/suites.hpp"

namespace {

int print_error(const oplab::Error& e, bool json)
{
    if (json) {
        std::cout << nlohmann::json{{"error", oplab::to_string(e.kind())}, {"message", e.what()}}.dump(2) << '\n';
    } else {
        std::cerr << "oplab: " << e.what() << '\n';
    }
    return 2;
}

int run_command(const oplab::SuiteConfig& config, bool json)
{
    const oplab::SuiteSummary s = oplab::run_suite(config);
    if (json) {
        std::cout << oplab::summary_to_json(s).dump(2) << '\n';
    } else {
        std::printf("%-24s trials %llu  reports %llu  failures %llu  worst slack %.3e  equality %llu  %.0f ms\n",
                    s.config.suite.c_str(), static_cast<unsigned long long>(s.trials_run),
                    static_cast<unsigned long long>(s.reports_checked), static_cast<unsigned long long>(s.failures),
                    s.worst_slack, static_cast<unsigned long long>(s.equality_hits), s.wall_time_ms);
        for (const auto& r : s.failing_reports) {
            std::printf("  FAIL %s lhs %.17g rhs %.17g slack %.3e %s\n", r.name.c_str(), r.lhs, r.rhs, r.slack,
                        r.context.dump().c_str());
        }
    }
    return s.failures == 0 ? 0 : 1;
}

int check_matrix_command(const std::string& path, double tol, bool json)
{
    const oplab::ComplexMatrix m = oplab::read_matrix_file(path);
    const auto v = oplab::is_contraction(m, tol);
    nlohmann::json out{{"rows", m.rows()},
                       {"cols", m.cols()},
                       {"norm", v.norm},
                       {"margin", v.margin},
                       {"tolerance", tol},
                       {"is_contraction", v.is_contraction}};
    bool consistent = true;
    if (m.rows() == 3 && m.cols() == 3 && m.is_upper_triangular()) {
        const auto c = oplab::criterion_3x3(m, tol);
        nlohmann::json conditions = nlohmann::json::object();
        for (const auto& s : c.conditions) {
            conditions[s.name] = s.slack;
        }
        out["criterion"] = {{"branch", c.branch == oplab::Criterion3x3Verdict::Branch::Interior ? "interior" : "boundary"},
                            {"conditions", conditions},
                            {"is_contraction", c.is_contraction},
                            {"near_threshold", c.near_threshold},
                            {"branches_agree", c.branches_agree}};
        consistent = c.is_contraction == v.is_contraction;
    } else {
        out["criterion"] = nullptr;
        out["note"] = "scalar 3x3 criterion needs a 3x3 upper-triangular matrix";
    }

    if (json) {
        std::cout << out.dump(2) << '\n';
    } else {
        std::printf("%zux%zu  norm %.17g  margin %.3e  %s\n", m.rows(), m.cols(), v.norm, v.margin,
                    v.is_contraction ? "contraction" : "not a contraction");
        if (out["criterion"].is_null()) {
            std::printf("note: %s\n", out["note"].get<std::string>().c_str());
        } else {
            std::printf("criterion (%s branch): %s\n", out["criterion"]["branch"].get<std::string>().c_str(),
                        out["criterion"]["is_contraction"].get<bool>() ? "contraction" : "not a contraction");
            for (const auto& [name, slack] : out["criterion"]["conditions"].items()) {
                std::printf("  %-8s %.6e\n", name.c_str(), slack.get<double>());
            }
        }
    }
    return v.is_contraction && consistent ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Randomized verification of disk and contraction inequalities"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Machine-readable output on stdout");

    oplab::SuiteConfig config;
    std::string out_path;
    auto* run = app.add_subcommand("run", "Run a verification suite");
    run->add_option("suite", config.suite, "Suite name (see `oplab list`)")->required();
    run->add_option("--trials", config.trials, "Number of trials")->check(CLI::PositiveNumber);
    run->add_option("--seed", config.seed, "Base seed; trial i uses seed ^ i");
    run->add_option("--tol", config.tolerance, "Feasibility tolerance")->check(CLI::PositiveNumber);
    run->add_option("--degree", config.degree_cap, "Degree cap for random functions")->check(CLI::Range(1, 64));
    run->add_option("--out", out_path, "Write the JSON summary here");
    run->add_flag("--reports", config.keep_reports, "Include every report in the JSON");
    run->add_flag("--json", json, "Machine-readable output on stdout");

    std::string matrix_path;
    double matrix_tol = oplab::kDefaultTolerance;
    auto* check = app.add_subcommand("check-matrix", "Contraction check for a matrix JSON file");
    check->add_option("path", matrix_path, "Matrix JSON file")->required();
    check->add_option("--tol", matrix_tol, "Tolerance")->check(CLI::PositiveNumber);
    check->add_flag("--json", json, "Machine-readable output on stdout");

    auto* list = app.add_subcommand("list", "List suite names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*list) {
            for (const auto& name : oplab::suite_names()) {
                std::cout << name << '\n';
            }
            return 0;
        }
        if (*run) {
            if (!out_path.empty()) {
                config.output_path = out_path;
            }
            return run_command(config, json);
        }
        return check_matrix_command(matrix_path, matrix_tol, json);
    } catch (const oplab::Error& e) {
        return print_error(e, json);
    }
}
