#pragma once

// Command orchestration and the versioned JSON/CSV report format ("commlie-report/1").
//
// Reports carry no timestamp. The input digest covers every option that affects the result
// (the worker count does not), so identical invocations produce identical bytes.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace commlie {

inline constexpr std::string_view report_schema = "commlie-report/1";

const char* tool_version();

struct ReportOptions {
    std::string command;  // check, cohomology, hs-ss, compare, les, survey
    std::string algebra = "catalog:N";
    std::string module = "trivial";
    std::string ideal;
    std::string subalgebra;
    std::vector<std::string> flavors{"sym"};
    std::size_t max_degree = 4;
    std::size_t jobs = 1;
    std::size_t survey_dim = 2;
    bool up_to_iso = true;
};

const std::vector<std::string>& report_commands();

/// Keys as in ReportOptions, with "max_degree", "survey_dim" and "up_to_iso"; unknown keys are rejected.
ReportOptions report_options_from_json(std::string_view text);
nlohmann::json report_options_to_json(const ReportOptions& options);

struct Report {
    nlohmann::json document;
    std::vector<std::vector<std::string>> table;  // CSV rows, header first
    bool checks_passed = true;
};

/// Throws Error on invalid input. Failed internal checks set checks_passed; mismatches with
/// published values are listed under "flags" and do not fail the report.
Report run_report(const ReportOptions& options);

/// "json" (pretty, trailing newline) or "csv".
std::string render_report(const Report& report, std::string_view format);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace commlie
