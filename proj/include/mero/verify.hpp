#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace mero::verify {

enum class Suite { Sharpness, Oracles, Criteria, Limits, All };

std::string_view to_string(Suite s) noexcept;
/// sharpness, oracles, criteria, limits or all.
Suite parse_suite(std::string_view name);

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the named suite on the default parameter grid. Deterministic: the
/// same build always produces the same results in the same order.
std::vector<CheckResult> run_suite(Suite suite);

/// One `PASS|FAIL suite/name: detail` line per check, then a summary line.
void print_results(std::ostream& out, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace mero::verify
