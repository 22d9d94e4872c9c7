// verify.hpp
// The verification suites: every formula, recurrence, certification and
// figure-reproduction claim the project makes, checked end to end against
// enumeration oracles and exact arithmetic. The acceptance runner and the
// CLI `verify` command both drive these.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dompoly::app {

struct VerifyAssertion {
    std::string id;
    std::string params;
    bool pass = false;
    double ms = 0.0;
    std::string detail;  // failure explanation, or reported values
};

struct VerifySuiteResult {
    std::string suite;
    std::string description;
    std::vector<VerifyAssertion> assertions;
    bool all_pass = true;
    double total_ms = 0.0;
    double runtime_limit_ms = 0.0;  // 0 = no limit asserted
};

struct VerifyReport {
    std::vector<VerifySuiteResult> suites;
    bool all_pass = true;
    double total_ms = 0.0;
};

// Suite names in canonical order.
std::vector<std::string> verify_suite_names();

// selector: one suite name, or "all". Unknown selectors throw
// std::invalid_argument listing the valid names.
VerifyReport run_verify(const std::string& selector, std::uint64_t seed = 1);

std::string verify_json(const VerifyReport& report);

}  // namespace dompoly::app
