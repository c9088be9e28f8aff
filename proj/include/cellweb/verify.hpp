#pragma once

// Named, reproducible invariant suites behind `verify <check>`.  Each check
// returns a machine-readable report; failures carry a minimal reproducing
// payload.

#include <map>
#include <string>
#include <vector>

namespace cellweb {

struct VerifyReport {
    std::string check;
    std::map<std::string, std::string> params;
    bool pass = false;
    std::string payload; // summary on pass, counterexample on failure
    double seconds = 0.0;
};

std::vector<std::string> known_checks();

// params: "n" (scale), "shape", "threads" where applicable; unknown checks throw
VerifyReport run_check(const std::string& name,
                       const std::map<std::string, std::string>& params);

} // namespace cellweb
