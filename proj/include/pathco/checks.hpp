#pragma once

#include "pathco/galois.hpp"

namespace pathco {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct CheckContext {
    PathSpacePtr space;   // session quiver and truncation
    uint64_t seed = 0;
    int trials = 50;
};

/// Named invariant suites, one per documented law. "all" runs the battery.
std::vector<std::string> check_ids();
CheckResult run_check(const std::string& id, const CheckContext& ctx);
std::vector<CheckResult> run_all_checks(const CheckContext& ctx);

}  // namespace pathco
