#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gkz/scalar.hpp"
#include "gkz/sector_point.hpp"

namespace gkz {

struct CriterionResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    nlohmann::json details;
};

// Optional overrides consulted by individual criteria (mu-recovery accepts
// A = (a,b), beta and p from the command line).
struct VerifyOptions {
    std::optional<std::vector<long long>> A;
    std::optional<Complex> beta;
    std::optional<long long> p;
};

std::vector<std::string> criterion_names();
CriterionResult run_criterion(const std::string& name, const VerifyOptions& opts = {});

} // namespace gkz
