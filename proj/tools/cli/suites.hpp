#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "io.hpp"

namespace wkl::cli {

// status: "pass", "fail" or "divergent-as-expected"; oracle names where the expected value comes from.
struct Case {
    std::string name;
    std::string status;
    Json measured;
    Json expected;
    Json tolerance;
    std::string oracle;
    int trials = 0;
    int passed = -1;  // -1: not counted
};

struct SuiteResult {
    std::string suite;
    std::vector<Case> cases;
    double seconds = 0.0;
    bool ok() const;
};

struct VerifyOptions {
    std::uint64_t seed = 7;
    std::optional<BlockSpec> group;
    int degree_cap = 12;
    int quad_nodes = 256;
};

const std::vector<std::string>& suite_names();
// Throws InvalidArgument for an unknown suite; "all" is expanded by the caller.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

// Timing is left out so that reports are byte-stable.
Json to_json(const SuiteResult& r);
std::string human_table(const std::vector<SuiteResult>& results);

}  // namespace wkl::cli
