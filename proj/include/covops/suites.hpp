#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace covops {

// Reports are ordered JSON documents: key order is fixed by construction and
// all content is exact (strings of rationals/polynomials), so a fixed
// (suite, config, seed) produces byte-identical files. Timing is opt-in
// because it would break that guarantee.
using Report = nlohmann::ordered_json;

struct SuiteConfig {
    std::vector<int> ms{1, 2};
    std::vector<int> ks{1, 2};
    std::vector<long> lambdas{-2, -1, 0, 1, 2, 3};
    std::vector<long> mus{-2, -1, 0, 1, 2, 3};
    int samples = 20;
    std::uint64_t seed = 20260815;
    bool inject_fault = false;
    bool timing = false;
};

// bernstein, products, ef, m1-classical, covariance, group-action,
// normalization, omega-compare (and the umbrella "all")
const std::vector<std::string>& suite_names();

Report run_suite(const std::string& name, const SuiteConfig& cfg);

// any check with status "fail", anywhere in the document
bool report_has_failure(const Report& r);

} // namespace covops
