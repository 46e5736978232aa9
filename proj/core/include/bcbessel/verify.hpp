#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bcbessel {

struct SuiteResult {
    std::string name;
    int samples = 0;
    double max_residual = 0.0;  // NaN if any sample produced NaN
    double tolerance = 0.0;
    bool pass = false;
    std::string error;  // first library error message, if a sample threw
};

struct VerifyReport {
    std::uint64_t seed = 0;
    int samples = 0;
    std::vector<SuiteResult> suites;
    bool pass() const;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    int samples = 100;  // per randomized identity suite
    int threads = 0;    // 0 = hardware concurrency
    bool quick = false; // skip the quadrature-heavy suites
};

// Runs every identity residual suite. Sample i of suite s draws from a
// generator seeded with (seed, s, i) and results are reduced in index order,
// so the report depends only on the options other than threads.
VerifyReport verify_all(const VerifyOptions& options = {});

std::vector<std::string> verify_suite_names();

}  // namespace bcbessel
