#pragma once

#include <json.hpp>

namespace ppsym {

struct VerifyOptions {
    int max_n = 10;        // determinant chain runs for n = 1..max_n
    bool with_oracles = false;
    int oracle_max_n = 3;  // enumeration oracles run for n <= oracle_max_n
};

struct VerifyOutcome {
    nlohmann::json report;
    bool ok = false;  // no check reported "fail"
};

// Runs the per-n identity chain (and, when requested, the enumeration
// oracles) and assembles the machine-readable report. Every identity field
// is "pass", "fail" or "skipped(guard)"; all numbers are decimal strings.
VerifyOutcome run_verify(const VerifyOptions& options);

}  // namespace ppsym
