#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace berkline {

struct CheckResult {
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::string detail; // first failure, or a short summary
};

// The shipped verification suite: exact tree axioms, seminorm laws, the
// real-subtree oracle equivalence, isometry and invariance of the action,
// the disk-image boundary oracle, the degeneration convergence experiment,
// Cartan distance laws, minimal-vector and matrix-bound checks, the
// real-spectrum membership tables, and the Archimedean exhaustion index.
// One pass/fail line per check goes to `out`.
std::vector<CheckResult> run_check_suite(std::ostream& out, std::uint64_t seed, int jobs);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace berkline
