#pragma once

// Brute-force cross-checks of every construction against its definition.

#include <string>
#include <vector>

#include "cubiclat/int3.hpp"

namespace cubiclat {

/// Primitive vectors with 0 < |v|^2 <= max_norm, in lexicographic order.
std::vector<IntVec3> primitive_vectors(Int max_norm);

struct VerifyOptions {
    Int max_norm = 200;
    Int max_d = 5;
};

struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0; }
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts);

} // namespace cubiclat
