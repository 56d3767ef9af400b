#pragma once

// Invariant suites behind `charcone verify`.

#include <string>
#include <string_view>
#include <vector>

namespace charcone {

struct VerifyOptions {
    int n = 1;
    double m = 1.0;
    /// Quadrature level; 0 picks a per-suite default.
    int level = 0;
    /// Replaces every tolerance when > 0.
    double tol = 0.0;
};

struct CheckResult {
    std::string suite;
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    /// Comparison used: "<=" (measured <= tolerance) or ">=".
    std::string relation = "<=";
};

inline constexpr std::string_view kSuites[] = {"roundtrip", "seminorms", "multiplicators", "transform2",
                                               "pauli-jordan"};

/// Runs one suite, or every suite for "all". Throws DomainError for an
/// unknown name.
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& opts);

/// "PASS suite/name measured=... <= tol=..."
std::string format_check(const CheckResult& c);

}  // namespace charcone
