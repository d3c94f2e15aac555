#pragma once

#include <string>
#include <vector>

namespace spinent {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    /// Negative-control hook: perturbs one entry of the two-fermion S_x
    /// before running the checks, which must make the algebra check fail.
    bool inject_fault = false;
};

/// Runs the whole cross-check suite: operator algebra, spectra, basis
/// cross-validation against the tabulated matrices, closed form vs direct
/// computation, phase invariance, product-distribution factorization, Bell
/// values, the traced-entropy curve and sampler determinism.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace spinent
