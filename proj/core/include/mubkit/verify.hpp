// Invariant suite run against a basis set: normalization identities, the
// power-sum interval bounds, sigma <= tau, the distance sandwich, and the
// classification-specific closed forms. Violations carry the pair indices
// and the margin by which the bound failed.
#pragma once

#include <string>
#include <vector>

#include "mubkit/measures.hpp"

namespace mubkit {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::vector<std::string> violations;  // "pair (l,m): ... margin ..."

    CheckResult() = default;
    explicit CheckResult(std::string n) : name(std::move(n)) {}
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Runs every applicable check at absolute tolerance tol (default 1e-9).
// Checks, in order:
//   orthonormality           per-basis residuals
//   row-normalization        row/column sums of squared overlaps equal 1,
//                            grand total equals d
//   power-sum-bounds         sum |.|^(2+delta) in [d^(1-delta/2), d] and
//                            sum |.|^(2-delta) in [d, d^(1+delta/2)],
//                            delta in {0.5, 1, 2}
//   sigma-le-tau             per pair
//   distance-sandwich        1 - ((d+sqrt(d))^2/(d-1)) sigma^2 <= D^2
//                            <= 1 - (d/(d-1)) sigma^2
//   welch-bound              frame potential >= 1/sym_dim at t = 2
//   label-specific closed forms:
//     MUB:    tau = sigma = 0, every pair D^2 = 1 and Omega_2 = 1
//     APMUB:  tau = 1/sqrt(d), sigma^2 = (2/d)(1 - 1/beta),
//             ASD = 1 - (beta^2-1)/(d-1), nonzero-overlap fraction = 1/beta^2
//     AMUB:   1 - (beta^4-1)/(d-1) <= ASD <= 1, and tau matches the
//             max(beta-1, 1-beta_min)/sqrt(d) case split
VerifyReport verify_basis_set(const BasisSet& s, double tol = kDefaultTol);

}  // namespace mubkit
