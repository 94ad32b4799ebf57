// Application-level figures of merit: prepare-and-measure key rates, the
// intercept-resend disturbance (closed form, exhaustive expectation, and
// seeded Monte Carlo), and the entropic uncertainty bound for basis pairs.
#pragma once

#include <cstdint>

#include "mubkit/linalg.hpp"
#include "mubkit/random.hpp"

namespace mubkit {

// (1/k) log2 d: average raw bits per transmitted system when the honest
// parties sift on matching bases.
double raw_key_rate(int d, int k);

// ((k-1)/k)(1 - 1/d): sifted error under intercept-resend when the k bases
// are mutually unbiased; strictly increasing in both arguments.
double mub_sift_error(int d, int k);

struct QkdOutcome {
    double raw_rate = 0.0;
    double sift_error = 0.0;
    long long trials = 0;     // 0 marks a closed-form/exact value
    double std_error = 0.0;
    std::uint64_t seed = 0;
};

// Exact sifted-error expectation: uniform Alice basis/vector, uniform Eve
// basis, Bob measuring in Alice's basis; the error term for each
// (state, Eve-basis) choice is 1 - sum_j p_j^2.
double intercept_resend_exact(const BasisSet& s);

// Monte Carlo estimate of the same expectation. Deterministic given the
// seed: trial i draws from substream(seed, i), so results do not depend on
// evaluation order. std_error = sqrt(p(1-p)/trials).
QkdOutcome intercept_resend_sift_error(const BasisSet& s, long long trials, std::uint64_t seed);

// Shannon entropy (bits) of the outcome distribution p_i = |<psi_i|state>|^2;
// 0 log 0 = 0.
double outcome_entropy(const CVector& state, const Basis& b);

// -log2 max|<v1|v2>|: lower bound on the average measurement entropy
// (1/2)(H(B1) + H(B2)) over pure states; equals (1/2) log2 d for an
// unbiased pair.
double maassen_uffink_bound(const Basis& b1, const Basis& b2);

}  // namespace mubkit
