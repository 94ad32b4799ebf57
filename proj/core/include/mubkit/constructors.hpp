// Turns algebraic and combinatorial inputs into basis sets: exact MUBs in
// prime dimension, tensor-product weak MUBs in dimension pq, and design-based
// approximate MUBs where each parallel class becomes one sparse basis.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mubkit/designs.hpp"
#include "mubkit/linalg.hpp"

namespace mubkit {

// p+1 mutually unbiased bases of C^p: the computational basis plus the
// quadratic-exponent bases for odd primes, the Pauli eigenbases for p = 2.
BasisSet prime_mubs(int p);

// All (p+1)(q+1) tensor products of the complete MUB sets of two distinct
// primes; dimension d = p*q. Basis (i,j) is M_i (x) N_j, j varying fastest.
BasisSet weak_mubs(int p, int q);

enum class FlatPolicy {
    PreferReal,   // real Hadamard when constructible, else Fourier
    RequireReal,  // error when no real Hadamard of the block order exists
    Complex,      // always Fourier
};

struct ConstructionResult {
    BasisSet set;
    double predicted_beta = 0.0;             // mu * sqrt(s/k), recomputed from the design
    std::vector<double> predicted_delta;     // overlap values implied by the design census
    bool is_real = false;                    // all amplitudes real
};

// One basis per parallel class: each block of size k carries the k columns of
// a flat matrix of order k, supported exactly on the block's points. Cross
// overlaps are sums of |block ^ block'| unimodular terms divided by k, so
// every overlap is at most mu/k = beta/sqrt(d).
ConstructionResult rbd_to_bases(const ResolvableDesign& d,
                                FlatPolicy policy = FlatPolicy::PreferReal);

enum class SetLabel { Mub, Apmub, BetaAmub };

struct Classification {
    std::vector<double> delta;  // clustered distinct overlap values, ascending
    double beta = 0.0;          // sqrt(d) * max(delta)
    double beta_min = 0.0;      // 0 when 0 is in the spectrum, else sqrt(d)*min
    SetLabel label = SetLabel::BetaAmub;
};

std::string to_string(SetLabel label);

// Empirical spectrum classification: MUB when delta = {1/sqrt(d)}, APMUB when
// delta = {0, beta/sqrt(d)} with beta < 2, otherwise a generic beta-AMUB.
Classification classify_set(const BasisSet& s, double cluster_tol = 1e-7);

}  // namespace mubkit
