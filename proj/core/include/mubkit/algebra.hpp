// Finite-field arithmetic, mutually orthogonal Latin squares, and "flat"
// matrices (real Hadamard / complex Fourier) with unit-modulus entries and
// orthonormal columns. These feed the design and basis constructors.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mubkit/linalg.hpp"

namespace mubkit {

bool is_prime(int n);

// Arithmetic tables for GF(q). q is a prime, or one of the built-in prime
// powers {4,8,9,16,25,27,32,49}; anything else is rejected at construction.
// Elements are labelled 0..q-1 (for extensions: base-p digit encoding of the
// polynomial representative). Field axioms are checked exhaustively when the
// table is built.
class FieldTable {
public:
    explicit FieldTable(int q);

    int order() const { return q_; }
    int characteristic() const { return p_; }

    int add(int a, int b) const { return add_[idx(a, b)]; }
    int sub(int a, int b) const { return add(a, neg_[check(b)]); }
    int mul(int a, int b) const { return mul_[idx(a, b)]; }
    int neg(int a) const { return neg_[check(a)]; }
    int inv(int a) const;                 // throws for a == 0
    int div(int a, int b) const { return mul(a, inv(b)); }

    // Quadratic character: +1 nonzero square, -1 non-square, 0 at zero.
    int chi(int a) const { return chi_[check(a)]; }

private:
    int idx(int a, int b) const { return check(a) * q_ + check(b); }
    int check(int a) const;
    void verify_axioms() const;

    int q_ = 0, p_ = 0;
    std::vector<std::uint16_t> add_, mul_;
    std::vector<std::uint16_t> neg_, inv_;
    std::vector<std::int8_t> chi_;
};

// Shorthand used throughout the constructors.
FieldTable field_new(int q);

// q-1 pairwise orthogonal Latin squares of order q, L_a(i,j) = a*i + j over
// GF(q) for each nonzero a.
std::vector<std::vector<std::vector<int>>> mols_from_field(const FieldTable& f);

enum class FlatKind { RealHadamard, Fourier };

// Order-n matrix, entries of magnitude n^(-1/2), orthonormal columns. Stored
// pre-scaled so columns drop directly into basis vectors.
struct FlatMatrix {
    int order = 0;
    FlatKind kind = FlatKind::Fourier;
    std::vector<cplx> entries;  // row-major, order x order

    cplx at(int r, int c) const { return entries[static_cast<std::size_t>(r) * order + c]; }
    bool is_real() const { return kind == FlatKind::RealHadamard; }
};

// Sylvester doubling: order 2^k, k >= 0. Throws past the configured maximum
// order (4096).
FlatMatrix sylvester_hadamard(int k);

// Paley constructions from the quadratic character of GF(q):
//   q = 3 (mod 4): type I, order q+1;  q = 1 (mod 4): type II, order 2q+2.
FlatMatrix paley_hadamard(int q);

// Unitary DFT matrix, entries omega^(jk)/sqrt(n).
FlatMatrix fourier_matrix(int n);

// True when a real Hadamard of order n is constructible from Sylvester,
// Paley, or tensor products of those.
bool real_hadamard_available(int n);

// Flat matrix of order n. With prefer_real, returns a real Hadamard when one
// is constructible; otherwise falls back to Fourier unless strict, in which
// case the unavailability is reported as an error.
FlatMatrix flat_matrix_for(int n, bool prefer_real, bool strict = false);

}  // namespace mubkit
