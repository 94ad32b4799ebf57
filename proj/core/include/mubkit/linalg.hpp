// Complex vector/matrix kernel and the basis-set representation every
// construction and measure operates on. Dense double-precision storage;
// vectors are treated as immutable after construction and all operations
// here are pure.
#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mubkit {

using cplx = std::complex<double>;

constexpr double kDefaultTol = 1e-9;

// Unit vector in C^d, amplitudes indexed 0..d-1.
struct CVector {
    std::vector<cplx> amp;

    CVector() = default;
    explicit CVector(std::vector<cplx> a) : amp(std::move(a)) {}

    std::size_t dim() const { return amp.size(); }
    double norm_sq() const;

    // |v| - 1 deviation measured on the squared norm, |sum|a_i|^2 - 1|.
    double norm_residual() const;
};

// Orthonormal basis of C^d: exactly d unit vectors with vanishing mutual
// inner products.
struct Basis {
    std::string label;
    std::vector<CVector> vectors;

    std::size_t dim() const { return vectors.size(); }
};

// A family of r orthonormal bases of common dimension d.
struct BasisSet {
    std::size_t dim = 0;
    std::vector<Basis> bases;
    std::string provenance;

    std::size_t size() const { return bases.size(); }
};

// Dense row-major real matrix, used for overlap tables.
struct RealTable {
    std::size_t rows = 0, cols = 0;
    std::vector<double> v;

    RealTable() = default;
    RealTable(std::size_t r, std::size_t c) : rows(r), cols(c), v(r * c, 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return v[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return v[i * cols + j]; }
};

// <u|v>, conjugate-linear in the first argument. Throws on dimension mismatch.
cplx inner_product(const CVector& u, const CVector& v);

// Entry (i,j) is |<psi_i^B1 | psi_j^B2>|. For orthonormal inputs every row
// and column of squared entries sums to 1 and the grand total is d.
RealTable overlap_table(const Basis& b1, const Basis& b2);

// Squared-magnitude variant, |<psi_i|psi_j>|^2.
RealTable overlap_sq_table(const Basis& b1, const Basis& b2);

struct BasisResidual {
    double norm = 0.0;   // worst | ||v||^2 - 1 | over member vectors
    double ortho = 0.0;  // worst |<v_i|v_j>|, i != j
    double max() const { return norm > ortho ? norm : ortho; }
};

struct ValidationReport {
    std::vector<BasisResidual> per_basis;
    double max_residual = 0.0;
    double tol = kDefaultTol;  // tolerance the report was requested at
    bool dims_consistent = true;
    bool passed() const { return passed(tol); }
    bool passed(double at) const { return dims_consistent && max_residual <= at; }
};

// Orthonormality audit of every member basis. Never throws; failures are
// carried in the report.
ValidationReport validate_basis_set(const BasisSet& set, double tol = kDefaultTol);

}  // namespace mubkit
