#include "mubkit/linalg.hpp"

#include <cmath>

namespace mubkit {

double CVector::norm_sq() const {
    double n = 0.0;
    for (const auto& a : amp) n += std::norm(a);
    return n;
}

double CVector::norm_residual() const { return std::abs(norm_sq() - 1.0); }

cplx inner_product(const CVector& u, const CVector& v) {
    if (u.dim() != v.dim())
        throw std::invalid_argument("inner_product: dimension mismatch ("
                                    + std::to_string(u.dim()) + " vs "
                                    + std::to_string(v.dim()) + ")");
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u.amp[i]) * v.amp[i];
    return s;
}

RealTable overlap_table(const Basis& b1, const Basis& b2) {
    if (b1.dim() != b2.dim())
        throw std::invalid_argument("overlap_table: dimension mismatch");
    const std::size_t d = b1.dim();
    RealTable t(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            t(i, j) = std::abs(inner_product(b1.vectors[i], b2.vectors[j]));
    return t;
}

RealTable overlap_sq_table(const Basis& b1, const Basis& b2) {
    if (b1.dim() != b2.dim())
        throw std::invalid_argument("overlap_sq_table: dimension mismatch");
    const std::size_t d = b1.dim();
    RealTable t(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            t(i, j) = std::norm(inner_product(b1.vectors[i], b2.vectors[j]));
    return t;
}

ValidationReport validate_basis_set(const BasisSet& set, double tol) {
    ValidationReport rep;
    rep.tol = tol;
    rep.per_basis.reserve(set.bases.size());
    for (const auto& b : set.bases) {
        BasisResidual res;
        if (b.dim() != set.dim) rep.dims_consistent = false;
        for (std::size_t i = 0; i < b.vectors.size(); ++i) {
            if (b.vectors[i].dim() != set.dim) rep.dims_consistent = false;
            double nr = b.vectors[i].norm_residual();
            if (nr > res.norm) res.norm = nr;
            for (std::size_t j = i + 1; j < b.vectors.size(); ++j) {
                if (b.vectors[i].dim() != b.vectors[j].dim()) {
                    rep.dims_consistent = false;
                    continue;
                }
                double ov = std::abs(inner_product(b.vectors[i], b.vectors[j]));
                if (ov > res.ortho) res.ortho = ov;
            }
        }
        if (res.max() > rep.max_residual) rep.max_residual = res.max();
        rep.per_basis.push_back(res);
    }
    return rep;
}

}  // namespace mubkit
