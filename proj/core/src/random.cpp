#include "mubkit/random.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace mubkit {

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    spare_ = mag * std::sin(ang);
    have_spare_ = true;
    return mag * std::cos(ang);
}

CVector random_state(int d, Rng& rng) {
    std::vector<cplx> a(d);
    double n = 0.0;
    for (auto& x : a) {
        x = cplx{rng.gaussian(), rng.gaussian()};
        n += std::norm(x);
    }
    n = std::sqrt(n);
    for (auto& x : a) x /= n;
    return CVector{std::move(a)};
}

Basis random_basis(int d, Rng& rng) {
    // Gram-Schmidt with a second orthogonalization pass; at desk scales this
    // keeps residuals near machine precision
    std::vector<CVector> cols;
    cols.reserve(d);
    for (int c = 0; c < d; ++c) {
        CVector v = random_state(d, rng);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : cols) {
                const cplx proj = inner_product(u, v);
                for (int i = 0; i < d; ++i) v.amp[i] -= proj * u.amp[i];
            }
        double n = std::sqrt(v.norm_sq());
        for (auto& x : v.amp) x /= n;
        cols.push_back(std::move(v));
    }
    return Basis{"haar", std::move(cols)};
}

BasisSet random_basis_set(int d, int count, Rng& rng) {
    BasisSet s;
    s.dim = static_cast<std::size_t>(d);
    s.provenance = "random";
    for (int i = 0; i < count; ++i) {
        Basis b = random_basis(d, rng);
        b.label = "r" + std::to_string(i);
        s.bases.push_back(std::move(b));
    }
    return s;
}

}  // namespace mubkit
