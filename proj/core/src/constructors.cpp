#include "mubkit/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace mubkit {

BasisSet prime_mubs(int p) {
    if (!is_prime(p))
        throw std::invalid_argument("prime_mubs: " + std::to_string(p) +
                                    " is not prime (prime-power dimensions are out of scope)");
    BasisSet s;
    s.dim = static_cast<std::size_t>(p);
    s.provenance = "prime-mub(p=" + std::to_string(p) + ")";
    if (p == 2) {
        const double r = 1.0 / std::sqrt(2.0);
        Basis z{"Z", {CVector{{1, 0}}, CVector{{0, 1}}}};
        Basis x{"X", {CVector{{r, r}}, CVector{{r, -r}}}};
        Basis y{"Y", {CVector{{r, cplx{0, r}}}, CVector{{r, cplx{0, -r}}}}};
        s.bases = {z, x, y};
        return s;
    }
    Basis comp{"std", {}};
    for (int i = 0; i < p; ++i) {
        std::vector<cplx> a(p, cplx{0, 0});
        a[i] = 1.0;
        comp.vectors.push_back(CVector{std::move(a)});
    }
    s.bases.push_back(std::move(comp));
    const double scale = 1.0 / std::sqrt(static_cast<double>(p));
    for (int m = 0; m < p; ++m) {
        Basis b{"q" + std::to_string(m), {}};
        for (int k = 0; k < p; ++k) {
            std::vector<cplx> a(p);
            for (int x = 0; x < p; ++x) {
                // phase omega^(m x^2 + k x); Gauss-sum magnitudes give 1/sqrt(p)
                long long e = (static_cast<long long>(m) * x * x + static_cast<long long>(k) * x) % p;
                double ang = 2.0 * std::numbers::pi * static_cast<double>(e) / p;
                a[x] = cplx{std::cos(ang) * scale, std::sin(ang) * scale};
            }
            b.vectors.push_back(CVector{std::move(a)});
        }
        s.bases.push_back(std::move(b));
    }
    return s;
}

BasisSet weak_mubs(int p, int q) {
    if (!is_prime(p) || !is_prime(q))
        throw std::invalid_argument("weak_mubs: both factors must be prime");
    if (p == q) throw std::invalid_argument("weak_mubs: factors must be distinct");
    BasisSet mp = prime_mubs(p), mq = prime_mubs(q);
    BasisSet s;
    s.dim = static_cast<std::size_t>(p) * q;
    s.provenance = "weak-mub(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")";
    for (const auto& a : mp.bases)
        for (const auto& b : mq.bases) {
            Basis t{a.label + "*" + b.label, {}};
            for (const auto& u : a.vectors)
                for (const auto& v : b.vectors) {
                    std::vector<cplx> amp(s.dim);
                    for (int i = 0; i < p; ++i)
                        for (int j = 0; j < q; ++j)
                            amp[static_cast<std::size_t>(i) * q + j] = u.amp[i] * v.amp[j];
                    t.vectors.push_back(CVector{std::move(amp)});
                }
            s.bases.push_back(std::move(t));
        }
    return s;
}

ConstructionResult rbd_to_bases(const ResolvableDesign& d, FlatPolicy policy) {
    const int k = d.block_size();
    if (k <= 0)
        throw std::invalid_argument(
            "rbd_to_bases: design must have constant block size (got mixed sizes)");
    auto v = validate_design(d);
    if (!v.ok)
        throw std::invalid_argument("rbd_to_bases: invalid design: " +
                                    (v.problems.empty() ? "unknown" : v.problems.front()));

    FlatMatrix flat = (policy == FlatPolicy::Complex)
                          ? fourier_matrix(k)
                          : flat_matrix_for(k, true, policy == FlatPolicy::RequireReal);

    ConstructionResult res;
    res.is_real = flat.is_real();
    res.set.dim = static_cast<std::size_t>(d.point_count);
    res.set.provenance = "rbd(" + d.provenance + "," +
                         (flat.is_real() ? "hadamard-" : "fourier-") + std::to_string(k) +
                         ",cols-asc)";

    // columns assigned to block points in ascending point order, blocks in
    // ascending order, the same flat matrix reused for every block
    for (std::size_t ci = 0; ci < d.classes.size(); ++ci) {
        ParallelClass cls = d.classes[ci];
        std::sort(cls.begin(), cls.end());
        Basis b{"c" + std::to_string(ci), {}};
        for (const auto& blk : cls)
            for (int col = 0; col < k; ++col) {
                std::vector<cplx> amp(res.set.dim, cplx{0, 0});
                for (int row = 0; row < k; ++row) amp[blk[row]] = flat.at(row, col);
                b.vectors.push_back(CVector{std::move(amp)});
            }
        res.set.bases.push_back(std::move(b));
    }

    const auto prof = intersection_profile(d);
    const int s = static_cast<int>(d.classes.front().size());
    res.predicted_beta = prof.mu * std::sqrt(static_cast<double>(s) / k);

    // An n-point intersection contributes |sum of n unimodular terms| / k.
    // With real signs that is {n, n-2, ...}/k; Fourier columns only pin the
    // value for n <= 1, so the prediction stays empty when it cannot be exact.
    std::set<double> delta;
    bool enumerable = true;
    for (const auto& [n, count] : prof.histogram) {
        if (count == 0) continue;
        if (n == 0) delta.insert(0.0);
        else if (n == 1) delta.insert(1.0 / k);
        else if (res.is_real)
            for (int m = n; m >= 0; m -= 2) delta.insert(static_cast<double>(m) / k);
        else enumerable = false;
    }
    if (enumerable) res.predicted_delta.assign(delta.begin(), delta.end());
    return res;
}

std::string to_string(SetLabel label) {
    switch (label) {
        case SetLabel::Mub: return "MUB";
        case SetLabel::Apmub: return "APMUB";
        case SetLabel::BetaAmub: return "beta-AMUB";
    }
    return "?";
}

Classification classify_set(const BasisSet& s, double cluster_tol) {
    if (s.size() < 2)
        throw std::invalid_argument("classify_set: need at least two bases");
    std::vector<double> vals;
    vals.reserve(s.size() * (s.size() - 1) / 2 * s.dim * s.dim);
    for (std::size_t l = 0; l < s.size(); ++l)
        for (std::size_t m = l + 1; m < s.size(); ++m) {
            auto t = overlap_table(s.bases[l], s.bases[m]);
            vals.insert(vals.end(), t.v.begin(), t.v.end());
        }
    std::sort(vals.begin(), vals.end());

    Classification c;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= vals.size(); ++i) {
        if (i == vals.size() || vals[i] - vals[i - 1] > cluster_tol) {
            double sum = 0.0;
            for (std::size_t j = start; j < i; ++j) sum += vals[j];
            c.delta.push_back(sum / static_cast<double>(i - start));
            start = i;
        }
    }

    const double sd = std::sqrt(static_cast<double>(s.dim));
    c.beta = sd * c.delta.back();
    const bool has_zero = c.delta.front() <= cluster_tol;
    c.beta_min = has_zero ? 0.0 : sd * c.delta.front();

    const double inv_sd = 1.0 / sd;
    if (c.delta.size() == 1 && std::abs(c.delta[0] - inv_sd) <= cluster_tol)
        c.label = SetLabel::Mub;
    else if (c.delta.size() == 2 && has_zero && c.beta < 2.0)
        c.label = SetLabel::Apmub;
    else
        c.label = SetLabel::BetaAmub;
    return c;
}

}  // namespace mubkit
