#include "mubkit/qkd.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace mubkit {

double raw_key_rate(int d, int k) {
    if (d < 2) throw std::invalid_argument("raw_key_rate: d must be >= 2");
    if (k < 1) throw std::invalid_argument("raw_key_rate: k must be >= 1");
    return std::log2(static_cast<double>(d)) / static_cast<double>(k);
}

double mub_sift_error(int d, int k) {
    if (d < 2) throw std::invalid_argument("mub_sift_error: d must be >= 2");
    if (k < 1) throw std::invalid_argument("mub_sift_error: k must be >= 1");
    return (static_cast<double>(k) - 1.0) / k * (1.0 - 1.0 / static_cast<double>(d));
}

namespace {

// pre-squared overlap tables for every ordered basis pair (Alice l, Eve e)
std::vector<RealTable> squared_tables(const BasisSet& s) {
    const std::size_t r = s.size();
    std::vector<RealTable> t(r * r);
    for (std::size_t l = 0; l < r; ++l)
        for (std::size_t e = 0; e < r; ++e)
            if (l != e) t[l * r + e] = overlap_sq_table(s.bases[l], s.bases[e]);
    return t;
}

}  // namespace

double intercept_resend_exact(const BasisSet& s) {
    if (s.size() < 2) throw std::invalid_argument("intercept_resend_exact: need r >= 2 bases");
    const std::size_t r = s.size();
    const std::size_t d = s.dim;
    const auto tables = squared_tables(s);
    double acc = 0.0;
    for (std::size_t l = 0; l < r; ++l)
        for (std::size_t e = 0; e < r; ++e) {
            if (e == l) continue;  // matching Eve basis disturbs nothing
            const auto& t = tables[l * r + e];
            for (std::size_t a = 0; a < d; ++a) {
                double sum_p2 = 0.0;
                for (std::size_t j = 0; j < d; ++j) sum_p2 += t(a, j) * t(a, j);
                acc += 1.0 - sum_p2;
            }
        }
    return acc / (static_cast<double>(r) * r * d);
}

QkdOutcome intercept_resend_sift_error(const BasisSet& s, long long trials, std::uint64_t seed) {
    if (s.size() < 2)
        throw std::invalid_argument("intercept_resend_sift_error: need r >= 2 bases");
    if (trials < 1) throw std::invalid_argument("intercept_resend_sift_error: trials must be >= 1");
    const std::size_t r = s.size();
    const std::size_t d = s.dim;
    const auto tables = squared_tables(s);

    long long errors = 0;
    for (long long i = 0; i < trials; ++i) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(i));
        const std::size_t l = rng.below(r);       // Alice's basis
        const std::size_t a = rng.below(d);       // Alice's vector
        const std::size_t e = rng.below(r);       // Eve's basis
        if (e == l) continue;                      // Eve resends undisturbed
        const auto& t = tables[l * r + e];
        // Eve's outcome j ~ p_j, then Bob recovers a with probability p_j
        double x = rng.uniform();
        std::size_t j = d - 1;
        for (std::size_t c = 0; c < d; ++c) {
            x -= t(a, c);
            if (x <= 0.0) { j = c; break; }
        }
        if (rng.uniform() >= t(a, j)) ++errors;
    }
    QkdOutcome out;
    out.raw_rate = raw_key_rate(static_cast<int>(d), static_cast<int>(r));
    out.sift_error = static_cast<double>(errors) / static_cast<double>(trials);
    out.trials = trials;
    out.std_error = std::sqrt(out.sift_error * (1.0 - out.sift_error) / static_cast<double>(trials));
    out.seed = seed;
    return out;
}

double outcome_entropy(const CVector& state, const Basis& b) {
    if (state.dim() != b.dim())
        throw std::invalid_argument("outcome_entropy: dimension mismatch");
    double h = 0.0;
    for (const auto& v : b.vectors) {
        const double p = std::norm(inner_product(v, state));
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

double maassen_uffink_bound(const Basis& b1, const Basis& b2) {
    if (b1.dim() != b2.dim())
        throw std::invalid_argument("maassen_uffink_bound: dimension mismatch");
    double worst = 0.0;
    for (const auto& u : b1.vectors)
        for (const auto& v : b2.vectors)
            worst = std::max(worst, std::abs(inner_product(u, v)));
    return -std::log2(worst);
}

}  // namespace mubkit
