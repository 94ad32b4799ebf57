#include "mubkit/verify.hpp"

#include <cmath>
#include <sstream>

namespace mubkit {

namespace {

std::string pair_tag(std::size_t l, std::size_t m) {
    return "pair (" + std::to_string(l) + "," + std::to_string(m) + ")";
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

void flag(CheckResult& c, const std::string& msg) {
    c.passed = false;
    c.violations.push_back(msg);
}

// bound violations are reported with the amount by which they overshoot
void check_upper(CheckResult& c, const std::string& where, double value, double bound,
                 double tol) {
    if (value > bound + tol)
        flag(c, where + ": " + fmt(value) + " exceeds " + fmt(bound) + " by " +
                fmt(value - bound));
}
void check_lower(CheckResult& c, const std::string& where, double value, double bound,
                 double tol) {
    if (value < bound - tol)
        flag(c, where + ": " + fmt(value) + " is below " + fmt(bound) + " by " +
                fmt(bound - value));
}
void check_close(CheckResult& c, const std::string& where, double value, double want,
                 double tol) {
    if (std::abs(value - want) > tol)
        flag(c, where + ": got " + fmt(value) + ", want " + fmt(want) + " (off by " +
                fmt(std::abs(value - want)) + ")");
}

}  // namespace

VerifyReport verify_basis_set(const BasisSet& s, double tol) {
    VerifyReport rep;
    const double d = static_cast<double>(s.dim);
    const std::size_t r = s.size();

    {
        CheckResult c{"orthonormality"};
        auto v = validate_basis_set(s, tol);
        if (!v.dims_consistent) flag(c, "inconsistent dimensions across bases");
        for (std::size_t i = 0; i < v.per_basis.size(); ++i)
            if (v.per_basis[i].max() > tol)
                flag(c, "basis " + std::to_string(i) + ": residual " + fmt(v.per_basis[i].max()));
        rep.checks.push_back(std::move(c));
        if (!rep.checks.back().passed) return rep;  // later checks assume orthonormal input
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t l = 0; l < r; ++l)
        for (std::size_t m = l + 1; m < r; ++m) pairs.emplace_back(l, m);

    std::vector<RealTable> tables;
    tables.reserve(pairs.size());
    for (auto [l, m] : pairs) tables.push_back(overlap_table(s.bases[l], s.bases[m]));

    {
        CheckResult c{"row-normalization"};
        for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
            const auto& t = tables[pi];
            double total = 0.0;
            for (std::size_t i = 0; i < t.rows; ++i) {
                double row = 0.0, col = 0.0;
                for (std::size_t j = 0; j < t.cols; ++j) {
                    row += t(i, j) * t(i, j);
                    col += t(j, i) * t(j, i);
                }
                total += row;
                check_close(c, pair_tag(pairs[pi].first, pairs[pi].second) + " row " +
                                std::to_string(i), row, 1.0, tol);
                check_close(c, pair_tag(pairs[pi].first, pairs[pi].second) + " col " +
                                std::to_string(i), col, 1.0, tol);
            }
            check_close(c, pair_tag(pairs[pi].first, pairs[pi].second) + " total", total, d, tol);
        }
        rep.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"power-sum-bounds"};
        for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
            const auto tag = pair_tag(pairs[pi].first, pairs[pi].second);
            for (double delta : {0.5, 1.0, 2.0}) {
                const double hi = power_sum_from_table(tables[pi], 2.0 + delta);
                check_lower(c, tag + " delta=" + fmt(delta) + " high-exponent", hi,
                            std::pow(d, 1.0 - delta / 2.0), tol);
                check_upper(c, tag + " delta=" + fmt(delta) + " high-exponent", hi, d, tol);
                const double lo = power_sum_from_table(tables[pi], 2.0 - delta);
                check_lower(c, tag + " delta=" + fmt(delta) + " low-exponent", lo, d, tol);
                check_upper(c, tag + " delta=" + fmt(delta) + " low-exponent", lo,
                            std::pow(d, 1.0 + delta / 2.0), tol);
            }
        }
        rep.checks.push_back(std::move(c));
    }

    std::vector<double> sigmas(pairs.size()), taus(pairs.size()), d2s(pairs.size());
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        sigmas[pi] = sigma_from_table(tables[pi]);
        taus[pi] = tau_from_table(tables[pi]);
        d2s[pi] = bengtsson_from_table(tables[pi]);
    }

    {
        CheckResult c{"sigma-le-tau"};
        for (std::size_t pi = 0; pi < pairs.size(); ++pi)
            check_upper(c, pair_tag(pairs[pi].first, pairs[pi].second), sigmas[pi], taus[pi],
                        1e-12);
        rep.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"distance-sandwich"};
        const double sq = std::sqrt(d);
        for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
            const auto tag = pair_tag(pairs[pi].first, pairs[pi].second);
            const double s2 = sigmas[pi] * sigmas[pi];
            check_lower(c, tag, d2s[pi], 1.0 - (d + sq) * (d + sq) / (d - 1.0) * s2, tol);
            check_upper(c, tag, d2s[pi], 1.0 - d / (d - 1.0) * s2, tol);
        }
        rep.checks.push_back(std::move(c));
    }

    {
        CheckResult c{"welch-bound"};
        const double fp = frame_potential(collect_vectors(s), 2.0);
        check_lower(c, "t=2", fp, 1.0 / static_cast<double>(sym_dim(static_cast<int>(s.dim), 2)),
                    tol);
        rep.checks.push_back(std::move(c));
    }

    const auto cls = classify_set(s);
    const double beta = cls.beta;
    if (cls.label == SetLabel::Mub) {
        CheckResult c{"mub-closed-forms"};
        for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
            const auto tag = pair_tag(pairs[pi].first, pairs[pi].second);
            check_close(c, tag + " tau", taus[pi], 0.0, tol);
            check_close(c, tag + " sigma", sigmas[pi], 0.0, tol);
            check_close(c, tag + " D^2", d2s[pi], 1.0, tol);
            check_close(c, tag + " Omega_2", power_sum_from_table(tables[pi], 4.0), 1.0, tol);
        }
        rep.checks.push_back(std::move(c));
    } else if (cls.label == SetLabel::Apmub) {
        CheckResult c{"apmub-closed-forms"};
        check_close(c, "tau", tau_set(s), 1.0 / std::sqrt(d), tol);
        const double sig = sigma_set(s);
        check_close(c, "sigma^2", sig * sig, 2.0 / d * (1.0 - 1.0 / beta), tol);
        check_close(c, "ASD", asd_set(s), 1.0 - (beta * beta - 1.0) / (d - 1.0), tol);
        long long nonzero = 0, total = 0;
        for (const auto& t : tables)
            for (double x : t.v) {
                if (x > 1e-9) ++nonzero;
                ++total;
            }
        check_close(c, "nonzero-overlap fraction",
                    static_cast<double>(nonzero) / static_cast<double>(total),
                    1.0 / (beta * beta), tol);
        rep.checks.push_back(std::move(c));
    } else {
        CheckResult c{"amub-bounds"};
        const double asd = asd_set(s);
        check_lower(c, "ASD", asd, 1.0 - (beta * beta * beta * beta - 1.0) / (d - 1.0), tol);
        check_upper(c, "ASD", asd, 1.0, tol);
        const double want_tau = std::max(beta - 1.0, 1.0 - cls.beta_min) / std::sqrt(d);
        check_close(c, "tau case split", tau_set(s), want_tau, tol);
        rep.checks.push_back(std::move(c));
    }

    return rep;
}

}  // namespace mubkit
