// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Expected values are closed forms or independently
// computed oracles; tolerances are absolute.
#include <cmath>
#include <cstdio>
#include <iostream>
#include <set>
#include <vector>

#include "mubkit/constructors.hpp"
#include "mubkit/designs.hpp"
#include "mubkit/measures.hpp"
#include "mubkit/qkd.hpp"
#include "mubkit/random.hpp"

using namespace mubkit;

namespace {

struct Criterion {
    int id;
    std::string name;
    bool pass = true;
    std::vector<std::string> notes;

    Criterion(int i, std::string n) : id(i), name(std::move(n)) {}

    void check(bool ok, const std::string& detail) {
        if (!ok) {
            pass = false;
            notes.push_back(detail);
        }
    }
    void check_close(double got, double want, double tol, const std::string& what) {
        if (std::abs(got - want) > tol) {
            pass = false;
            char buf[256];
            std::snprintf(buf, sizeof buf, "%s: got %.12g, want %.12g (off by %.3g)",
                          what.c_str(), got, want, std::abs(got - want));
            notes.push_back(buf);
        }
    }
};

constexpr double kTol = 1e-9;

Basis canonical_basis(int d) {
    Basis b{"std", {}};
    for (int i = 0; i < d; ++i) {
        std::vector<cplx> a(d, cplx{0, 0});
        a[i] = 1.0;
        b.vectors.push_back(CVector{std::move(a)});
    }
    return b;
}

double explicit_traceless_trace(const CVector& u, const CVector& v) {
    const int d = static_cast<int>(u.dim());
    std::vector<cplx> m1(d * d), m2(d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            m1[i * d + j] = u.amp[i] * std::conj(u.amp[j]) - (i == j ? cplx{1.0 / d, 0} : cplx{0});
            m2[i * d + j] = v.amp[i] * std::conj(v.amp[j]) - (i == j ? cplx{1.0 / d, 0} : cplx{0});
        }
    cplx tr{0, 0};
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) tr += m1[i * d + k] * m2[k * d + i];
    return 0.5 * tr.real();
}

// ---------------------------------------------------------------- criteria

Criterion c1_exact_mubs() {
    Criterion c{1, "exact prime MUB families"};
    for (int p : {2, 3, 5, 7, 11, 13}) {
        auto s = prime_mubs(p);
        c.check(s.size() == static_cast<std::size_t>(p + 1),
                "p=" + std::to_string(p) + ": wrong basis count");
        auto delta = delta_spectrum(s);
        c.check(delta.size() == 1, "p=" + std::to_string(p) + ": spectrum not a singleton");
        c.check_close(delta.back(), 1.0 / std::sqrt(double(p)), kTol,
                      "p=" + std::to_string(p) + " delta");
        c.check_close(tau_set(s), 0.0, kTol, "p=" + std::to_string(p) + " tau");
        c.check_close(sigma_set(s), 0.0, kTol, "p=" + std::to_string(p) + " sigma");
        for (std::size_t l = 0; l < s.size(); ++l)
            for (std::size_t m = l + 1; m < s.size(); ++m) {
                c.check_close(bengtsson_pair(s.bases[l], s.bases[m]), 1.0, kTol,
                              "p=" + std::to_string(p) + " D^2");
                c.check_close(power_sum_pair(s.bases[l], s.bases[m], 2.0), 1.0, kTol,
                              "p=" + std::to_string(p) + " Omega_2");
            }
    }
    return c;
}

Criterion c2_power_sum_bounds() {
    Criterion c{2, "power-sum interval bounds on random pairs"};
    Rng rng(20240811);
    for (int d = 2; d <= 16; ++d) {
        const double dd = d;
        for (int trial = 0; trial < 100; ++trial) {
            Basis b1 = random_basis(d, rng), b2 = random_basis(d, rng);
            auto t = overlap_table(b1, b2);
            for (double delta : {0.5, 1.0, 2.0}) {
                const double hi = power_sum_from_table(t, 2.0 + delta);
                const double lo = power_sum_from_table(t, 2.0 - delta);
                if (hi < std::pow(dd, 1.0 - delta / 2.0) - kTol || hi > dd + kTol)
                    c.check(false, "d=" + std::to_string(d) + " high exponent out of range");
                if (lo < dd - kTol || lo > std::pow(dd, 1.0 + delta / 2.0) + kTol)
                    c.check(false, "d=" + std::to_string(d) + " low exponent out of range");
            }
        }
    }
    // equality at the stationary point, witnessed by exact MUB pairs
    for (int p : {2, 3, 5, 7, 11, 13}) {
        auto s = prime_mubs(p);
        auto t = overlap_table(s.bases[0], s.bases[1]);
        for (double delta : {0.5, 1.0, 2.0}) {
            c.check_close(power_sum_from_table(t, 2.0 + delta),
                          std::pow(double(p), 1.0 - delta / 2.0), kTol,
                          "p=" + std::to_string(p) + " MUB equality (high)");
            c.check_close(power_sum_from_table(t, 2.0 - delta),
                          std::pow(double(p), 1.0 + delta / 2.0), kTol,
                          "p=" + std::to_string(p) + " MUB equality (low)");
        }
    }
    return c;
}

void relationship_checks(Criterion& c, const Basis& b1, const Basis& b2, const std::string& tag) {
    const double d = static_cast<double>(b1.dim());
    auto t = overlap_table(b1, b2);
    const double sigma = sigma_from_table(t);
    const double tau = tau_from_table(t);
    const double d2 = bengtsson_from_table(t);
    c.check(sigma <= tau + kTol, tag + ": sigma > tau");
    const double lo = 1.0 - (d + std::sqrt(d)) * (d + std::sqrt(d)) / (d - 1.0) * sigma * sigma;
    const double hi = 1.0 - d / (d - 1.0) * sigma * sigma;
    c.check(d2 >= lo - kTol && d2 <= hi + kTol, tag + ": distance sandwich violated");
}

Criterion c3_relationships(const std::vector<BasisSet>& constructed) {
    Criterion c{3, "sigma <= tau and the distance sandwich"};
    for (const auto& s : constructed)
        for (std::size_t l = 0; l < s.size(); ++l)
            for (std::size_t m = l + 1; m < s.size(); ++m)
                relationship_checks(c, s.bases[l], s.bases[m], s.provenance);
    Rng rng(99);
    for (int d = 2; d <= 10; ++d)
        for (int i = 0; i < 20; ++i) {
            Basis b1 = random_basis(d, rng), b2 = random_basis(d, rng);
            relationship_checks(c, b1, b2, "random d=" + std::to_string(d));
        }
    return c;
}

Criterion c4_apmub_closed_forms() {
    Criterion c{4, "APMUB closed forms from overlap tables"};
    const std::pair<int, int> cases[] = {{3, 4}, {4, 5}, {5, 7}, {7, 8}};
    for (auto [k, s] : cases) {
        auto set = rbd_to_bases(resolvable_transversal_design(k, s)).set;
        const double d = static_cast<double>(set.dim);
        const double beta = std::sqrt(static_cast<double>(s) / k);
        const std::string tag = "(k,s)=(" + std::to_string(k) + "," + std::to_string(s) + ")";
        c.check_close(tau_set(set), 1.0 / std::sqrt(d), kTol, tag + " tau");
        const double sig = sigma_set(set);
        c.check_close(sig * sig, 2.0 / d * (1.0 - 1.0 / beta), kTol, tag + " sigma^2");
        c.check_close(asd_set(set), 1.0 - (beta * beta - 1.0) / (d - 1.0), kTol, tag + " ASD");
        auto cls = classify_set(set);
        c.check(cls.label == SetLabel::Apmub, tag + " not classified APMUB");
        c.check_close(cls.beta, beta, kTol, tag + " beta");
    }
    return c;
}

Criterion c5_apmub_census() {
    Criterion c{5, "APMUB nonzero-overlap census"};
    const std::pair<int, int> cases[] = {{3, 4}, {4, 5}, {5, 7}, {7, 8}};
    for (auto [k, s] : cases) {
        auto set = rbd_to_bases(resolvable_transversal_design(k, s)).set;
        const double beta2 = static_cast<double>(s) / k;
        long long nz = 0, total = 0;
        for (std::size_t l = 0; l < set.size(); ++l)
            for (std::size_t m = l + 1; m < set.size(); ++m) {
                auto t = overlap_table(set.bases[l], set.bases[m]);
                for (double x : t.v) {
                    if (x > 1e-9) ++nz;
                    ++total;
                }
            }
        c.check_close(static_cast<double>(nz) / static_cast<double>(total), 1.0 / beta2, kTol,
                      "(k,s)=(" + std::to_string(k) + "," + std::to_string(s) + ") fraction");
    }
    return c;
}

Criterion c6_weak_mubs() {
    Criterion c{6, "weak MUB census and t-coherence closed form"};
    const std::pair<int, int> cases[] = {{2, 3}, {3, 5}, {2, 5}};
    for (auto [p, q] : cases) {
        auto s = weak_mubs(p, q);
        const int r = (p + 1) * (q + 1);
        const std::string tag = "(p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ")";
        c.check(s.size() == static_cast<std::size_t>(r), tag + " basis count");

        // census by the three overlap categories
        int t1 = 0, t2 = 0, t3 = 0, other = 0;
        const double vq = 1.0 / std::sqrt(double(q)), vp = 1.0 / std::sqrt(double(p)),
                     vpq = 1.0 / std::sqrt(double(p) * q);
        for (std::size_t l = 0; l < s.size(); ++l)
            for (std::size_t m = l + 1; m < s.size(); ++m) {
                auto t = overlap_table(s.bases[l], s.bases[m]);
                std::set<int> kinds;
                for (double x : t.v) {
                    if (x < 1e-9) continue;
                    if (std::abs(x - vq) < 1e-9) kinds.insert(1);
                    else if (std::abs(x - vp) < 1e-9) kinds.insert(2);
                    else if (std::abs(x - vpq) < 1e-9) kinds.insert(3);
                    else kinds.insert(0);
                }
                if (kinds == std::set<int>{1}) ++t1;
                else if (kinds == std::set<int>{2}) ++t2;
                else if (kinds == std::set<int>{3}) ++t3;
                else ++other;
            }
        c.check(t1 == r * q / 2, tag + " type-1 count " + std::to_string(t1));
        c.check(t2 == r * p / 2, tag + " type-2 count " + std::to_string(t2));
        c.check(t3 == r * p * q / 2, tag + " type-3 count " + std::to_string(t3));
        c.check(other == 0, tag + " uncategorized pairs");

        for (int t = 2; t <= 4; ++t) {
            const double closed = double(p) * q *
                                  (std::pow(double(p), 2.0 - t) + std::pow(double(q), 2.0 - t) +
                                   std::pow(double(p), 2.0 - t) * std::pow(double(q), 2.0 - t)) /
                                  (p + q + p * q);
            c.check_close(set_t_coherence(s, t), closed, kTol,
                          tag + " Omega_" + std::to_string(t));
        }
    }
    return c;
}

Criterion c7_q2m1_lemma() {
    Criterion c{7, "q^2-1 construction (Paley real bases)"};
    for (int q : {7, 11}) {
        const std::string tag = "q=" + std::to_string(q);
        auto design = q2_minus_1_design(q);
        auto res = rbd_to_bases(design, FlatPolicy::RequireReal);
        const auto& set = res.set;
        const double d = static_cast<double>(set.dim);
        c.check(res.is_real, tag + " bases not real");
        c.check(set.dim == static_cast<std::size_t>(q * q - 1), tag + " wrong dimension");
        c.check(set.size() == static_cast<std::size_t>(q + 1), tag + " wrong basis count");

        auto delta = delta_spectrum(set);
        c.check(delta.size() == 3, tag + " spectrum size " + std::to_string(delta.size()));
        if (delta.size() == 3) {
            c.check_close(delta[0], 0.0, kTol, tag + " delta[0]");
            c.check_close(delta[1], 1.0 / (q + 1.0), kTol, tag + " delta[1]");
            c.check_close(delta[2], 2.0 / (q + 1.0), kTol, tag + " delta[2]");
        }
        auto cls = classify_set(set);
        c.check_close(cls.beta, 2.0 * std::sqrt((q - 1.0) / (q + 1.0)), kTol, tag + " beta");

        // stated variance window sigma_o^2 <= sigma^2 <= sigma_o^2 + delta
        const double sig2 = sigma_set(set) * sigma_set(set);
        const double sig_o2 = 2.0 / d * (1.0 - q / std::sqrt(d) + 1.0 / (2.0 * (q + 1.0)));
        const double win = 4.0 / (d * std::sqrt(d)) * (1.0 - std::sqrt((q - 1.0) / (q + 1.0)));
        if (!(sig2 >= sig_o2 - kTol && sig2 <= sig_o2 + win + kTol)) {
            char buf[256];
            std::snprintf(buf, sizeof buf,
                          "%s sigma^2 = %.10g outside stated window [%.10g, %.10g]", tag.c_str(),
                          sig2, sig_o2, sig_o2 + win);
            c.check(false, buf);
        }

        // stated pattern: exactly one two-point partner per block per class
        bool one_partner_everywhere = true;
        int seen_partner_count = -1;
        for (std::size_t ci = 0; ci < design.classes.size() && one_partner_everywhere; ++ci)
            for (std::size_t cj = 0; cj < design.classes.size(); ++cj) {
                if (ci == cj) continue;
                for (const auto& b1 : design.classes[ci]) {
                    int twos = 0;
                    for (const auto& b2 : design.classes[cj]) {
                        int n = 0;
                        for (int p : b1)
                            for (int pp : b2)
                                if (p == pp) ++n;
                        if (n == 2) ++twos;
                    }
                    if (twos != 1) {
                        one_partner_everywhere = false;
                        seen_partner_count = twos;
                        break;
                    }
                }
                if (!one_partner_everywhere) break;
            }
        c.check(one_partner_everywhere,
                tag + " intersection pattern: expected one 2-point partner per class, found " +
                    std::to_string(seen_partner_count));
    }
    return c;
}

Criterion c8_kts15() {
    Criterion c{8, "Kirkman triple system bases"};
    auto res = rbd_to_bases(kirkman_kts15());
    const auto& set = res.set;
    c.check(set.size() == 7, "wrong basis count");
    c.check(set.dim == 15, "wrong dimension");
    auto delta = delta_spectrum(set);
    c.check(delta.size() == 2, "spectrum size " + std::to_string(delta.size()));
    c.check_close(delta.front(), 0.0, kTol, "delta[0]");
    c.check_close(delta.back(), 1.0 / 3.0, kTol, "delta[1]");
    // beta = sqrt(d) * max overlap = sqrt(15)/3 = sqrt(5/3), i.e. mu sqrt(s/k)
    c.check_close(classify_set(set).beta, std::sqrt(5.0 / 3.0), kTol, "beta");
    c.check_close(sparsity(set), 0.8, kTol, "sparsity");
    c.check_close(asd_set(set), 20.0 / 21.0, kTol, "ASD");
    return c;
}

Criterion c9_qkd() {
    Criterion c{9, "QKD closed forms, Monte Carlo, exhaustive oracle"};
    c.check_close(raw_key_rate(2, 2), 0.5, 0.0, "BB84 raw rate");
    c.check_close(mub_sift_error(2, 2), 0.25, 0.0, "BB84 sift error");
    c.check_close(mub_sift_error(2, 3), 1.0 / 3.0, 1e-15, "six-state sift error");

    auto mub2 = prime_mubs(2);
    auto six = intercept_resend_sift_error(mub2, 100000, 20240811);
    c.check(std::abs(six.sift_error - 1.0 / 3.0) <= 3.0 * six.std_error,
            "six-state Monte Carlo outside 3 standard errors");

    BasisSet bb84;
    bb84.dim = 2;
    bb84.provenance = "bb84";
    bb84.bases = {mub2.bases[0], mub2.bases[1]};
    auto two = intercept_resend_sift_error(bb84, 100000, 20240811);
    c.check(std::abs(two.sift_error - 0.25) <= 3.0 * two.std_error,
            "BB84 Monte Carlo outside 3 standard errors");

    auto w = weak_mubs(2, 3);
    const double exact = intercept_resend_exact(w);
    auto mc = intercept_resend_sift_error(w, 100000, 7);
    c.check(std::abs(mc.sift_error - exact) <= 3.0 * mc.std_error,
            "d=6 Monte Carlo disagrees with the exhaustive expectation");
    return c;
}

Criterion c10_entropic(const std::vector<BasisSet>& constructed) {
    Criterion c{10, "entropic uncertainty bound on random states"};
    Rng rng(4242);
    for (const auto& s : constructed) {
        const int d = static_cast<int>(s.dim);
        // per-state measurement entropies for every member basis
        std::vector<std::vector<double>> h(1000, std::vector<double>(s.size()));
        for (int i = 0; i < 1000; ++i) {
            CVector psi = random_state(d, rng);
            for (std::size_t b = 0; b < s.size(); ++b)
                h[i][b] = outcome_entropy(psi, s.bases[b]);
        }
        for (std::size_t l = 0; l < s.size(); ++l)
            for (std::size_t m = l + 1; m < s.size(); ++m) {
                const double bound = maassen_uffink_bound(s.bases[l], s.bases[m]);
                const bool mub_pair = std::abs(bound - 0.5 * std::log2(double(d))) < 1e-12;
                for (int i = 0; i < 1000; ++i) {
                    const double avg = 0.5 * (h[i][l] + h[i][m]);
                    if (avg < bound - 1e-12) {
                        c.check(false, s.provenance + ": bound violated by " +
                                           std::to_string(bound - avg));
                        break;
                    }
                    if (mub_pair && avg < 0.5 * std::log2(double(d)) - 1e-12) {
                        c.check(false, s.provenance + ": MUB pair under log(d)/2");
                        break;
                    }
                }
            }
    }
    return c;
}

Criterion c11_geometry() {
    Criterion c{11, "traceless-projector geometry"};
    Rng rng(31415);
    for (int i = 0; i < 1000; ++i) {
        const int d = 2 + static_cast<int>(rng.below(7));
        CVector u = random_state(d, rng), v = random_state(d, rng);
        const double closed = traceless_dot(u, v);
        const double traced = explicit_traceless_trace(u, v);
        if (std::abs(closed - traced) > 1e-12) {
            c.check(false, "closed form vs trace differ by " + std::to_string(closed - traced));
            break;
        }
    }
    for (int d : {2, 3, 4, 5, 6}) {
        for (int rep = 0; rep < 4; ++rep) {
            Basis b1 = random_basis(d, rng), b2 = random_basis(d, rng);
            const double g2 = gamma_squared_pair(b1, b2);
            double geom = 0.0;
            for (const auto& u : b1.vectors)
                for (const auto& v : b2.vectors) {
                    const double md = explicit_traceless_trace(u, v);
                    geom += md * md;
                }
            c.check(std::abs(g2 - 4.0 * geom) <= 1e-12,
                    "gamma^2 vs 4 sum (m.m)^2 differ at d=" + std::to_string(d));
            c.check(std::abs(bengtsson_pair(b1, b2) - (1.0 - g2 / (d - 1.0))) <= 1e-12,
                    "D^2 identity failed at d=" + std::to_string(d));
        }
    }
    return c;
}

Criterion c12_two_design() {
    Criterion c{12, "projective 2-design frame potential"};
    Rng rng(5150);
    for (int d : {2, 3, 5}) {
        auto s = prime_mubs(d);
        const double defect = design_defect(collect_vectors(s), d, 2);
        c.check(std::abs(defect) <= kTol,
                "d=" + std::to_string(d) + " complete MUB defect " + std::to_string(defect));

        const double single = design_defect(canonical_basis(d).vectors, d, 2);
        c.check(single > kTol, "d=" + std::to_string(d) + " single-basis defect not positive");
        const double haar = design_defect(random_basis(d, rng).vectors, d, 2);
        c.check(haar > kTol, "d=" + std::to_string(d) + " random-basis defect not positive");
    }
    return c;
}

Criterion c13_volume() {
    Criterion c{13, "state-determination volume"};
    for (int d : {2, 3, 5}) {
        auto s = prime_mubs(d);
        c.check_close(log_volume_ratio_approx(s), 0.0, kTol,
                      "d=" + std::to_string(d) + " approx log ratio");
        // off-diagonal cross-basis blocks of the exact Gram matrix vanish
        auto g = gram_matrix(s);
        const int per = d - 1;
        double worst = 0.0;
        for (int bi = 0; bi < d + 1; ++bi)
            for (int bj = 0; bj < d + 1; ++bj) {
                if (bi == bj) continue;
                for (int a = 0; a < per; ++a)
                    for (int b = 0; b < per; ++b)
                        worst = std::max(worst, std::abs(g(bi * per + a, bj * per + b)));
            }
        c.check(worst <= kTol,
                "d=" + std::to_string(d) + " cross block magnitude " + std::to_string(worst));
    }
    Rng rng(8080);
    for (int d : {3, 5}) {
        const double mub_vol = gram_log_volume(prime_mubs(d));
        for (int i = 0; i < 20; ++i) {
            const double rv = gram_log_volume(random_basis_set(d, d + 1, rng));
            if (!(mub_vol > rv)) {
                c.check(false, "d=" + std::to_string(d) + " random set at least as voluminous");
                break;
            }
        }
    }
    return c;
}

}  // namespace

int main() {
    std::vector<BasisSet> constructed;
    constructed.push_back(prime_mubs(2));
    constructed.push_back(prime_mubs(3));
    constructed.push_back(prime_mubs(5));
    constructed.push_back(prime_mubs(7));
    constructed.push_back(prime_mubs(13));
    constructed.push_back(weak_mubs(2, 3));
    constructed.push_back(rbd_to_bases(resolvable_transversal_design(3, 4)).set);
    constructed.push_back(rbd_to_bases(resolvable_transversal_design(7, 8)).set);
    constructed.push_back(rbd_to_bases(q2_minus_1_design(7)).set);
    constructed.push_back(rbd_to_bases(kirkman_kts15()).set);

    std::vector<Criterion> results;
    results.push_back(c1_exact_mubs());
    results.push_back(c2_power_sum_bounds());
    results.push_back(c3_relationships(constructed));
    results.push_back(c4_apmub_closed_forms());
    results.push_back(c5_apmub_census());
    results.push_back(c6_weak_mubs());
    results.push_back(c7_q2m1_lemma());
    results.push_back(c8_kts15());
    results.push_back(c9_qkd());
    results.push_back(c10_entropic(constructed));
    results.push_back(c11_geometry());
    results.push_back(c12_two_design());
    results.push_back(c13_volume());

    int failures = 0;
    for (const auto& c : results) {
        std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name
                  << "\n";
        for (const auto& n : c.notes) std::cout << "       " << n << "\n";
        if (!c.pass) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criterion(s) failed")
              << "\n";
    return failures;
}
