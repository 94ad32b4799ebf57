#include "mubkit/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace mubkit {

namespace {

void require_same_dim(const Basis& b1, const Basis& b2, const char* who) {
    if (b1.dim() != b2.dim())
        throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

void require_pairable(const BasisSet& s, const char* who) {
    if (s.size() < 2)
        throw std::invalid_argument(std::string(who) +
                                    ": set-level measure needs at least two bases");
}

std::vector<double> cluster_sorted(std::vector<double> vals, double tol) {
    std::sort(vals.begin(), vals.end());
    std::vector<double> reps;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= vals.size(); ++i)
        if (i == vals.size() || vals[i] - vals[i - 1] > tol) {
            double sum = 0.0;
            for (std::size_t j = start; j < i; ++j) sum += vals[j];
            reps.push_back(sum / static_cast<double>(i - start));
            start = i;
        }
    return reps;
}

}  // namespace

double power_sum_from_table(const RealTable& t, double two_t) {
    double s = 0.0;
    for (double x : t.v) s += std::pow(x, two_t);
    return s;
}

double power_sum_pair(const Basis& b1, const Basis& b2, double t) {
    require_same_dim(b1, b2, "power_sum_pair");
    if (!(t > 0.0)) throw std::invalid_argument("power_sum_pair: exponent must be positive");
    return power_sum_from_table(overlap_table(b1, b2), 2.0 * t);
}

double tau_from_table(const RealTable& t) {
    const double u = 1.0 / std::sqrt(static_cast<double>(t.rows));
    double worst = 0.0;
    for (double x : t.v) worst = std::max(worst, std::abs(u - x));
    return worst;
}

double tau_pair(const Basis& b1, const Basis& b2) {
    require_same_dim(b1, b2, "tau_pair");
    return tau_from_table(overlap_table(b1, b2));
}

double sigma_from_table(const RealTable& t) {
    const double u = 1.0 / std::sqrt(static_cast<double>(t.rows));
    double acc = 0.0;
    for (double x : t.v) acc += (u - x) * (u - x);
    return std::sqrt(acc) / static_cast<double>(t.rows);
}

double sigma_pair(const Basis& b1, const Basis& b2) {
    require_same_dim(b1, b2, "sigma_pair");
    return sigma_from_table(overlap_table(b1, b2));
}

double gamma_squared_from_table(const RealTable& t) {
    const double inv_d = 1.0 / static_cast<double>(t.rows);
    double acc = 0.0;
    for (double x : t.v) {
        const double dev = x * x - inv_d;
        acc += dev * dev;
    }
    return acc;
}

double gamma_squared_pair(const Basis& b1, const Basis& b2) {
    require_same_dim(b1, b2, "gamma_squared_pair");
    return gamma_squared_from_table(overlap_table(b1, b2));
}

double bengtsson_from_table(const RealTable& t) {
    return 1.0 - gamma_squared_from_table(t) / (static_cast<double>(t.rows) - 1.0);
}

double bengtsson_pair(const Basis& b1, const Basis& b2) {
    require_same_dim(b1, b2, "bengtsson_pair");
    return bengtsson_from_table(overlap_table(b1, b2));
}

double traceless_dot(const CVector& u, const CVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("traceless_dot: dimension mismatch");
    const double ov = std::norm(inner_product(u, v));
    return 0.5 * (ov - 1.0 / static_cast<double>(u.dim()));
}

double set_t_coherence(const BasisSet& s, double t) {
    require_pairable(s, "set_t_coherence");
    double acc = 0.0;
    std::size_t n = 0;
    for (std::size_t l = 0; l < s.size(); ++l)
        for (std::size_t m = l + 1; m < s.size(); ++m) {
            acc += power_sum_pair(s.bases[l], s.bases[m], t);
            ++n;
        }
    return acc / static_cast<double>(n);
}

double tau_set(const BasisSet& s) {
    require_pairable(s, "tau_set");
    double worst = 0.0;
    for (std::size_t l = 0; l < s.size(); ++l)
        for (std::size_t m = l + 1; m < s.size(); ++m)
            worst = std::max(worst, tau_pair(s.bases[l], s.bases[m]));
    return worst;
}

double sigma_set(const BasisSet& s) {
    require_pairable(s, "sigma_set");
    double worst = 0.0;
    for (std::size_t l = 0; l < s.size(); ++l)
        for (std::size_t m = l + 1; m < s.size(); ++m)
            worst = std::max(worst, sigma_pair(s.bases[l], s.bases[m]));
    return worst;
}

double asd_set(const BasisSet& s) {
    require_pairable(s, "asd_set");
    double acc = 0.0;
    std::size_t n = 0;
    for (std::size_t l = 0; l < s.size(); ++l)
        for (std::size_t m = l + 1; m < s.size(); ++m) {
            acc += bengtsson_pair(s.bases[l], s.bases[m]);
            ++n;
        }
    return acc / static_cast<double>(n);
}

double asd_set_grand_mean(const BasisSet& s) {
    const double r = static_cast<double>(s.size());
    return asd_set(s) * (r - 1.0) / r;
}

double dmax_set(const BasisSet& s) {
    require_pairable(s, "dmax_set");
    double worst = 0.0;
    for (std::size_t l = 0; l < s.size(); ++l)
        for (std::size_t m = l + 1; m < s.size(); ++m)
            worst = std::max(worst, bengtsson_pair(s.bases[l], s.bases[m]));
    return worst;
}

std::vector<double> delta_spectrum(const BasisSet& s, double cluster_tol) {
    require_pairable(s, "delta_spectrum");
    std::vector<double> vals;
    for (std::size_t l = 0; l < s.size(); ++l)
        for (std::size_t m = l + 1; m < s.size(); ++m) {
            auto t = overlap_table(s.bases[l], s.bases[m]);
            vals.insert(vals.end(), t.v.begin(), t.v.end());
        }
    return cluster_sorted(std::move(vals), cluster_tol);
}

double sparsity(const BasisSet& s) {
    if (s.size() < 1) throw std::invalid_argument("sparsity: empty basis set");
    double acc = 0.0;
    for (const auto& b : s.bases) {
        long long zeros = 0;
        long long total = 0;
        for (const auto& v : b.vectors)
            for (const auto& a : v.amp) {
                if (std::abs(a) <= 1e-9) ++zeros;
                ++total;
            }
        acc += static_cast<double>(zeros) / static_cast<double>(total);
    }
    return acc / static_cast<double>(s.size());
}

double frame_potential(const std::vector<CVector>& vectors, double t) {
    if (vectors.empty()) throw std::invalid_argument("frame_potential: empty vector list");
    const std::size_t n = vectors.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ns = vectors[i].norm_sq();
        acc += std::pow(ns * ns, t);  // self-pair
        for (std::size_t j = i + 1; j < n; ++j)
            acc += 2.0 * std::pow(std::norm(inner_product(vectors[i], vectors[j])), t);
    }
    return acc / (static_cast<double>(n) * static_cast<double>(n));
}

long long sym_dim(int d, int t) {
    if (d < 1 || t < 1) throw std::invalid_argument("sym_dim: need d >= 1 and t >= 1");
    long long num = 1;
    for (int i = 1; i <= t; ++i) num = num * (d + t - i) / i;  // C(d+t-1, t), exact
    return num;
}

double design_defect(const std::vector<CVector>& vectors, int d, int t) {
    return frame_potential(vectors, static_cast<double>(t)) -
           1.0 / static_cast<double>(sym_dim(d, t));
}

std::vector<CVector> collect_vectors(const BasisSet& s) {
    std::vector<CVector> out;
    out.reserve(s.size() * s.dim);
    for (const auto& b : s.bases)
        for (const auto& v : b.vectors) out.push_back(v);
    return out;
}

double log_volume_ratio_approx(const BasisSet& s) {
    require_pairable(s, "log_volume_ratio_approx");
    const double inv_d = 1.0 / static_cast<double>(s.dim);
    double acc = 0.0;
    for (std::size_t l = 0; l < s.size(); ++l)
        for (std::size_t m = l + 1; m < s.size(); ++m) {
            auto t = overlap_sq_table(s.bases[l], s.bases[m]);
            for (double x : t.v) {
                const double dev = x - inv_d;
                acc += std::log1p(-dev * dev);
            }
        }
    return acc;
}

Eigen::MatrixXd gram_matrix(const BasisSet& s) {
    const int d = static_cast<int>(s.dim);
    if (d < 2) throw std::invalid_argument("gram_matrix: dimension must be >= 2");
    const int per_basis = d - 1;
    const int n = static_cast<int>(s.size()) * per_basis;
    // Tr(m_a m_b) for normalized traceless projectors reduces to the overlap:
    // (d/(d-1)) (|<u|v>|^2 - 1/d); computing it this way avoids forming the
    // d x d operators.
    Eigen::MatrixXd g(n, n);
    const double scale = static_cast<double>(d) / (d - 1.0);
    const double inv_d = 1.0 / static_cast<double>(d);
    for (int a = 0; a < n; ++a) {
        const auto& u = s.bases[a / per_basis].vectors[a % per_basis];
        for (int b = a; b < n; ++b) {
            const auto& v = s.bases[b / per_basis].vectors[b % per_basis];
            const double val = scale * (std::norm(inner_product(u, v)) - inv_d);
            g(a, b) = val;
            g(b, a) = val;
        }
    }
    return g;
}

double gram_log_volume(const BasisSet& s) {
    Eigen::MatrixXd g = gram_matrix(s);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double ev = es.eigenvalues()[i];
        if (ev <= 1e-12) return -std::numeric_limits<double>::infinity();
        acc += std::log(ev);
    }
    return 0.5 * acc;
}

MeasureReport measure_set(const BasisSet& s, const std::vector<double>& omega_exponents,
                          double cluster_tol) {
    require_pairable(s, "measure_set");
    MeasureReport rep;
    rep.dim = s.dim;
    rep.basis_count = s.size();
    rep.provenance = s.provenance;

    std::vector<double> all_overlaps;
    for (std::size_t l = 0; l < s.size(); ++l)
        for (std::size_t m = l + 1; m < s.size(); ++m) {
            const RealTable t = overlap_table(s.bases[l], s.bases[m]);
            PairMeasures pm;
            pm.l = l;
            pm.m = m;
            for (double te : omega_exponents)
                pm.omega_t[te] = power_sum_from_table(t, 2.0 * te);
            pm.tau = tau_from_table(t);
            pm.sigma = sigma_from_table(t);
            pm.gamma_squared = gamma_squared_from_table(t);
            pm.d_squared = 1.0 - pm.gamma_squared / (static_cast<double>(s.dim) - 1.0);
            pm.delta_pair = cluster_sorted(t.v, cluster_tol);
            all_overlaps.insert(all_overlaps.end(), t.v.begin(), t.v.end());
            rep.pairs.push_back(std::move(pm));
        }

    const double npairs = static_cast<double>(rep.pairs.size());
    for (double te : omega_exponents) {
        double acc = 0.0;
        for (const auto& pm : rep.pairs) acc += pm.omega_t.at(te);
        rep.omega_t[te] = acc / npairs;
    }
    for (const auto& pm : rep.pairs) {
        rep.tau = std::max(rep.tau, pm.tau);
        rep.sigma = std::max(rep.sigma, pm.sigma);
        rep.asd += pm.d_squared;
        rep.d_squared_max = std::max(rep.d_squared_max, pm.d_squared);
    }
    rep.asd /= npairs;
    const double r = static_cast<double>(s.size());
    rep.asd_grand_mean = rep.asd * (r - 1.0) / r;
    rep.delta = cluster_sorted(std::move(all_overlaps), cluster_tol);
    rep.epsilon = sparsity(s);

    const auto vecs = collect_vectors(s);
    rep.frame_potential_2 = frame_potential(vecs, 2.0);
    rep.sym_dim_2 = sym_dim(static_cast<int>(s.dim), 2);
    rep.design_defect_2 = rep.frame_potential_2 - 1.0 / static_cast<double>(rep.sym_dim_2);
    rep.log_volume_ratio = log_volume_ratio_approx(s);
    if (s.size() == s.dim + 1) rep.gram_log_vol = gram_log_volume(s);
    rep.classification = classify_set(s, cluster_tol);
    return rep;
}

}  // namespace mubkit
