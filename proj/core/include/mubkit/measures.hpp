// Closeness measures for pairs and families of orthonormal bases: power-sum
// coherences, max/rms deviations from the unbiased overlap 1/sqrt(d), the
// Bengtsson distance and its set averages, overlap spectra, sparsity, frame
// potentials, and the state-determination volume proxies.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mubkit/constructors.hpp"
#include "mubkit/linalg.hpp"

#include <Eigen/Dense>

namespace mubkit {

// ---- pair measures ---------------------------------------------------------

// sum_{i,j} |<psi_i|psi_j>|^(2t), t > 0. Identical bases give d, an exact MUB
// pair d^(2-t).
double power_sum_pair(const Basis& b1, const Basis& b2, double t);
double power_sum_from_table(const RealTable& overlaps, double two_t);

// max_{i,j} |1/sqrt(d) - |<psi_i|psi_j>||.
double tau_pair(const Basis& b1, const Basis& b2);
double tau_from_table(const RealTable& overlaps);

// (1/d) sqrt(sum (1/sqrt(d) - |<psi_i|psi_j>|)^2); satisfies sigma <= tau and
// sigma^2 <= (2/d)(1 - 1/d).
double sigma_pair(const Basis& b1, const Basis& b2);
double sigma_from_table(const RealTable& overlaps);

// sum_{i,j} (|<psi_i|psi_j>|^2 - 1/d)^2, the squared deviation the Bengtsson
// distance is built from.
double gamma_squared_pair(const Basis& b1, const Basis& b2);
double gamma_squared_from_table(const RealTable& overlaps);

// D^2 = 1 - gamma^2/(d-1): 1 for an unbiased pair, 0 for identical bases.
double bengtsson_pair(const Basis& b1, const Basis& b2);
double bengtsson_from_table(const RealTable& overlaps);

// (1/2)(|<u|v>|^2 - 1/d): the Hilbert-Schmidt dot product of the traceless
// projectors u u* - I/d and v v* - I/d (closed form; the explicit-trace route
// lives in the test oracles).
double traceless_dot(const CVector& u, const CVector& v);

// ---- set measures ----------------------------------------------------------

// Pair average (2/(r(r-1))) sum_{l<m} of power_sum_pair.
double set_t_coherence(const BasisSet& s, double t);

double tau_set(const BasisSet& s);    // max over pairs
double sigma_set(const BasisSet& s);  // max over pairs

// Average square distance over unordered pairs l<m (the form the APMUB
// closed forms reproduce); the grand-mean variant divides the same sum by
// r^2, i.e. equals (r-1)/r times the pair average.
double asd_set(const BasisSet& s);
double asd_set_grand_mean(const BasisSet& s);
double dmax_set(const BasisSet& s);

// Distinct overlap values across all cross pairs, clustered at tol.
std::vector<double> delta_spectrum(const BasisSet& s, double cluster_tol = 1e-7);

// Fraction of zero amplitudes (threshold 1e-9), averaged over member bases.
double sparsity(const BasisSet& s);

// ---- frame potential -------------------------------------------------------

// (1/N^2) sum over ordered vector pairs (self-pairs included) of |<u|v>|^(2t).
double frame_potential(const std::vector<CVector>& vectors, double t);

// dim Sym_t(C^d) = C(d+t-1, t).
long long sym_dim(int d, int t);

// frame_potential - 1/sym_dim: >= 0 up to rounding, 0 exactly for a
// projective t-design.
double design_defect(const std::vector<CVector>& vectors, int d, int t);

std::vector<CVector> collect_vectors(const BasisSet& s);

// ---- state-determination volume --------------------------------------------

// sum over l<m and all i,j of log(1 - (|<psi_i^l|psi_j^m>|^2 - 1/d)^2);
// zero exactly when every cross overlap is unbiased.
double log_volume_ratio_approx(const BasisSet& s);

// Gram matrix of the normalized traceless projectors sqrt(d/(d-1))(P - I/d),
// taking the first d-1 projectors of each basis (the d-th is dependent).
// Row/column order: basis-major.
Eigen::MatrixXd gram_matrix(const BasisSet& s);

// (1/2) log det of the Gram matrix; -inf when numerically singular.
double gram_log_volume(const BasisSet& s);

// ---- aggregate report ------------------------------------------------------

struct PairMeasures {
    std::size_t l = 0, m = 0;
    std::map<double, double> omega_t;  // exponent -> power sum
    double tau = 0.0;
    double sigma = 0.0;
    double d_squared = 0.0;
    double gamma_squared = 0.0;
    std::vector<double> delta_pair;
};

struct MeasureReport {
    std::size_t dim = 0;
    std::size_t basis_count = 0;
    std::string provenance;
    std::vector<PairMeasures> pairs;          // all l < m
    std::map<double, double> omega_t;         // pair averages
    double tau = 0.0;                         // max over pairs
    double sigma = 0.0;                       // max over pairs
    double asd = 0.0;                         // pair-average D^2
    double asd_grand_mean = 0.0;              // same sum over r^2
    double d_squared_max = 0.0;
    std::vector<double> delta;
    double epsilon = 0.0;                     // sparsity
    double frame_potential_2 = 0.0;
    long long sym_dim_2 = 0;
    double design_defect_2 = 0.0;
    double log_volume_ratio = 0.0;
    std::optional<double> gram_log_vol;       // only when r == d+1
    Classification classification;
};

inline const std::vector<double>& default_omega_exponents() {
    static const std::vector<double> ts{0.5, 1.0, 2.0, 3.0, 4.0};
    return ts;
}

// Full per-pair and set-level evaluation. Overlap magnitudes are computed
// once per pair and reused across every exponent. Requires r >= 2.
MeasureReport measure_set(const BasisSet& s,
                          const std::vector<double>& omega_exponents = default_omega_exponents(),
                          double cluster_tol = 1e-7);

}  // namespace mubkit
