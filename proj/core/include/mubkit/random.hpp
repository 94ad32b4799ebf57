// Deterministic randomness: a splitmix64 stream with per-trial substreams so
// Monte Carlo results are reproducible and independent of evaluation order,
// plus rotation-invariant random states and bases.
#pragma once

#include <cstdint>

#include "mubkit/linalg.hpp"

namespace mubkit {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // substream for trial i of a seeded run; streams are decorrelated by the
    // splitmix finalizer
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
        splitmix64(s);
        return Rng(s);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    double uniform() {  // [0, 1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        // rejection-free modulo is fine here; n is tiny compared to 2^64
        return next_u64() % n;
    }

    double gaussian();  // standard normal, Box-Muller

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Haar-like random pure state via normalized complex Gaussian amplitudes.
CVector random_state(int d, Rng& rng);

// Haar-distributed random orthonormal basis (QR of a complex Gaussian matrix
// with the phase fix on R's diagonal).
Basis random_basis(int d, Rng& rng);

BasisSet random_basis_set(int d, int count, Rng& rng);

}  // namespace mubkit
