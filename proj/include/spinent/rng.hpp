#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "spinent/linalg.hpp"

namespace spinent {

/// Deterministic 64-bit generator with explicit bit-to-double mapping, so a
/// seed produces the same stream on every platform (std distributions are
/// implementation-defined and avoided).
class Rng64 {
public:
    explicit Rng64(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1] keeps the log finite.
        const double u1 = static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53;
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Haar-ish random unit vector: i.i.d. complex Gaussian entries, normalized.
inline CVector random_state(Rng64& rng, int dim) {
    CVector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = Complex(rng.gaussian(), rng.gaussian());
    const double n = v.norm();
    return Complex(1.0 / n, 0.0) * v;
}

}  // namespace spinent
