#include "spinent/sampling.hpp"

#include <algorithm>
#include <vector>

#include "spinent/rng.hpp"

namespace spinent {

namespace {

ProbabilityDistribution empirical(const ProbabilityDistribution& exact,
                                  std::uint64_t shots, Rng64& rng) {
    const std::size_t m = exact.probs.size();

    std::vector<double> cum(m);
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        acc += exact.probs[i];
        cum[i] = acc;
    }

    std::vector<std::uint64_t> counts(m, 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform01();
        const std::size_t idx = static_cast<std::size_t>(
            std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
        ++counts[std::min(idx, m - 1)];
    }

    std::vector<double> freq(m);
    for (std::size_t i = 0; i < m; ++i)
        freq[i] = static_cast<double>(counts[i]) / static_cast<double>(shots);
    return ProbabilityDistribution{std::move(freq)};
}

}  // namespace

EntropyReport sample_estimate(const CVector& psi,
                              const std::array<MeasurementBasis, 3>& bases,
                              std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) throw ParamOutOfRange("shots must be >= 1");

    Rng64 rng(seed);
    EntropyReport r;
    r.px = empirical(probabilities(psi, bases[0]), shots, rng);
    r.py = empirical(probabilities(psi, bases[1]), shots, rng);
    r.pz = empirical(probabilities(psi, bases[2]), shots, rng);
    r.s_x = shannon_entropy(r.px);
    r.s_y = shannon_entropy(r.py);
    r.s_z = shannon_entropy(r.pz);
    r.total = r.s_x + r.s_y + r.s_z;
    return r;
}

}  // namespace spinent
