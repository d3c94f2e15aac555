#pragma once

#include <cstdint>

#include "spinent/entropy.hpp"

namespace spinent {

/// Simulated-measurement estimate of the spin-entropy: draws `shots`
/// independent outcomes per axis by inverse-CDF sampling from the exact
/// distributions, then returns the plug-in entropy of the empirical
/// frequencies (no bias correction). The generator is seeded and owned per
/// call: the same (state, bases, shots, seed) gives a bit-identical report.
EntropyReport sample_estimate(const CVector& psi,
                              const std::array<MeasurementBasis, 3>& bases,
                              std::uint64_t shots, std::uint64_t seed);

}  // namespace spinent
