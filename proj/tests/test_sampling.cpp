#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "spinent/rng.hpp"
#include "spinent/sampling.hpp"
#include "spinent/states.hpp"
#include "support/oracles.hpp"

using namespace spinent;

namespace {

constexpr double kPi = std::numbers::pi;

/// Resamples empirical counts and returns the bootstrap standard error of
/// the total-entropy estimate.
double bootstrap_se(const EntropyReport& rep, std::uint64_t shots, int replicates, Rng64& rng) {
    const ProbabilityDistribution* dists[3] = {&rep.px, &rep.py, &rep.pz};
    std::vector<double> totals;
    totals.reserve(static_cast<std::size_t>(replicates));
    for (int b = 0; b < replicates; ++b) {
        double total = 0.0;
        for (const ProbabilityDistribution* d : dists) {
            std::vector<double> cum(d->probs.size());
            double acc = 0.0;
            for (std::size_t i = 0; i < d->probs.size(); ++i) {
                acc += d->probs[i];
                cum[i] = acc;
            }
            std::vector<double> counts(d->probs.size(), 0.0);
            for (std::uint64_t s = 0; s < shots; ++s) {
                const double u = rng.uniform01() * acc;
                std::size_t idx = 0;
                while (idx + 1 < cum.size() && cum[idx] <= u) ++idx;
                counts[idx] += 1.0;
            }
            for (double c : counts) {
                const double f = c / static_cast<double>(shots);
                if (f > 0.0) total -= f * std::log(f);
            }
        }
        totals.push_back(total);
    }
    double mean = 0.0;
    for (double t : totals) mean += t;
    mean /= static_cast<double>(totals.size());
    double var = 0.0;
    for (double t : totals) var += (t - mean) * (t - mean);
    var /= static_cast<double>(totals.size() - 1);
    return std::sqrt(var);
}

}  // namespace

TEST_CASE("degenerate distribution samples to exactly zero entropy") {
    const auto bases = build_all_bases(build_operators(SpinSystem::Half));
    const EntropyReport r = sample_estimate(half_state({0, 0, 0}), bases, 100000, 1);
    CHECK(r.s_z == 0.0);
    CHECK(r.pz.probs[0] == 1.0);
}

TEST_CASE("same seed gives a bit-identical report") {
    const auto bases = build_all_bases(build_operators(SpinSystem::Half));
    const CVector psi = half_state({kPi / 4.0, 0.0, 0.0});
    const EntropyReport a = sample_estimate(psi, bases, 50000, 7);
    const EntropyReport b = sample_estimate(psi, bases, 50000, 7);
    CHECK(a.total == b.total);
    CHECK(a.s_x == b.s_x);
    CHECK(a.s_y == b.s_y);
    CHECK(a.s_z == b.s_z);
    CHECK(a.px.probs == b.px.probs);
    CHECK(a.py.probs == b.py.probs);
    CHECK(a.pz.probs == b.pz.probs);

    const EntropyReport c = sample_estimate(psi, bases, 50000, 8);
    CHECK(c.total != a.total);  // different seed, different draw
}

TEST_CASE("plug-in estimate approaches the analytic value") {
    const auto bases = build_all_bases(build_operators(SpinSystem::Half));
    const CVector psi = half_state({kPi / 4.0, 0.0, 0.0});

    const EntropyReport big = sample_estimate(psi, bases, 1000000, 7);
    CHECK(std::abs(big.total - oracle::kTwoLn2) <= 0.01);

    const EntropyReport mid = sample_estimate(psi, bases, 100000, 7);
    CHECK(std::abs(mid.total - oracle::kTwoLn2) <= 0.02);
}

TEST_CASE("error decreases with shots and stays within 5 bootstrap SEs") {
    const auto bases = build_all_bases(build_operators(SpinSystem::Half));
    const CVector psi = half_state({kPi / 4.0, 0.0, 0.0});

    Rng64 boot(101);
    double prev_err = std::numeric_limits<double>::infinity();
    for (const std::uint64_t shots : {1000ULL, 10000ULL, 100000ULL}) {
        const EntropyReport r = sample_estimate(psi, bases, shots, 7);
        const double err = std::abs(r.total - oracle::kTwoLn2);
        CHECK(err < prev_err);
        const double se = bootstrap_se(r, shots, 200, boot);
        CHECK(err <= 5.0 * se);
        prev_err = err;
    }
}

TEST_CASE("shots must be positive") {
    const auto bases = build_all_bases(build_operators(SpinSystem::Half));
    CHECK_THROWS_AS(sample_estimate(half_state({0, 0, 0}), bases, 0, 1), ParamOutOfRange);
}
