#include "spinent/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinent/entropy.hpp"
#include "spinent/optimize.hpp"
#include "spinent/rng.hpp"
#include "spinent/sampling.hpp"
#include "spinent/states.hpp"

namespace spinent {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

const SpinSystem kSystems[] = {SpinSystem::Half, SpinSystem::One, SpinSystem::TwoFermion};

CheckResult make_check(std::string name, double residual, double tolerance) {
    return CheckResult{std::move(name), residual, tolerance, residual <= tolerance};
}

double spectrum_residual(const SpinOperatorSet& ops, const std::vector<double>& expected) {
    const EigenDecomposition eig = hermitian_eigen(ops.sz);
    double r = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i)
        r = std::max(r, std::abs(eig.eigenvalues[i] - expected[i]));
    return r;
}

double tabulated_operator_residual() {
    const Complex i{0.0, 1.0};
    const SpinOperatorSet two = build_operators(SpinSystem::TwoFermion);
    const CMatrix sx = Complex(0.5) * CMatrix::from_rows(
                                          {{0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}});
    const CMatrix sy = Complex(0.5) * CMatrix::from_rows({{0, -i, -i, 0},
                                                          {i, 0, 0, -i},
                                                          {i, 0, 0, -i},
                                                          {0, i, i, 0}});
    const CMatrix sz =
        CMatrix::from_rows({{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}});
    const CMatrix s2 =
        CMatrix::from_rows({{2, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 2}});

    double r = std::max({max_abs(two.sx - sx), max_abs(two.sy - sy), max_abs(two.sz - sz),
                         max_abs(two.s2 - s2)});

    const SpinOperatorSet one = build_operators(SpinSystem::One);
    r = std::max(r, max_abs(one.s2 - Complex(2.0) * CMatrix::identity(3)));
    for (const SpinSystem s : kSystems) {
        const SpinOperatorSet ops = build_operators(s);
        r = std::max({r, std::abs(trace_real(ops.sx)), std::abs(trace_real(ops.sy)),
                      std::abs(trace_real(ops.sz))});
    }
    return r;
}

double basis_unitarity_residual() {
    double r = 0.0;
    for (const SpinSystem s : kSystems) {
        const SpinOperatorSet ops = build_operators(s);
        for (const Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
            const MeasurementBasis b = build_basis(ops, axis);
            r = std::max(r, max_abs(adjoint(b.columns) * b.columns -
                                    CMatrix::identity(b.columns.rows())));
        }
    }
    return r;
}

double basis_cross_residual(SpinSystem system, int states_per_axis, Rng64& rng) {
    const SpinOperatorSet ops = build_operators(system);
    double r = 0.0;
    for (const Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
        const MeasurementBasis built = build_basis(ops, axis);
        const MeasurementBasis tab = tabulated_basis(system, axis);
        for (int k = 0; k < states_per_axis; ++k) {
            const CVector psi = random_state(rng, system_dim(system));
            const ProbabilityDistribution pa = probabilities(psi, built);
            const ProbabilityDistribution pb = probabilities(psi, tab);
            for (std::size_t j = 0; j < pa.probs.size(); ++j)
                r = std::max(r, std::abs(pa.probs[j] - pb.probs[j]));
        }
    }
    return r;
}

double closed_vs_direct_half(int grid, int random_triples, Rng64& rng) {
    const auto bases = build_all_bases(build_operators(SpinSystem::Half));
    double r = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double theta = (kPi / 2.0) * i / (grid - 1);
        for (int j = 0; j < grid; ++j) {
            const double nu = kTwoPi * j / grid;
            const double direct = spin_entropy(half_state({theta, nu, 0.0}), bases).total;
            r = std::max(r, std::abs(closed_form_half(theta, nu) - direct));
        }
    }
    for (int k = 0; k < random_triples; ++k) {
        const double theta = rng.uniform(0.0, kPi / 2.0);
        const double nu = rng.uniform(0.0, kTwoPi);
        const double phi = rng.uniform(0.0, kTwoPi);
        const double direct = spin_entropy(half_state({theta, nu, phi}), bases).total;
        r = std::max(r, std::abs(closed_form_half(theta, nu) - direct));
    }
    return r;
}

double closed_vs_direct_entangled(int samples, Rng64& rng) {
    const auto bases = build_all_bases(build_operators(SpinSystem::TwoFermion));
    double r = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double theta = rng.uniform(0.0, kTwoPi);
        const double alpha = rng.uniform(0.0, kTwoPi);
        r = std::max(r, std::abs(closed_form_xi(theta) -
                                 spin_entropy(xi_state({theta, alpha}), bases).total));
        r = std::max(r, std::abs(closed_form_chi(theta) -
                                 spin_entropy(chi_state({theta, alpha}), bases).total));
    }
    return r;
}

std::array<MeasurementBasis, 3> with_random_column_phases(std::array<MeasurementBasis, 3> bases,
                                                          Rng64& rng) {
    for (MeasurementBasis& b : bases) {
        for (int j = 0; j < b.columns.cols(); ++j) {
            const Complex rot = std::polar(1.0, rng.uniform(0.0, kTwoPi));
            for (int i = 0; i < b.columns.rows(); ++i) b.columns(i, j) *= rot;
        }
    }
    return bases;
}

std::array<std::array<MeasurementBasis, 3>, 3> all_system_bases() {
    return {build_all_bases(build_operators(SpinSystem::Half)),
            build_all_bases(build_operators(SpinSystem::One)),
            build_all_bases(build_operators(SpinSystem::TwoFermion))};
}

double phase_invariance_residual(int cases, Rng64& rng) {
    const auto bases_by_system = all_system_bases();
    double r = 0.0;
    for (int k = 0; k < cases; ++k) {
        const std::size_t s = static_cast<std::size_t>(k % 3);
        const auto& bases = bases_by_system[s];
        const CVector psi = random_state(rng, system_dim(kSystems[s]));
        const double base = spin_entropy(psi, bases).total;

        const CVector rotated = std::polar(1.0, rng.uniform(0.0, kTwoPi)) * psi;
        r = std::max(r, std::abs(spin_entropy(rotated, bases).total - base));

        const auto rephased = with_random_column_phases(bases, rng);
        r = std::max(r, std::abs(spin_entropy(psi, rephased).total - base));
    }
    return r;
}

double factorization_residual(int cases, Rng64& rng) {
    const auto bases_by_system = all_system_bases();
    double r = 0.0;
    for (int k = 0; k < cases; ++k) {
        const std::size_t s = static_cast<std::size_t>(k % 3);
        const EntropyReport rep =
            spin_entropy(random_state(rng, system_dim(kSystems[s])), bases_by_system[s]);
        const double triple = product_distribution_entropy(rep.px, rep.py, rep.pz);
        r = std::max(r, std::abs(triple - (rep.s_x + rep.s_y + rep.s_z)));
    }
    return r;
}

double bell_residual() {
    const auto bases = build_all_bases(build_operators(SpinSystem::TwoFermion));
    const struct {
        Bell state;
        double expected_spin;
    } rows[] = {{Bell::PsiMinus, 0.0},
                {Bell::PsiPlus, 2.0 * kLn2},
                {Bell::PhiPlus, 2.0 * kLn2},
                {Bell::PhiMinus, 2.0 * kLn2}};
    double r = 0.0;
    for (const auto& row : rows) {
        const CVector psi = bell_state(row.state);
        r = std::max(r, std::abs(spin_entropy(psi, bases).total - row.expected_spin));
        r = std::max(r, std::abs(von_neumann_traced(psi) - kLn2));
    }
    return r;
}

double traced_curve_residual(int grid) {
    double r = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double theta = (kPi / 2.0) * i / (grid - 1);
        const double c2 = std::cos(theta) * std::cos(theta);
        const double s2 = std::sin(theta) * std::sin(theta);
        const double expected = -(c2 > 0 ? c2 * std::log(c2) : 0.0) -
                                (s2 > 0 ? s2 * std::log(s2) : 0.0);
        r = std::max(r, std::abs(von_neumann_traced(xi_state({theta, 0.0})) - expected));
    }
    return r;
}

double sampler_residual() {
    const auto bases = build_all_bases(build_operators(SpinSystem::Half));
    const CVector psi = half_state({kPi / 4.0, 0.0, 0.0});
    const EntropyReport a = sample_estimate(psi, bases, 10000, 20240);
    const EntropyReport b = sample_estimate(psi, bases, 10000, 20240);
    if (a.total != b.total || a.s_x != b.s_x || a.s_y != b.s_y || a.s_z != b.s_z) {
        return 1.0;  // determinism broken; dwarf any tolerance
    }
    return std::abs(a.total - 2.0 * kLn2);
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    std::vector<CheckResult> checks;
    Rng64 rng(0x51e9a7b3ULL);

    for (const SpinSystem s : kSystems) {
        SpinOperatorSet ops = build_operators(s);
        if (options.inject_fault && s == SpinSystem::TwoFermion) {
            ops.sx(0, 1) += 0.05;
        }
        const AlgebraReport rep = check_commutations(ops);
        const double residual = std::max({rep.commutator_residual, rep.casimir_residual,
                                          rep.sum_of_squares_residual});
        checks.push_back(make_check("operator algebra (" + system_name(s) + ")", residual, 1e-12));
    }

    checks.push_back(make_check("operator literals and traces", tabulated_operator_residual(),
                                1e-12));

    {
        double r = spectrum_residual(build_operators(SpinSystem::Half), {0.5, -0.5});
        r = std::max(r, spectrum_residual(build_operators(SpinSystem::One), {1.0, 0.0, -1.0}));
        r = std::max(r, spectrum_residual(build_operators(SpinSystem::TwoFermion),
                                          {1.0, 0.0, 0.0, -1.0}));
        checks.push_back(make_check("S_z spectra", r, 1e-10));
    }

    checks.push_back(make_check("basis unitarity", basis_unitarity_residual(), 1e-10));

    for (const SpinSystem s : kSystems) {
        checks.push_back(make_check("basis cross-validation (" + system_name(s) + ")",
                                    basis_cross_residual(s, 1000, rng), 1e-9));
    }

    checks.push_back(make_check("closed form vs direct (half, 200x200 + 1e4 random)",
                                closed_vs_direct_half(200, 10000, rng), 1e-9));
    checks.push_back(make_check("closed form vs direct (xi/chi, 1e4 random)",
                                closed_vs_direct_entangled(10000, rng), 1e-9));
    checks.push_back(make_check("phase invariance (1e3 random)",
                                phase_invariance_residual(1000, rng), 1e-12));
    checks.push_back(make_check("product-distribution factorization (1e3 random)",
                                factorization_residual(1000, rng), 1e-10));
    checks.push_back(make_check("Bell-state entropy table", bell_residual(), 1e-9));
    checks.push_back(make_check("traced entropy curve (1001 points)",
                                traced_curve_residual(1001), 1e-9));
    checks.push_back(make_check("sampler determinism and accuracy", sampler_residual(), 0.05));

    return checks;
}

bool all_pass(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

}  // namespace spinent
