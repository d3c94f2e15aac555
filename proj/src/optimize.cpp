#include "spinent/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "spinent/entropy.hpp"
#include "spinent/states.hpp"

namespace spinent {

namespace {

double checked_eval(const Objective& f, const std::vector<double>& x) {
    const double v = f(x);
    if (!std::isfinite(v)) throw NonFiniteObjective("objective returned NaN/Inf");
    return v;
}

double simplex_diameter(const std::vector<std::vector<double>>& pts) {
    double d = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t k = 0; k < pts[0].size(); ++k)
            d = std::max(d, std::abs(pts[i][k] - pts[0][k]));
    return d;
}

}  // namespace

OptResult nelder_mead(const Objective& objective, std::vector<double> x0, double tol_x,
                      double tol_f, int max_iter) {
    if (max_iter < 1) throw ParamOutOfRange("max_iter must be >= 1");
    const std::size_t n = x0.size();
    if (n == 0) throw ParamOutOfRange("empty parameter vector");

    constexpr double kReflect = 1.0;
    constexpr double kExpand = 2.0;
    constexpr double kContract = 0.5;
    constexpr double kShrink = 0.5;

    std::vector<std::vector<double>> pts(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += 0.05 * (1.0 + std::abs(x0[i]));

    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fv[i] = checked_eval(objective, pts[i]);

    int iter = 0;
    bool converged = false;
    while (iter < max_iter) {
        // Sort vertices best-first (stable, so reruns tie-break identically).
        std::vector<std::size_t> order(n + 1);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        std::vector<std::vector<double>> spts(n + 1);
        std::vector<double> sfv(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            spts[i] = std::move(pts[order[i]]);
            sfv[i] = fv[order[i]];
        }
        pts = std::move(spts);
        fv = std::move(sfv);

        if (simplex_diameter(pts) <= tol_x && fv[n] - fv[0] <= tol_f) {
            converged = true;
            break;
        }
        ++iter;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k] / static_cast<double>(n);

        auto along = [&](double coef) {
            std::vector<double> x(n);
            for (std::size_t k = 0; k < n; ++k)
                x[k] = centroid[k] + coef * (centroid[k] - pts[n][k]);
            return x;
        };

        const std::vector<double> xr = along(kReflect);
        const double fr = checked_eval(objective, xr);

        if (fr < fv[0]) {
            const std::vector<double> xe = along(kExpand);
            const double fe = checked_eval(objective, xe);
            if (fe < fr) {
                pts[n] = xe;
                fv[n] = fe;
            } else {
                pts[n] = xr;
                fv[n] = fr;
            }
            continue;
        }
        if (fr < fv[n - 1]) {
            pts[n] = xr;
            fv[n] = fr;
            continue;
        }

        // Contraction: outside if the reflected point helped at all.
        if (fr < fv[n]) {
            const std::vector<double> xc = along(kContract);
            const double fc = checked_eval(objective, xc);
            if (fc <= fr) {
                pts[n] = xc;
                fv[n] = fc;
                continue;
            }
        } else {
            const std::vector<double> xc = along(-kContract);
            const double fc = checked_eval(objective, xc);
            if (fc < fv[n]) {
                pts[n] = xc;
                fv[n] = fc;
                continue;
            }
        }

        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t k = 0; k < n; ++k)
                pts[i][k] = pts[0][k] + kShrink * (pts[i][k] - pts[0][k]);
            fv[i] = checked_eval(objective, pts[i]);
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (fv[i] < fv[best]) best = i;

    return OptResult{pts[best], fv[best], converged, iter};
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct ParameterBox {
    std::vector<double> lo, hi;
    std::vector<bool> periodic;  // periodic dims wrap with period hi - lo

    std::size_t dims() const { return lo.size(); }

    double project_dim(std::size_t d, double x) const {
        if (periodic[d]) {
            const double period = hi[d] - lo[d];
            double y = std::fmod(x - lo[d], period);
            if (y < 0.0) y += period;
            if (y >= period) y = 0.0;  // fmod roundoff at the seam
            return lo[d] + y;
        }
        return std::clamp(x, lo[d], hi[d]);
    }

    std::vector<double> project(std::vector<double> x) const {
        for (std::size_t d = 0; d < dims(); ++d) x[d] = project_dim(d, x[d]);
        return x;
    }

    double wrapped_distance(const std::vector<double>& a, const std::vector<double>& b) const {
        double sq = 0.0;
        for (std::size_t d = 0; d < dims(); ++d) {
            double diff = std::abs(a[d] - b[d]);
            if (periodic[d]) {
                const double period = hi[d] - lo[d];
                diff = std::min(diff, period - diff);
            }
            sq += diff * diff;
        }
        return std::sqrt(sq);
    }
};

ParameterBox family_box(Family family) {
    switch (family) {
        case Family::Half:
            return {{0.0, 0.0}, {kPi / 2.0, kTwoPi}, {false, true}};
        case Family::One:
            return {{0.0, 0.0, 0.0, 0.0},
                    {kPi / 2.0, kPi / 2.0, kTwoPi, kTwoPi},
                    {false, false, true, true}};
        case Family::Xi:
        case Family::Chi:
            return {{0.0}, {kTwoPi}, {true}};
    }
    throw Error("unknown family");
}

/// Grid coordinates per dimension: closed dims get an inclusive linspace,
/// periodic dims n points with the right endpoint left out.
std::vector<std::vector<double>> grid_coordinates(const ParameterBox& box, int n) {
    std::vector<std::vector<double>> coords(box.dims());
    for (std::size_t d = 0; d < box.dims(); ++d) {
        coords[d].resize(static_cast<std::size_t>(n));
        const double span = box.hi[d] - box.lo[d];
        for (int i = 0; i < n; ++i) {
            double x;
            if (box.periodic[d]) {
                x = box.lo[d] + span * i / n;
            } else {
                x = i == n - 1 ? box.hi[d] : box.lo[d] + span * i / (n - 1);
            }
            coords[d][static_cast<std::size_t>(i)] = x;
        }
    }
    return coords;
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Half: return "half";
        case Family::One: return "one";
        case Family::Xi: return "xi";
        case Family::Chi: return "chi";
    }
    throw Error("unknown family");
}

int family_dims(Family family) { return static_cast<int>(family_box(family).dims()); }

double family_entropy(Family family, const std::vector<double>& params) {
    static const auto half_bases = build_all_bases(build_operators(SpinSystem::Half));
    static const auto one_bases = build_all_bases(build_operators(SpinSystem::One));
    static const auto two_bases = build_all_bases(build_operators(SpinSystem::TwoFermion));

    const ParameterBox box = family_box(family);
    if (params.size() != box.dims()) throw DimensionMismatch("wrong parameter count");
    const std::vector<double> p = box.project(params);

    switch (family) {
        case Family::Half:
            return spin_entropy(half_state({p[0], p[1], 0.0}), half_bases).total;
        case Family::One:
            return spin_entropy(one_state({p[0], p[1], p[2], 0.0, p[3]}), one_bases).total;
        case Family::Xi:
            return spin_entropy(xi_state({p[0], 0.0}), two_bases).total;
        case Family::Chi:
            return spin_entropy(chi_state({p[0], 0.0}), two_bases).total;
    }
    throw Error("unknown family");
}

namespace {

constexpr double kPlateauTol = 1e-12;   // neighbor values this close merge into one candidate
constexpr double kClusterValueTol = 1e-4;
constexpr double kClusterParamTol = 1e-3;

struct GridScan {
    std::vector<std::vector<double>> coords;  // per-dim coordinates
    std::vector<double> values;               // row-major over the grid
    std::vector<int> strides;
    int n = 0;

    std::vector<double> point(long flat) const {
        std::vector<double> x(coords.size());
        for (std::size_t d = 0; d < coords.size(); ++d) {
            x[d] = coords[d][static_cast<std::size_t>((flat / strides[d]) % n)];
        }
        return x;
    }
};

/// Flat index of the axis neighbor, or -1 when it falls off a closed edge.
long neighbor_index(const GridScan& scan, const ParameterBox& box, long flat, std::size_t dim,
                    int step) {
    const int i = static_cast<int>((flat / scan.strides[dim]) % scan.n);
    int j = i + step;
    if (box.periodic[dim]) {
        j = (j + scan.n) % scan.n;
    } else if (j < 0 || j >= scan.n) {
        return -1;
    }
    return flat + static_cast<long>(j - i) * scan.strides[dim];
}

}  // namespace

std::vector<OptResult> find_extrema(Family family, int grid_per_dim, int refine_starts,
                                    double tol) {
    if (grid_per_dim < 3) throw ParamOutOfRange("grid_per_dim must be >= 3");
    if (refine_starts < 1) throw ParamOutOfRange("refine_starts must be >= 1");

    const ParameterBox box = family_box(family);
    if (std::pow(static_cast<double>(grid_per_dim), static_cast<double>(box.dims())) > 2e6) {
        throw ParamOutOfRange("grid has more than 2e6 points");
    }
    const std::size_t dims = box.dims();
    const Objective objective = [&](const std::vector<double>& x) {
        return family_entropy(family, x);
    };

    GridScan scan;
    scan.n = grid_per_dim;
    scan.coords = grid_coordinates(box, grid_per_dim);
    scan.strides.resize(dims);
    long total = 1;
    for (std::size_t d = dims; d-- > 0;) {
        scan.strides[d] = static_cast<int>(total);
        total *= grid_per_dim;
    }
    scan.values.resize(static_cast<std::size_t>(total));
    for (long flat = 0; flat < total; ++flat) {
        scan.values[static_cast<std::size_t>(flat)] = checked_eval(objective, scan.point(flat));
    }

    // Candidate starts: grid points no worse than any axis neighbor.
    std::vector<long> candidates;
    for (long flat = 0; flat < total; ++flat) {
        const double v = scan.values[static_cast<std::size_t>(flat)];
        bool is_min = true;
        for (std::size_t d = 0; d < dims && is_min; ++d) {
            for (int step : {-1, +1}) {
                const long nb = neighbor_index(scan, box, flat, d, step);
                if (nb >= 0 && scan.values[static_cast<std::size_t>(nb)] < v) {
                    is_min = false;
                    break;
                }
            }
        }
        if (is_min) candidates.push_back(flat);
    }

    // Collapse plateaus: connected candidates with equal values (continua of
    // minimizers show up as whole grid rows) keep only their first point.
    std::vector<long> representatives;
    {
        std::vector<char> seen(static_cast<std::size_t>(total), 0);
        std::vector<char> is_candidate(static_cast<std::size_t>(total), 0);
        for (long c : candidates) is_candidate[static_cast<std::size_t>(c)] = 1;
        for (long c : candidates) {
            if (seen[static_cast<std::size_t>(c)]) continue;
            representatives.push_back(c);
            std::vector<long> stack{c};
            seen[static_cast<std::size_t>(c)] = 1;
            while (!stack.empty()) {
                const long cur = stack.back();
                stack.pop_back();
                for (std::size_t d = 0; d < dims; ++d) {
                    for (int step : {-1, +1}) {
                        const long nb = neighbor_index(scan, box, cur, d, step);
                        if (nb < 0 || seen[static_cast<std::size_t>(nb)] ||
                            !is_candidate[static_cast<std::size_t>(nb)])
                            continue;
                        if (std::abs(scan.values[static_cast<std::size_t>(nb)] -
                                     scan.values[static_cast<std::size_t>(cur)]) <= kPlateauTol) {
                            seen[static_cast<std::size_t>(nb)] = 1;
                            stack.push_back(nb);
                        }
                    }
                }
            }
        }
    }

    std::stable_sort(representatives.begin(), representatives.end(), [&](long a, long b) {
        return scan.values[static_cast<std::size_t>(a)] < scan.values[static_cast<std::size_t>(b)];
    });
    if (static_cast<int>(representatives.size()) > refine_starts) {
        representatives.resize(static_cast<std::size_t>(refine_starts));
    }

    std::vector<OptResult> refined;
    refined.reserve(representatives.size());
    for (long rep : representatives) {
        OptResult r = nelder_mead(objective, scan.point(rep), tol, tol, 2000);
        r.params = box.project(r.params);
        refined.push_back(std::move(r));
    }

    std::stable_sort(refined.begin(), refined.end(),
                     [](const OptResult& a, const OptResult& b) { return a.value < b.value; });

    std::vector<OptResult> clusters;
    for (OptResult& r : refined) {
        bool merged = false;
        for (const OptResult& rep : clusters) {
            if (std::abs(r.value - rep.value) <= kClusterValueTol &&
                box.wrapped_distance(r.params, rep.params) <= kClusterParamTol) {
                merged = true;  // rep is at least as good: list is value-sorted
                break;
            }
        }
        if (!merged) clusters.push_back(std::move(r));
    }
    return clusters;
}

}  // namespace spinent
