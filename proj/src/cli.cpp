#include "spinent/cli.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinent/entropy.hpp"
#include "spinent/optimize.hpp"
#include "spinent/sampling.hpp"
#include "spinent/states.hpp"
#include "spinent/text_format.hpp"
#include "spinent/verification.hpp"

namespace spinent {

namespace {

using json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
    std::string out_path;
    bool json_mode = false;
    bool csv_mode = false;
    bool quiet = false;
};

void add_common(CLI::App* sub, CommonFlags& flags) {
    sub->add_option("--out", flags.out_path, "write output to PATH instead of standard output");
    sub->add_flag("--json", flags.json_mode, "emit JSON");
    sub->add_flag("--csv", flags.csv_mode, "emit CSV");
    sub->add_flag("--quiet", flags.quiet, "suppress informational output");
}

/// Opens --out if given; writing errors carry the path.
class OutputTarget {
public:
    OutputTarget(const CommonFlags& flags, std::ostream& fallback) : stream_(&fallback) {
        if (!flags.out_path.empty()) {
            file_.open(flags.out_path, std::ios::binary);
            if (!file_) throw Error("cannot open output file: " + flags.out_path);
            stream_ = &file_;
            path_ = flags.out_path;
        }
    }

    std::ostream& stream() { return *stream_; }

    void finish() {
        stream_->flush();
        if (!*stream_) throw Error("write failed" + (path_.empty() ? "" : ": " + path_));
    }

private:
    std::ofstream file_;
    std::ostream* stream_;
    std::string path_;
};

struct StateFlags {
    std::string system;
    double theta = 0.0;
    double nu = 0.0;
    double phi = 0.0;
    double theta_alpha = 0.0;
    double theta_beta = 0.0;
    double phi_x = 0.0;
    double phi_y = 0.0;
    double phi_z = 0.0;
    std::string family;
    double theta_ab = 0.0;
    double alpha = 0.0;
    std::vector<std::string> coeffs;
};

void add_state_flags(CLI::App* sub, StateFlags& f) {
    sub->add_option("--system", f.system, "spin system: half | one | two-fermion")->required();
    sub->add_option("--theta", f.theta, "half: theta_alpha in [0, pi/2] (radians)");
    sub->add_option("--nu", f.nu, "half: nu in [0, 2pi)");
    sub->add_option("--phi", f.phi, "half: global phase in [0, 2pi)");
    sub->add_option("--theta-alpha", f.theta_alpha, "one: theta_alpha in [0, pi/2]");
    sub->add_option("--theta-beta", f.theta_beta, "one: theta_beta in [0, pi/2]");
    sub->add_option("--phi-x", f.phi_x, "one: phi_x in [0, 2pi)");
    sub->add_option("--phi-y", f.phi_y, "one: phi_y (global phase) in [0, 2pi)");
    sub->add_option("--phi-z", f.phi_z, "one: phi_z in [0, 2pi)");
    sub->add_option("--family", f.family, "two-fermion: xi | chi");
    sub->add_option("--theta-ab", f.theta_ab, "two-fermion family: theta_AB in [0, 2pi)");
    sub->add_option("--alpha", f.alpha, "two-fermion family: global phase in [0, 2pi)");
    sub->add_option("--coeffs", f.coeffs,
                    "two-fermion: four re,im pairs (c++ c+- c-+ c--), must be normalized")
        ->expected(4);
}

Complex parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw Error("coefficient '" + text + "' is not re,im");
    std::size_t used_re = 0, used_im = 0;
    double re = 0.0, im = 0.0;
    try {
        re = std::stod(text.substr(0, comma), &used_re);
        im = std::stod(text.substr(comma + 1), &used_im);
    } catch (const std::exception&) {
        throw Error("coefficient '" + text + "' is not re,im");
    }
    if (used_re != comma || used_im != text.size() - comma - 1) {
        throw Error("coefficient '" + text + "' has trailing characters");
    }
    return {re, im};
}

struct ResolvedState {
    SpinSystem system;
    CVector psi;
    json params;
    std::optional<double> closed_form;
};

ResolvedState resolve_state(const StateFlags& f) {
    ResolvedState r;
    if (f.system == "half") {
        r.system = SpinSystem::Half;
        r.psi = half_state({f.theta, f.nu, f.phi});
        r.params = {{"theta_alpha", f.theta}, {"nu", f.nu}, {"phi", f.phi}};
        r.closed_form = closed_form_half(f.theta, f.nu);
    } else if (f.system == "one") {
        r.system = SpinSystem::One;
        r.psi = one_state({f.theta_alpha, f.theta_beta, f.phi_x, f.phi_y, f.phi_z});
        r.params = {{"theta_alpha", f.theta_alpha},
                    {"theta_beta", f.theta_beta},
                    {"phi_x", f.phi_x},
                    {"phi_y", f.phi_y},
                    {"phi_z", f.phi_z}};
    } else if (f.system == "two-fermion") {
        r.system = SpinSystem::TwoFermion;
        if (!f.coeffs.empty()) {
            if (!f.family.empty()) throw Error("--family and --coeffs are mutually exclusive");
            std::array<Complex, 4> c;
            json jc = json::array();
            for (std::size_t i = 0; i < 4; ++i) {
                c[i] = parse_complex(f.coeffs[i]);
                jc.push_back({c[i].real(), c[i].imag()});
            }
            r.psi = two_fermion_state(c);
            r.params = {{"coeffs", jc}};
        } else if (f.family == "xi" || f.family == "chi") {
            const EntangledParams p{f.theta_ab, f.alpha};
            r.psi = f.family == "xi" ? xi_state(p) : chi_state(p);
            r.params = {{"family", f.family}, {"theta_ab", f.theta_ab}, {"alpha", f.alpha}};
            r.closed_form =
                f.family == "xi" ? closed_form_xi(f.theta_ab) : closed_form_chi(f.theta_ab);
        } else {
            throw Error("two-fermion needs --family xi|chi or --coeffs");
        }
    } else {
        throw Error("unknown --system '" + f.system + "' (half | one | two-fermion)");
    }
    return r;
}

json report_fields(const EntropyReport& rep) {
    json j;
    j["px"] = rep.px.probs;
    j["py"] = rep.py.probs;
    j["pz"] = rep.pz.probs;
    j["s_x"] = rep.s_x;
    j["s_y"] = rep.s_y;
    j["s_z"] = rep.s_z;
    j["total"] = rep.total;
    return j;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// --- verify ---------------------------------------------------------------

int cmd_verify(const CommonFlags& flags, bool inject_fault, std::ostream& fallback) {
    const std::vector<CheckResult> checks = run_verification({inject_fault});
    const bool ok = all_pass(checks);

    OutputTarget target(flags, fallback);
    std::ostream& out = target.stream();

    if (flags.json_mode) {
        json j;
        j["checks"] = json::array();
        for (const CheckResult& c : checks) {
            j["checks"].push_back({{"name", c.name},
                                   {"residual", c.residual},
                                   {"tolerance", c.tolerance},
                                   {"pass", c.pass}});
        }
        j["all_pass"] = ok;
        emit_json(out, j);
    } else if (!flags.quiet) {
        std::size_t width = 0;
        for (const CheckResult& c : checks) width = std::max(width, c.name.size());
        for (const CheckResult& c : checks) {
            out << std::left << std::setw(static_cast<int>(width) + 2) << c.name
                << (c.pass ? "PASS" : "FAIL") << "  residual " << format_double(c.residual)
                << "  tol " << format_double(c.tolerance) << '\n';
        }
        out << (ok ? "all checks passed" : "CHECKS FAILED") << '\n';
    }
    target.finish();
    return ok ? kExitOk : kExitVerifyFail;
}

// --- entropy ----------------------------------------------------------------

int cmd_entropy(const CommonFlags& flags, const StateFlags& state, std::ostream& fallback) {
    if (flags.csv_mode) throw Error("entropy emits JSON only");
    const ResolvedState r = resolve_state(state);
    const EntropyReport rep = spin_entropy(r.psi, build_all_bases(build_operators(r.system)));

    json j;
    j["system"] = system_name(r.system);
    j["params"] = r.params;
    j.update(report_fields(rep));
    if (r.closed_form) {
        j["closed_form"] = *r.closed_form;
        j["closed_form_diff"] = rep.total - *r.closed_form;
    }

    OutputTarget target(flags, fallback);
    emit_json(target.stream(), j);
    target.finish();
    return kExitOk;
}

// --- bell -------------------------------------------------------------------

int cmd_bell(const CommonFlags& flags, std::ostream& fallback) {
    if (flags.json_mode && flags.csv_mode) throw Error("--json and --csv are exclusive");
    const auto bases = build_all_bases(build_operators(SpinSystem::TwoFermion));

    // Each Bell state sits on one of the entangled families, so each row has
    // a closed-form anchor to compare against the direct value.
    const struct {
        Bell which;
        double anchor;
    } rows[] = {{Bell::PsiPlus, closed_form_xi(3.0 * kPi / 4.0)},
                {Bell::PsiMinus, closed_form_xi(kPi / 4.0)},
                {Bell::PhiPlus, closed_form_chi(3.0 * kPi / 4.0)},
                {Bell::PhiMinus, closed_form_chi(kPi / 4.0)}};
    const char* note =
        "phi_plus/phi_minus match the chi closed form and direct evaluation (both 2 ln 2)";

    OutputTarget target(flags, fallback);
    std::ostream& out = target.stream();

    if (flags.json_mode) {
        json j;
        j["states"] = json::array();
        for (const auto& row : rows) {
            const CVector psi = bell_state(row.which);
            j["states"].push_back({{"name", bell_name(row.which)},
                                   {"spin_entropy", spin_entropy(psi, bases).total},
                                   {"closed_form", row.anchor},
                                   {"von_neumann", von_neumann_traced(psi)}});
        }
        j["note"] = note;
        emit_json(out, j);
    } else if (flags.csv_mode) {
        out << "state,spin_entropy,closed_form,von_neumann\n";
        for (const auto& row : rows) {
            const CVector psi = bell_state(row.which);
            out << bell_name(row.which) << ','
                << format_double(spin_entropy(psi, bases).total) << ','
                << format_double(row.anchor) << ',' << format_double(von_neumann_traced(psi))
                << '\n';
        }
    } else {
        out << std::left << std::setw(12) << "state" << std::setw(24) << "spin_entropy"
            << std::setw(24) << "closed_form" << "von_neumann" << '\n';
        for (const auto& row : rows) {
            const CVector psi = bell_state(row.which);
            out << std::left << std::setw(12) << bell_name(row.which) << std::setw(24)
                << format_double(spin_entropy(psi, bases).total) << std::setw(24)
                << format_double(row.anchor) << format_double(von_neumann_traced(psi)) << '\n';
        }
        if (!flags.quiet) out << "note: " << note << '\n';
    }
    target.finish();
    return kExitOk;
}

// --- sweep --------------------------------------------------------------

struct SweepFlags {
    std::string kind;
    int resolution = 0;
    std::string preset = "a";
    std::optional<double> phi_x;
    std::optional<double> phi_z;
};

struct SweepData {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, double>> meta;  // fixed parameters, for --json
};

// Inclusive linspace with bit-exact endpoints.
double linspace_point(double lo, double hi, int i, int n) {
    if (i == 0) return lo;
    if (i == n - 1) return hi;
    return lo + (hi - lo) * i / (n - 1);
}

SweepData run_sweep(const SweepFlags& f) {
    if (f.resolution < 2) throw Error("--resolution must be >= 2");
    if (f.kind != "fig2" && (f.phi_x || f.phi_z)) {
        throw Error("--phi-x/--phi-z only apply to --kind fig2");
    }
    const int n = f.resolution;
    SweepData data;

    if (f.kind == "fig1") {
        const auto bases = build_all_bases(build_operators(SpinSystem::Half));
        data.columns = {"theta_alpha", "nu", "entropy"};
        for (int i = 0; i < n; ++i) {
            const double theta = linspace_point(0.0, kPi / 2.0, i, n);
            for (int j = 0; j < n; ++j) {
                const double nu = kPi * j / n;  // [0, pi), right endpoint open
                const double s = spin_entropy(half_state({theta, nu, 0.0}), bases).total;
                data.rows.push_back({theta, nu, s});
            }
        }
    } else if (f.kind == "fig2") {
        double phi_x = 0.0, phi_z = kPi / 2.0;
        if (f.preset == "a") {
            phi_x = 0.0;
            phi_z = kPi / 2.0;
        } else if (f.preset == "b") {
            phi_x = kPi / 3.0;
            phi_z = kPi / 2.0;
        } else if (f.preset == "c") {
            phi_x = kPi / 4.0;
            phi_z = kPi / 4.0;
        } else {
            throw Error("--preset must be a, b or c");
        }
        if (f.phi_x) phi_x = *f.phi_x;
        if (f.phi_z) phi_z = *f.phi_z;
        data.meta = {{"phi_x", phi_x}, {"phi_z", phi_z}};

        const auto bases = build_all_bases(build_operators(SpinSystem::One));
        data.columns = {"theta_alpha", "theta_beta", "entropy"};
        for (int i = 0; i < n; ++i) {
            const double ta = linspace_point(0.0, kPi / 2.0, i, n);
            for (int j = 0; j < n; ++j) {
                const double tb = linspace_point(0.0, kPi / 2.0, j, n);
                const double s =
                    spin_entropy(one_state({ta, tb, phi_x, 0.0, phi_z}), bases).total;
                data.rows.push_back({ta, tb, s});
            }
        }
    } else if (f.kind == "fig3") {
        const auto bases = build_all_bases(build_operators(SpinSystem::TwoFermion));
        data.columns = {"theta_ab", "s_xi", "s_chi", "s_von_neumann"};
        for (int j = 1; j <= n; ++j) {
            const double theta = 2.0 * kPi * j / (n + 1);  // interior of (0, 2pi)
            const CVector xi = xi_state({theta, 0.0});
            data.rows.push_back({theta, spin_entropy(xi, bases).total,
                                 spin_entropy(chi_state({theta, 0.0}), bases).total,
                                 von_neumann_traced(xi)});
        }
    } else {
        throw Error("--kind must be fig1, fig2 or fig3");
    }
    return data;
}

int cmd_sweep(const CommonFlags& flags, const SweepFlags& f, std::ostream& fallback) {
    if (flags.json_mode && flags.csv_mode) throw Error("--json and --csv are exclusive");
    const SweepData data = run_sweep(f);

    OutputTarget target(flags, fallback);
    std::ostream& out = target.stream();

    if (flags.json_mode) {
        json j;
        j["kind"] = f.kind;
        j["resolution"] = f.resolution;
        for (const auto& [key, value] : data.meta) j[key] = value;
        j["columns"] = data.columns;
        j["rows"] = data.rows;
        emit_json(out, j);
    } else {
        CsvWriter csv(out, data.columns);
        for (const auto& row : data.rows) csv.row(row);
    }
    target.finish();
    return kExitOk;
}

// --- minimize -----------------------------------------------------------

struct MinimizeFlags {
    std::string family;
    int grid = 0;  // 0 = per-family default
    int starts = 0;
    double tol = 1e-8;
};

int cmd_minimize(const CommonFlags& flags, const MinimizeFlags& f, std::ostream& fallback) {
    if (flags.csv_mode) throw Error("minimize emits JSON only");

    Family family;
    int grid, starts;
    if (f.family == "half") {
        family = Family::Half;
        grid = 25;
        starts = 10;
    } else if (f.family == "one") {
        family = Family::One;
        grid = 9;
        starts = 20;
    } else if (f.family == "xi") {
        family = Family::Xi;
        grid = 101;
        starts = 5;
    } else if (f.family == "chi") {
        family = Family::Chi;
        grid = 101;
        starts = 5;
    } else {
        throw Error("--family must be half, one, xi or chi");
    }
    if (f.grid > 0) grid = f.grid;
    if (f.starts > 0) starts = f.starts;

    const std::vector<OptResult> results = find_extrema(family, grid, starts, f.tol);

    json j;
    j["family"] = f.family;
    j["grid_per_dim"] = grid;
    j["refine_starts"] = starts;
    j["tol"] = f.tol;
    j["results"] = json::array();
    for (const OptResult& r : results) {
        j["results"].push_back({{"params", r.params},
                                {"value", r.value},
                                {"converged", r.converged},
                                {"iterations", r.iterations}});
    }

    OutputTarget target(flags, fallback);
    emit_json(target.stream(), j);
    target.finish();
    return kExitOk;
}

// --- sample ---------------------------------------------------------------

int cmd_sample(const CommonFlags& flags, const StateFlags& state, std::uint64_t shots,
               std::uint64_t seed, std::ostream& fallback) {
    if (flags.csv_mode) throw Error("sample emits JSON only");
    if (shots < 1) throw Error("--shots must be >= 1");

    const ResolvedState r = resolve_state(state);
    const EntropyReport rep =
        sample_estimate(r.psi, build_all_bases(build_operators(r.system)), shots, seed);

    json j;
    j["system"] = system_name(r.system);
    j["params"] = r.params;
    j["shots"] = shots;
    j["seed"] = seed;
    j.update(report_fields(rep));

    OutputTarget target(flags, fallback);
    emit_json(target.stream(), j);
    target.finish();
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"spin phase-space entropy toolkit"};
    app.require_subcommand(1);

    CommonFlags verify_flags, entropy_flags, bell_flags, sweep_flags, minimize_flags,
        sample_flags;

    CLI::App* verify = app.add_subcommand("verify", "run the full cross-check suite");
    add_common(verify, verify_flags);
    bool inject_fault = false;
    verify->add_flag("--inject-fault", inject_fault, "negative-control self test")
        ->group("");  // hidden

    CLI::App* entropy = app.add_subcommand("entropy", "entropy report for one state");
    add_common(entropy, entropy_flags);
    StateFlags entropy_state;
    add_state_flags(entropy, entropy_state);

    CLI::App* bell = app.add_subcommand("bell", "Bell-state entropy table");
    add_common(bell, bell_flags);

    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweeps (CSV by default)");
    add_common(sweep, sweep_flags);
    SweepFlags sweep_opts;
    sweep->add_option("--kind", sweep_opts.kind, "fig1 | fig2 | fig3")->required();
    sweep->add_option("--resolution", sweep_opts.resolution, "points per axis")->required();
    sweep->add_option("--preset", sweep_opts.preset, "fig2 phase preset: a | b | c");
    double sweep_phi_x = 0.0, sweep_phi_z = 0.0;
    CLI::Option* opt_px = sweep->add_option("--phi-x", sweep_phi_x, "fig2: override phi_x");
    CLI::Option* opt_pz = sweep->add_option("--phi-z", sweep_phi_z, "fig2: override phi_z");

    CLI::App* minimize = app.add_subcommand("minimize", "multistart entropy minimization");
    add_common(minimize, minimize_flags);
    MinimizeFlags minimize_opts;
    minimize->add_option("--family", minimize_opts.family, "half | one | xi | chi")->required();
    minimize->add_option("--grid", minimize_opts.grid, "grid points per dimension");
    minimize->add_option("--starts", minimize_opts.starts, "refinement starts");
    minimize->add_option("--tol", minimize_opts.tol, "refinement tolerance");

    CLI::App* sample = app.add_subcommand("sample", "seeded simulated-measurement estimate");
    add_common(sample, sample_flags);
    StateFlags sample_state;
    add_state_flags(sample, sample_state);
    std::uint64_t shots = 0, seed = 1;
    sample->add_option("--shots", shots, "measurements per axis")->required();
    sample->add_option("--seed", seed, "generator seed");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("spinent");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(verify_flags, inject_fault, out);
        if (entropy->parsed()) return cmd_entropy(entropy_flags, entropy_state, out);
        if (bell->parsed()) return cmd_bell(bell_flags, out);
        if (sweep->parsed()) {
            if (opt_px->count() > 0) sweep_opts.phi_x = sweep_phi_x;
            if (opt_pz->count() > 0) sweep_opts.phi_z = sweep_phi_z;
            return cmd_sweep(sweep_flags, sweep_opts, out);
        }
        if (minimize->parsed()) return cmd_minimize(minimize_flags, minimize_opts, out);
        if (sample->parsed()) return cmd_sample(sample_flags, sample_state, shots, seed, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace spinent
