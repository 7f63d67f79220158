// Command-line front end: parameter sweeps, identity verification and CSV
// data for redrawing the duality/erasure figures.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mzerase/cavity.hpp"
#include "mzerase/discrimination.hpp"
#include "mzerase/games.hpp"
#include "mzerase/interferometer.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Angles are accepted as raw radians ("1.5708") or multiples of pi
// ("0.5pi", "pi", "-pi", "3pi/2").
double parse_angle(const std::string& text) {
    const auto bad = [&text]() -> UsageError {
        return UsageError("cannot parse angle '" + text + "'");
    };
    const std::size_t pi_pos = text.find("pi");
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        if (pi_pos == std::string::npos) {
            value = std::stod(text, &consumed);
            if (consumed != text.size()) throw bad();
            return value;
        }
        double coefficient = 1.0;
        const std::string head = text.substr(0, pi_pos);
        if (head == "-") {
            coefficient = -1.0;
        } else if (!head.empty() && head != "+") {
            coefficient = std::stod(head, &consumed);
            if (consumed != head.size()) throw bad();
        }
        double divisor = 1.0;
        const std::string tail = text.substr(pi_pos + 2);
        if (!tail.empty()) {
            if (tail[0] != '/') throw bad();
            divisor = std::stod(tail.substr(1), &consumed);
            if (consumed != tail.size() - 1 || divisor == 0.0) throw bad();
        }
        return coefficient * kPi / divisor;
    } catch (const std::invalid_argument&) {
        throw bad();
    } catch (const std::out_of_range&) {
        throw bad();
    }
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt(const std::optional<double>& v) {
    return v ? fmt(*v) : "nan";
}

class CsvSink {
public:
    explicit CsvSink(const std::string& path) {
        if (path != "-") {
            file_.open(path);
            if (!file_) throw UsageError("cannot open output file '" + path + "'");
        }
    }

    void row(const std::vector<std::string>& cells) {
        std::ostream& os = file_.is_open() ? file_ : std::cout;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ',';
            os << cells[i];
        }
        os << '\n';
    }

private:
    std::ofstream file_;
};

struct SweepSpec {
    double start;
    double stop;
    std::size_t points;

    SweepSpec(const std::string& start_text, const std::string& stop_text, std::size_t n)
        : start(parse_angle(start_text)), stop(parse_angle(stop_text)), points(n) {
        if (points < 2) throw UsageError("sweep needs at least 2 points");
        if (!(start < stop)) throw UsageError("sweep start must be below stop");
    }

    double at(std::size_t i) const {
        return start + (stop - start) * static_cast<double>(i) / static_cast<double>(points - 1);
    }
};

int cmd_duality(const SweepSpec& sweep, double beta, double gamma, const std::string& out) {
    CsvSink csv(out);
    csv.row({"alpha", "V", "D", "D2_plus_V2", "H_path_given_Ms", "I_path_Ms"});
    for (std::size_t i = 0; i < sweep.points; ++i) {
        const double alpha = sweep.at(i);
        const mzerase::InteractionParams p{alpha, beta, gamma};
        const double v = mzerase::visibility(p);
        const auto path = mzerase::play_path_game(p);
        const double d = path.distinguishability;
        csv.row({fmt(alpha), fmt(v), fmt(d), fmt(d * d + v * v), fmt(path.h_path_given_meas),
                 fmt(path.which_path_information)});
    }
    std::cerr << "duality sweep: " << sweep.points << " alpha points in [" << fmt(sweep.start)
              << ", " << fmt(sweep.stop) << "]\n";
    return kExitOk;
}

int cmd_figure3(const SweepSpec& sweep, double beta, double gamma, double tolerance,
                const std::string& out) {
    CsvSink csv(out);
    csv.row({"alpha", "phi0_tilde", "H_phase_given_D", "min_H_phase_given_D_Me",
             "H_path_given_Ms", "chi_star", "identity_residual"});
    double worst = 0.0;
    for (std::size_t i = 0; i < sweep.points; ++i) {
        const double alpha = sweep.at(i);
        const auto report = mzerase::run_games({alpha, beta, gamma});
        const double residual =
            std::abs(report.h_phase_given_detector_eraser - report.h_path_given_meas);
        worst = std::max(worst, residual);
        csv.row({fmt(alpha), fmt(report.phi0_tilde), fmt(report.h_phase_given_detector),
                 fmt(report.h_phase_given_detector_eraser), fmt(report.h_path_given_meas),
                 fmt(report.chi_star), fmt(residual)});
    }
    std::cerr << "figure3 sweep: " << sweep.points << " alpha points, worst identity residual "
              << fmt(worst) << "\n";
    if (worst > tolerance) {
        std::cerr << "identity verification FAILED (tolerance " << fmt(tolerance) << ")\n";
        return kExitIdentityFailure;
    }
    return kExitOk;
}

int cmd_average_e(double alpha, double beta, double gamma, double chi, std::size_t panels,
                  const std::string& out) {
    CsvSink csv(out);
    const mzerase::InteractionParams p{alpha, beta, gamma};
    const auto avg = mzerase::average_erasure_information(p, chi, panels);
    // the path information rides along so E_bar can be tabulated against it
    const double info = mzerase::play_path_game(p).which_path_information;
    csv.row({"alpha", "beta", "gamma", "chi", "panels", "E_bar", "E_bar_refined", "converged",
             "I_path_Ms"});
    csv.row({fmt(alpha), fmt(beta), fmt(gamma), fmt(chi), std::to_string(panels), fmt(avg.value),
             fmt(avg.refined), avg.converged ? "1" : "0", fmt(info)});
    std::cerr << "average erasure information " << fmt(avg.value)
              << (avg.converged ? " (converged)" : " (NOT converged)") << ", path information "
              << fmt(info) << "\n";
    return kExitOk;
}

// phi0/chi overrides skip the corresponding optimization: the identity is
// then probed at a hand-picked game point instead of the optimum.
int cmd_erase(double alpha, double beta, double gamma, const std::optional<double>& phi0_pin,
              const std::optional<double>& chi_pin, double tolerance, const std::string& out) {
    CsvSink csv(out);
    const mzerase::InteractionParams p{alpha, beta, gamma};
    const double phi0 = phi0_pin ? *phi0_pin : mzerase::find_phi0_tilde(p);
    const double h_detector =
        mzerase::play_phase_game({p, phi0, 0.0}).h_phase_given_detector;
    double chi = 0.0, h_eraser = 0.0;
    if (chi_pin) {
        chi = *chi_pin;
        h_eraser = mzerase::play_phase_game({p, phi0, chi}).h_phase_given_detector_eraser;
    } else {
        const auto best = mzerase::optimize_chi(p, phi0);
        chi = best.chi;
        h_eraser = best.entropy;
    }
    const double lhs = h_detector - h_eraser;
    const double rhs = mzerase::play_path_game(p).which_path_information;
    const double residual = std::abs(lhs - rhs);
    const bool pass = residual <= tolerance;

    csv.row({"alpha", "beta", "gamma", "phi0", "chi", "lhs", "rhs", "residual", "pass"});
    csv.row({fmt(alpha), fmt(beta), fmt(gamma), fmt(phi0), fmt(chi), fmt(lhs), fmt(rhs),
             fmt(residual), pass ? "1" : "0"});
    std::cerr << (pass ? "erasure identity holds" : "erasure identity FAILED") << ": |"
              << fmt(lhs) << " - " << fmt(rhs) << "| = " << fmt(residual);
    if (phi0_pin || chi_pin) std::cerr << " (at a pinned game point)";
    std::cerr << "\n";
    return pass ? kExitOk : kExitIdentityFailure;
}

int cmd_michelson(const std::optional<double>& eta_flag,
                  const std::vector<double>& cavity_flags,  // f0, f_uncoupled, f_coupled, kappa
                  bool cavity_given, double tolerance, const std::string& out) {
    if (eta_flag.has_value() == cavity_given) {
        throw UsageError("give exactly one of --eta or the cavity parameter set");
    }
    double eta = 0.0;
    if (eta_flag) {
        eta = *eta_flag;
    } else {
        const mzerase::CavityParams cp{cavity_flags[0], cavity_flags[1], cavity_flags[2],
                                       cavity_flags[3]};
        eta = std::abs(mzerase::conditional_phase_eta(cp));
        std::cerr << "cavity-derived eta = " << fmt(eta)
                  << (cp.strong_detuning() ? " (strong-detuning regime)"
                                           : " (coupled branch NOT strongly detuned)")
                  << "\n";
    }

    const auto r = mzerase::michelson_report(eta, tolerance);
    CsvSink csv(out);
    csv.row({"eta", "alpha", "beta", "gamma", "phi0_tilde", "chi_star", "eraser_bloch_angle",
             "V", "V_sub_plus", "V_sub_minus", "identity_residual", "pass"});
    csv.row({fmt(r.eta), fmt(r.params.alpha), fmt(r.params.beta), fmt(r.params.gamma),
             fmt(r.games.phi0_tilde), fmt(r.games.chi_star), fmt(r.eraser_axis_angle),
             fmt(r.fringe_visibility), fmt(r.subensemble_plus), fmt(r.subensemble_minus),
             fmt(r.identity_residual), r.identity_pass ? "1" : "0"});

    std::cerr << "michelson eta=" << fmt(r.eta) << ": mapped (alpha, beta, gamma) = ("
              << fmt(r.params.alpha) << ", " << fmt(r.params.beta) << ", " << fmt(r.params.gamma)
              << ")\n"
              << "  phi0_tilde = " << fmt(r.games.phi0_tilde)
              << ", chi* = " << fmt(r.games.chi_star)
              << ", eraser-to-energy-basis Bloch angle = " << fmt(r.eraser_axis_angle) << "\n"
              << "  V = " << fmt(r.fringe_visibility) << ", subensemble visibilities = ("
              << fmt(r.subensemble_plus) << ", " << fmt(r.subensemble_minus) << ")\n"
              << "  identity residual = " << fmt(r.identity_residual)
              << (r.identity_pass ? " (pass)" : " (FAIL)") << "\n";
    return r.identity_pass ? kExitOk : kExitIdentityFailure;
}

int cmd_qudit_demo(std::size_t dim, std::uint64_t seed, std::size_t pairs, std::size_t samples,
                   const std::string& out) {
    if (dim < 2) throw UsageError("--dim must be at least 2");
    if (pairs < 1) throw UsageError("--pairs must be at least 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    auto random_state = [&]() {
        std::vector<mzerase::cplx> amps(dim);
        for (auto& a : amps) a = {gauss(rng), gauss(rng)};
        return mzerase::PureState::normalized(std::move(amps));
    };

    CsvSink csv(out);
    csv.row({"dim", "seed", "pair", "overlap", "H_sym", "H_oracle", "oracle_gain",
             "in_plane_mass_phi1", "in_plane_mass_phi2"});
    for (std::size_t i = 0; i < pairs; ++i) {
        const mzerase::DiscriminationProblem prob{random_state(), random_state()};
        const auto sym = mzerase::symmetric_basis(prob);
        const double h_sym = mzerase::path_conditional_entropy(prob, sym);
        const auto oracle = mzerase::brute_force_optimal_basis(prob, samples, seed + i);

        double mass1 = 0.0, mass2 = 0.0;
        for (std::size_t m = 0; m < 2; ++m) {
            mass1 += std::norm(mzerase::inner_product(sym.vector(m), prob.phi1()));
            mass2 += std::norm(mzerase::inner_product(sym.vector(m), prob.phi2()));
        }
        csv.row({std::to_string(dim), std::to_string(seed), std::to_string(i),
                 fmt(std::abs(mzerase::inner_product(prob.phi1(), prob.phi2()))), fmt(h_sym),
                 fmt(oracle.conditional_entropy), fmt(h_sym - oracle.conditional_entropy),
                 fmt(mass1), fmt(mass2)});
    }
    std::cerr << "qudit demo: " << pairs << " random d=" << dim << " pairs, " << samples
              << " sampled bases each\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric two-path interferometer with a qudit ancilla: "
                 "guessing games, quantum erasure and entropy identities"};
    app.require_subcommand(1);

    // shared option storage; angle-valued flags stay strings until parsed
    std::string start = "0", stop = "pi";
    std::size_t points = 33;
    std::string alpha = "0", beta = "1.5pi", gamma = "0", chi = "0", phi0 = "0", eta;
    double tolerance = 1e-6;
    std::size_t panels = 2048;
    std::string out = "-";
    std::optional<double> f0, f_uncoupled, f_coupled, kappa;
    std::size_t dim = 5, pairs = 3, samples = 10000;
    std::uint64_t seed = 1;

    auto add_out = [&out](CLI::App* cmd) {
        cmd->add_option("--out", out, "CSV output path, '-' for stdout");
    };

    CLI::App* duality = app.add_subcommand("duality", "sweep alpha: V, D and path entropies");
    duality->add_option("--start", start, "sweep start (radians or '<x>pi')");
    duality->add_option("--stop", stop, "sweep stop");
    duality->add_option("--points", points, "grid points (>= 2)");
    duality->add_option("--beta", beta, "interaction azimuth");
    duality->add_option("--gamma", gamma, "lower-arm phase offset");
    add_out(duality);

    CLI::App* figure3 = app.add_subcommand(
        "figure3", "sweep alpha: hardest-offset phase entropies vs path entropy");
    figure3->add_option("--start", start);
    figure3->add_option("--stop", stop);
    figure3->add_option("--points", points);
    figure3->add_option("--beta", beta);
    figure3->add_option("--gamma", gamma);
    figure3->add_option("--tolerance", tolerance, "identity residual bound");
    add_out(figure3);

    CLI::App* average_e = app.add_subcommand(
        "average-e", "phase-offset average of the erasure information at one chi");
    average_e->add_option("--alpha", alpha)->required();
    average_e->add_option("--beta", beta);
    average_e->add_option("--gamma", gamma);
    average_e->add_option("--chi", chi);
    average_e->add_option("--panels", panels, "Simpson panels (even, >= 64)");
    add_out(average_e);

    CLI::App* erase = app.add_subcommand("erase", "verify the erasure identity at one point");
    erase->add_option("--alpha", alpha)->required();
    erase->add_option("--beta", beta);
    erase->add_option("--gamma", gamma);
    erase->add_option("--phi0", phi0, "pin the phase offset instead of optimizing");
    erase->add_option("--chi", chi, "pin the erasing angle instead of optimizing");
    erase->add_option("--tolerance", tolerance);
    add_out(erase);

    CLI::App* michelson = app.add_subcommand(
        "michelson", "map the atom-cavity Michelson onto the canonical games");
    michelson->add_option("--eta", eta, "conditional phase dial in (0, pi]");
    michelson->add_option("--f0", f0, "photon frequency [Hz]");
    michelson->add_option("--f-uncoupled", f_uncoupled, "bare cavity resonance [Hz]");
    michelson->add_option("--f-coupled", f_coupled, "dressed-mode resonance [Hz]");
    michelson->add_option("--kappa", kappa, "cavity decay rate [rad/s]");
    michelson->add_option("--tolerance", tolerance);
    add_out(michelson);

    CLI::App* qudit = app.add_subcommand(
        "qudit-demo", "d-level discrimination: symmetric basis vs sampling oracle");
    qudit->add_option("--dim", dim, "ancilla dimension (>= 2)");
    qudit->add_option("--seed", seed, "RNG seed");
    qudit->add_option("--pairs", pairs, "number of random pairs");
    qudit->add_option("--samples", samples, "sampled bases per pair (>= 100)");
    add_out(qudit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (duality->parsed()) {
            return cmd_duality({start, stop, points}, parse_angle(beta), parse_angle(gamma), out);
        }
        if (figure3->parsed()) {
            return cmd_figure3({start, stop, points}, parse_angle(beta), parse_angle(gamma),
                               tolerance, out);
        }
        if (average_e->parsed()) {
            return cmd_average_e(parse_angle(alpha), parse_angle(beta), parse_angle(gamma),
                                 parse_angle(chi), panels, out);
        }
        if (erase->parsed()) {
            std::optional<double> phi0_pin, chi_pin;
            if (erase->count("--phi0") > 0) phi0_pin = parse_angle(phi0);
            if (erase->count("--chi") > 0) chi_pin = parse_angle(chi);
            return cmd_erase(parse_angle(alpha), parse_angle(beta), parse_angle(gamma), phi0_pin,
                             chi_pin, tolerance, out);
        }
        if (michelson->parsed()) {
            const bool cavity_given =
                f0.has_value() || f_uncoupled.has_value() || f_coupled.has_value() ||
                kappa.has_value();
            if (cavity_given &&
                !(f0.has_value() && f_uncoupled.has_value() && f_coupled.has_value() &&
                  kappa.has_value())) {
                throw UsageError("cavity mode needs all of --f0, --f-uncoupled, --f-coupled, "
                                 "--kappa");
            }
            std::optional<double> eta_value;
            if (!eta.empty()) eta_value = parse_angle(eta);
            std::vector<double> cavity;
            if (cavity_given) cavity = {*f0, *f_uncoupled, *f_coupled, *kappa};
            return cmd_michelson(eta_value, cavity, cavity_given, tolerance, out);
        }
        if (qudit->parsed()) {
            return cmd_qudit_demo(dim, seed, pairs, samples, out);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIdentityFailure;
    }
    return kExitUsage;
}
