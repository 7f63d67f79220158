#include "mzerase/games.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mzerase/numeric.hpp"

namespace mzerase {

namespace {

constexpr double kPi = std::numbers::pi;

double entropy_bits(std::span<const double> probs) {
    double h = 0.0;
    for (double p : probs) {
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

DiscriminationProblem arm_problem(const InteractionParams& params) {
    return {PureState::basis_state(2, 0), lower_arm_ancilla(params.alpha, params.beta)};
}

// Dense joint table p(hypothesis, detector, eraser outcome) for one game.
struct PhaseGameTable {
    std::vector<double> p;  // index ((hyp * 2) + det) * d + m
    std::size_t d;

    double at(std::size_t hyp, std::size_t det, std::size_t m) const {
        return p[(hyp * 2 + det) * d + m];
    }

    double h_phase_given_detector() const {
        std::vector<double> hyp_det(4, 0.0), det(2, 0.0);
        for (std::size_t hyp = 0; hyp < 2; ++hyp) {
            for (std::size_t dd = 0; dd < 2; ++dd) {
                for (std::size_t m = 0; m < d; ++m) {
                    hyp_det[hyp * 2 + dd] += at(hyp, dd, m);
                    det[dd] += at(hyp, dd, m);
                }
            }
        }
        return entropy_bits(hyp_det) - entropy_bits(det);
    }

    double h_phase_given_detector_eraser() const {
        std::vector<double> det_m(2 * d, 0.0);
        for (std::size_t hyp = 0; hyp < 2; ++hyp) {
            for (std::size_t dd = 0; dd < 2; ++dd) {
                for (std::size_t m = 0; m < d; ++m) {
                    det_m[dd * d + m] += at(hyp, dd, m);
                }
            }
        }
        return entropy_bits(p) - entropy_bits(det_m);
    }
};

PhaseGameTable phase_game_table(const InteractionParams& params, double phi0,
                                const ProjectiveBasis& eraser) {
    const std::size_t d = eraser.dim();
    PhaseGameTable table{std::vector<double>(4 * d, 0.0), d};
    for (std::size_t hyp = 0; hyp < 2; ++hyp) {
        const double phi = phi0 + static_cast<double>(hyp) * kPi;
        const JointState at_detectors = apply_bs2(build_joint_state(params.with_phase(phi)));
        for (std::size_t det = 0; det < 2; ++det) {
            const auto row = at_detectors.row(det);
            for (std::size_t m = 0; m < d; ++m) {
                const PureState& vec = eraser.vector(m);
                cplx amp{0.0, 0.0};
                for (std::size_t k = 0; k < row.size(); ++k) amp += std::conj(vec[k]) * row[k];
                table.p[(hyp * 2 + det) * d + m] = 0.5 * std::norm(amp);
            }
        }
    }
    return table;
}

// detector-only entropy; no eraser needed
double h_phase_given_detector_only(const InteractionParams& params, double phi0) {
    std::vector<double> hyp_det(4, 0.0), det(2, 0.0);
    for (std::size_t hyp = 0; hyp < 2; ++hyp) {
        const double phi = phi0 + static_cast<double>(hyp) * kPi;
        const OutcomeDistribution dist = detector_distribution(params.with_phase(phi));
        for (std::size_t dd = 0; dd < 2; ++dd) {
            hyp_det[hyp * 2 + dd] = 0.5 * dist.probability(dd);
            det[dd] += 0.5 * dist.probability(dd);
        }
    }
    return entropy_bits(hyp_det) - entropy_bits(det);
}

void check_report(const GameReport& r) {
    auto in_unit = [](double v) { return v >= -1e-12 && v <= 1.0 + 1e-12; };
    if (!in_unit(r.h_phase_given_detector) || !in_unit(r.h_phase_given_detector_eraser) ||
        !in_unit(r.h_path_given_meas) || !in_unit(r.which_path_information) ||
        r.erasure_information < -1e-12) {
        throw std::logic_error("game report violates its entropy bounds");
    }
}

}  // namespace

double shannon_entropy(const OutcomeDistribution& dist) {
    return entropy_bits(dist.probabilities());
}

double conditional_entropy(const JointDistribution& joint) {
    return shannon_entropy(joint.flattened()) - shannon_entropy(joint.marginal_b());
}

PathGameResult play_path_game(const InteractionParams& params) {
    const DiscriminationProblem prob = arm_problem(params);
    const ProjectiveBasis basis = symmetric_basis(prob);
    const double h = path_conditional_entropy(prob, basis);
    const double l = guess_success_probability(prob, basis);

    // blocking either arm leaves the detectors blind: check that the two
    // single-arm detector distributions coincide
    const std::vector<cplx> zero_row(2, cplx{0.0, 0.0});
    const PureState upper_anc = PureState::basis_state(2, 0);
    const std::vector<cplx> upper_amps(upper_anc.amplitudes().begin(),
                                       upper_anc.amplitudes().end());
    const PureState lower_anc = lower_arm_ancilla(params.alpha, params.beta);
    std::vector<cplx> lower_amps(lower_anc.amplitudes().begin(), lower_anc.amplitudes().end());
    for (cplx& a : lower_amps) a *= std::polar(1.0, params.phase_phi + params.gamma);

    const OutcomeDistribution upper_blocked_lower_survives =
        detector_distribution(apply_bs2(JointState(zero_row, lower_amps)));
    const OutcomeDistribution lower_blocked_upper_survives =
        detector_distribution(apply_bs2(JointState(upper_amps, zero_row)));
    bool uninformative = true;
    for (std::size_t i = 0; i < 2; ++i) {
        if (std::abs(upper_blocked_lower_survives.probability(i) -
                     lower_blocked_upper_survives.probability(i)) > 1e-12) {
            uninformative = false;
        }
    }

    return {h, 1.0 - h, 2.0 * l - 1.0, uninformative};
}

PhaseGameResult play_phase_game(const PhaseGameConfig& cfg) {
    const ErasingBasis eraser = erasing_basis(arm_problem(cfg.params), cfg.chi);
    const PhaseGameTable table = phase_game_table(cfg.params, cfg.phi0, eraser.vectors);
    const double h_d = table.h_phase_given_detector();
    const double h_dm = table.h_phase_given_detector_eraser();
    return {h_d, h_dm, h_d - h_dm};
}

JointDistribution phase_game_distribution(const PhaseGameConfig& cfg) {
    const ErasingBasis eraser = erasing_basis(arm_problem(cfg.params), cfg.chi);
    const PhaseGameTable table = phase_game_table(cfg.params, cfg.phi0, eraser.vectors);

    std::vector<std::string> b_labels;
    for (std::size_t det = 0; det < 2; ++det) {
        for (std::size_t m = 0; m < table.d; ++m) {
            b_labels.push_back("D" + std::to_string(det + 1) + ":e" + std::to_string(m));
        }
    }
    return {{"phi0", "phi0+pi"}, std::move(b_labels), table.p};
}

double find_phi0_tilde(const InteractionParams& params) {
    const auto best = grid_golden_maximize(
        [&params](double phi0) { return h_phase_given_detector_only(params, phi0); }, 0.0, kPi,
        1024, 1e-10, /*periodic=*/true);
    return best.x;
}

ChiOptimum optimize_chi(const InteractionParams& params, double phi0) {
    const DiscriminationProblem prob = arm_problem(params);
    const auto best = grid_golden_minimize(
        [&](double chi) {
            return phase_game_table(params, phi0, erasing_basis(prob, chi).vectors)
                .h_phase_given_detector_eraser();
        },
        0.0, kPi, 512, 1e-10, /*periodic=*/true);
    return {best.x, best.value};
}

GameReport run_games(const InteractionParams& params) {
    const PathGameResult path = play_path_game(params);
    const double phi0_tilde = find_phi0_tilde(params);
    const double h_d = h_phase_given_detector_only(params, phi0_tilde);
    const ChiOptimum chi_star = optimize_chi(params, phi0_tilde);

    GameReport report{h_d,
                      chi_star.entropy,
                      h_d - chi_star.entropy,
                      path.h_path_given_meas,
                      path.which_path_information,
                      phi0_tilde,
                      chi_star.chi};
    check_report(report);
    return report;
}

ErasureIdentityReport verify_erasure_identity(const InteractionParams& params, double tolerance) {
    const GameReport games = run_games(params);
    const double lhs = games.erasure_information;
    const double rhs = games.which_path_information;
    const double residual = std::abs(lhs - rhs);
    return {games, lhs, rhs, residual, residual <= tolerance};
}

AverageEResult average_erasure_information(const InteractionParams& params, double chi,
                                           std::size_t panels) {
    if (panels < 64 || panels % 2 != 0) {
        throw std::invalid_argument("average needs an even panel count >= 64");
    }
    const ErasingBasis eraser = erasing_basis(arm_problem(params), chi);
    auto integrand = [&](double phi0) {
        const PhaseGameTable table = phase_game_table(params, phi0, eraser.vectors);
        return table.h_phase_given_detector() - table.h_phase_given_detector_eraser();
    };
    const double coarse = simpson(integrand, 0.0, kPi, panels) / kPi;
    const double fine = simpson(integrand, 0.0, kPi, 2 * panels) / kPi;
    return {coarse, fine, std::abs(coarse - fine) <= kAverageEConvergenceTol};
}

}  // namespace mzerase
