#include "mzerase/cavity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mzerase {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_pi(double angle) {
    double w = std::fmod(angle, 2.0 * kPi);
    if (w <= -kPi) w += 2.0 * kPi;
    if (w > kPi) w -= 2.0 * kPi;
    return w;
}

}  // namespace

CavityParams::CavityParams(double photon_frequency_hz_, double bare_resonance_hz_,
                           double dressed_resonance_hz_, double decay_rate_)
    : photon_frequency_hz(photon_frequency_hz_),
      bare_resonance_hz(bare_resonance_hz_),
      dressed_resonance_hz(dressed_resonance_hz_),
      decay_rate(decay_rate_) {
    if (decay_rate <= 0.0) {
        throw std::invalid_argument("cavity decay rate must be positive");
    }
}

double CavityParams::bare_detuning() const {
    return 2.0 * kPi * (bare_resonance_hz - photon_frequency_hz);
}

double CavityParams::dressed_detuning() const {
    return 2.0 * kPi * (dressed_resonance_hz - photon_frequency_hz);
}

cplx reflection_coefficient(double delta, double kappa) {
    if (kappa <= 0.0) {
        throw std::invalid_argument("cavity decay rate must be positive");
    }
    const cplx i_delta{0.0, delta};
    return (i_delta - kappa / 2.0) / (i_delta + kappa / 2.0);
}

double reflection_phase(double delta, double kappa) {
    return std::arg(reflection_coefficient(delta, kappa));
}

double conditional_phase_eta(const CavityParams& cp) {
    return wrap_pi(reflection_phase(cp.bare_detuning(), cp.decay_rate) -
                   reflection_phase(cp.dressed_detuning(), cp.decay_rate));
}

PureState reflected_atom_state(double eta) {
    // start in (|g1>+|g0>)/sqrt2; the bare branch g0 acquires e^{i eta}
    const cplx gain = std::polar(1.0, eta);
    return PureState::normalized({0.5 * (1.0 + gain), 0.5 * (1.0 - gain)});
}

ProjectiveBasis energy_basis() {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const PureState g0 = PureState::normalized({cplx{inv_sqrt2, 0.0}, cplx{-inv_sqrt2, 0.0}});
    const PureState g1 = PureState::normalized({cplx{inv_sqrt2, 0.0}, cplx{inv_sqrt2, 0.0}});
    return ProjectiveBasis({g0, g1});
}

InteractionParams michelson_to_canonical(double eta) {
    if (!(eta > 0.0) || eta > kPi + 1e-12) {
        throw std::invalid_argument("eta must lie in (0, pi]");
    }
    return {eta, 1.5 * kPi, eta / 2.0};
}

MichelsonSetup::MichelsonSetup(double eta_) : eta(eta_) {
    michelson_to_canonical(eta);  // range check
}

MichelsonReport michelson_report(double eta, double tolerance) {
    const InteractionParams params = michelson_to_canonical(eta);
    const double fringe = visibility(params);

    double phi0_tilde = find_phi0_tilde(params);
    if (fringe < 1e-9) {
        // flat fringe: every offset maximizes the detector entropy; report
        // the limit of the unique maximizer from eta < pi
        phi0_tilde = std::fmod(kPi - params.gamma, kPi);
    }

    const PathGameResult path = play_path_game(params);
    const double h_d = play_phase_game({params, phi0_tilde, 0.0}).h_phase_given_detector;
    const ChiOptimum chi_star = optimize_chi(params, phi0_tilde);
    const GameReport games{h_d,
                           chi_star.entropy,
                           h_d - chi_star.entropy,
                           path.h_path_given_meas,
                           path.which_path_information,
                           phi0_tilde,
                           chi_star.chi};

    const ErasingBasis eraser = erasing_basis(
        {PureState::basis_state(2, 0), lower_arm_ancilla(params.alpha, params.beta)},
        chi_star.chi);
    const double axis_angle = basis_axis_angle(eraser.vectors, energy_basis());
    const SubensembleVisibilities sub = subensemble_visibility(params, eraser.vectors);

    const double residual = std::abs(games.erasure_information - games.which_path_information);
    return {eta,
            params,
            games,
            axis_angle,
            fringe,
            sub.plus,
            sub.minus,
            residual,
            residual <= tolerance};
}

}  // namespace mzerase
