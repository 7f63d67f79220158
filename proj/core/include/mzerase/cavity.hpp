// Atom-cavity reflection physics: the input-output reflection coefficient,
// the conditional phase it imprints, and the mapping of the resulting
// Michelson setup onto canonical interaction parameters.
#pragma once

#include <optional>

#include "mzerase/games.hpp"
#include "mzerase/interferometer.hpp"
#include "mzerase/qstate.hpp"

namespace mzerase {

// The photon at photon_frequency_hz reflects off one of two resonances:
// the bare cavity (atom decoupled) or the dressed mode (atom coupled).
// The dressed frequency is an input dial, not derived from a coupling model.
struct CavityParams {
    double photon_frequency_hz;
    double bare_resonance_hz;
    double dressed_resonance_hz;
    double decay_rate;  // kappa, rad/s

    CavityParams(double photon_frequency_hz, double bare_resonance_hz,
                 double dressed_resonance_hz, double decay_rate);  // rejects kappa <= 0

    double bare_detuning() const;     // 2 pi (bare - photon), rad/s
    double dressed_detuning() const;
    // the regime where the coupled branch reflects with no phase
    bool strong_detuning() const { return std::abs(dressed_detuning()) >= 10.0 * decay_rate; }
};

// (i delta - kappa/2) / (i delta + kappa/2); unit modulus. kappa must be > 0.
cplx reflection_coefficient(double delta, double kappa);

// arg of the reflection coefficient, in (-pi, pi]
double reflection_phase(double delta, double kappa);

// Phase difference between the two reflection branches, wrapped to
// (-pi, pi]. Compare magnitudes when matching against the (0, pi] dial.
double conditional_phase_eta(const CavityParams& cp);

// Atom state after the photon reflects, written in the superposition frame
// |0> = (|g1>+|g0>)/sqrt2, |1> = (|g1>-|g0>)/sqrt2: one energy branch picks
// up the extra phase eta.
PureState reflected_atom_state(double eta);

// Atom energy eigenbasis {|g0>, |g1>} in the same frame.
ProjectiveBasis energy_basis();

// Michelson dial eta in (0, pi] maps onto interaction parameters
// (alpha = eta, beta = 3 pi / 2, gamma = eta / 2).
InteractionParams michelson_to_canonical(double eta);

struct MichelsonSetup {
    double eta;

    explicit MichelsonSetup(double eta);
    InteractionParams canonical() const { return michelson_to_canonical(eta); }
};

// Full erasure summary of the Michelson setup. At eta = pi the fringe is
// flat and every phase offset maximizes the detector-conditional entropy;
// the summary then reports the eta -> pi limit offset so the optimal-eraser
// comparison stays meaningful.
struct MichelsonReport {
    double eta;
    InteractionParams params;
    GameReport games;
    double eraser_axis_angle;  // Bloch angle between the chi* basis and the energy basis
    double fringe_visibility;
    std::optional<double> subensemble_plus;   // at the chi* eraser
    std::optional<double> subensemble_minus;
    double identity_residual;
    bool identity_pass;
};

MichelsonReport michelson_report(double eta, double tolerance = 1e-6);

}  // namespace mzerase
