// The path and phase guessing games: conditional Shannon entropies of the
// guesses, the hardest phase offset, the best erasing angle, and the
// erased-information identity they satisfy.
#pragma once

#include <cstddef>

#include "mzerase/discrimination.hpp"
#include "mzerase/distribution.hpp"
#include "mzerase/interferometer.hpp"

namespace mzerase {

// -sum p log2 p, with 0 log 0 = 0
double shannon_entropy(const OutcomeDistribution& dist);

// H(A|B) = H(A,B) - H(B)
double conditional_entropy(const JointDistribution& joint);

// Path game: one arm is randomly blocked; guess which one survived from a
// projective measurement on the ancilla (optimal basis).
struct PathGameResult {
    double h_path_given_meas;       // guess entropy at the optimal basis, bits
    double which_path_information;  // 1 - h_path_given_meas
    double distinguishability;      // 2 L - 1
    bool detector_uninformative;    // detector statistics identical under both hypotheses
};

PathGameResult play_path_game(const InteractionParams& params);

// Phase game: one of two phases pi apart is randomly applied; guess which,
// from the detector click and an erasing measurement on the ancilla.
struct PhaseGameConfig {
    InteractionParams params;  // phase_phi is ignored; the game sets the phase
    double phi0 = 0.0;         // hypotheses {phi0, phi0 + pi}
    double chi = 0.0;          // erasing-ring coordinate
};

struct PhaseGameResult {
    double h_phase_given_detector;         // detector only
    double h_phase_given_detector_eraser;  // detector and erasing outcome
    double erasure_information;            // the drop between the two
};

PhaseGameResult play_phase_game(const PhaseGameConfig& cfg);

// Full joint over (phase hypothesis) x (detector, erasing outcome).
JointDistribution phase_game_distribution(const PhaseGameConfig& cfg);

// The phase offset in [0, pi) at which the detector alone reveals least
// (maximizes the detector-conditional phase entropy). 1024-point grid plus
// golden-section refinement to 1e-10; a flat objective ties to 0.
double find_phi0_tilde(const InteractionParams& params);

// Erasing angle in [0, pi) minimizing the eraser-conditional phase entropy
// at the given offset. 512-point grid plus golden-section to 1e-10.
struct ChiOptimum {
    double chi;
    double entropy;
};

ChiOptimum optimize_chi(const InteractionParams& params, double phi0);

// Everything the two games say about one interaction.
struct GameReport {
    double h_phase_given_detector;         // at phi0_tilde
    double h_phase_given_detector_eraser;  // at (phi0_tilde, chi_star)
    double erasure_information;            // difference of the above
    double h_path_given_meas;
    double which_path_information;
    double phi0_tilde;
    double chi_star;
};

GameReport run_games(const InteractionParams& params);

// | max_chi {H(phase|det) - H(phase|det,eraser)} - I(path:meas) |
struct ErasureIdentityReport {
    GameReport games;
    double lhs;
    double rhs;
    double residual;
    bool pass;
};

ErasureIdentityReport verify_erasure_identity(const InteractionParams& params, double tolerance);

// Average of the erasure information over the phase offset, composite
// Simpson with `panels` and 2*panels as a convergence check. panels must be
// even and >= 64.
struct AverageEResult {
    double value;
    double refined;
    bool converged;
};

inline constexpr double kAverageEConvergenceTol = 1e-6;

AverageEResult average_erasure_information(const InteractionParams& params, double chi,
                                           std::size_t panels = 2048);

}  // namespace mzerase
