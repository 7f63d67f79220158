// Symmetric two-path interferometer with a qudit ancilla: joint state
// construction, the second beamsplitter, detection statistics, fringe
// visibility and erasure-subensemble visibilities.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mzerase/qstate.hpp"

namespace mzerase {

// Parameters of the arm interaction. The ancilla starts in |0>; when the
// quanta takes the lower arm the ancilla ends in
//   cos(alpha/2)|0> + e^{i beta} sin(alpha/2)|1>
// and the lower path amplitude picks up e^{i(phi+gamma)}.
struct InteractionParams {
    double alpha;      // [0, pi]
    double beta;       // [0, 2pi), wrapped on construction
    double gamma;      // [0, 2pi), wrapped on construction
    double phase_phi;  // adjustable interferometer phase, unrestricted

    InteractionParams(double alpha, double beta, double gamma, double phase_phi = 0.0);

    InteractionParams with_phase(double phi) const;
};

// Ancilla state left behind by the lower-arm interaction.
PureState lower_arm_ancilla(double alpha, double beta);

// Joint quanta (x) ancilla amplitudes. Row 0 is the upper path, row 1 the
// lower path; after the second beamsplitter the rows reread as detectors
// D1 and D2. Total squared norm must be 1 within 1e-12.
class JointState {
public:
    JointState(std::vector<cplx> upper_row, std::vector<cplx> lower_row);

    std::size_t ancilla_dim() const { return rows_[0].size(); }
    cplx amplitude(std::size_t path, std::size_t k) const;
    std::span<const cplx> row(std::size_t path) const;
    double squared_norm() const;

private:
    std::vector<cplx> rows_[2];
};

// Symmetric beamsplitter: a 2x2 unitary taking path amplitudes (u, l) to
// detector amplitudes (D1, D2); every entry has modulus 1/sqrt(2).
class BeamSplitter {
public:
    explicit BeamSplitter(QubitUnitary matrix);

    // Fixed convention used throughout: reflection picks up a factor i,
    // transmission is untouched, i.e. (u, l) -> ((u+il)/sqrt2, (iu+l)/sqrt2).
    static const BeamSplitter& symmetric();

    const QubitUnitary& matrix() const { return matrix_; }
    JointState apply(const JointState& js) const;

private:
    QubitUnitary matrix_;
};

// (|u> (x) phi1 + e^{i(phi+gamma)} |l> (x) phi2) / sqrt(2)
JointState build_joint_state(const InteractionParams& p, const PureState& phi1,
                             const PureState& phi2);
// qubit canonical mode: phi1 = |0>, phi2 from (alpha, beta)
JointState build_joint_state(const InteractionParams& p);

JointState apply_bs2(const JointState& js, const BeamSplitter& bs = BeamSplitter::symmetric());

// Detection probabilities, ancilla marginalized out.
OutcomeDistribution detector_distribution(const JointState& detector_state);
OutcomeDistribution detector_distribution(const InteractionParams& p);

// Fringe contrast (P_max - P_min) / (P_max + P_min) over the adjustable
// phase. Closed form: for pure ancillas it equals |<phi1|phi2>|. phase_phi
// is irrelevant and ignored.
double visibility(const PureState& phi1, const PureState& phi2);
double visibility(const InteractionParams& p);

// Oracle route: dense phase scan (>= 720 points) with golden-section
// refinement of the extremes.
double visibility_scan(const InteractionParams& p, std::size_t points = 720);

// Conditional fringe visibility for the first two outcomes of an ancilla
// measurement. A branch with ~zero outcome probability carries no fringe
// and is reported empty.
struct SubensembleVisibilities {
    std::optional<double> plus;
    std::optional<double> minus;
};

SubensembleVisibilities subensemble_visibility(const InteractionParams& p,
                                               const ProjectiveBasis& erasing);
SubensembleVisibilities subensemble_visibility_scan(const InteractionParams& p,
                                                    const ProjectiveBasis& erasing,
                                                    std::size_t points = 720);

}  // namespace mzerase
