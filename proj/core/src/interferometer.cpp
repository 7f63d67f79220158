#include "mzerase/interferometer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "mzerase/numeric.hpp"

namespace mzerase {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleSlack = 1e-9;
constexpr double kEmptyBranchTol = 1e-12;
const cplx kImag{0.0, 1.0};

double wrap_two_pi(double angle) {
    double w = std::fmod(angle, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}

// overlap amplitudes of one erasing vector with both arm ancillas
struct BranchOverlap {
    cplx with_phi1;
    cplx with_phi2;

    double weight() const { return 0.5 * (std::norm(with_phi1) + std::norm(with_phi2)); }
};

BranchOverlap branch_overlap(const InteractionParams& p, const PureState& vec) {
    const PureState phi1 = PureState::basis_state(2, 0);
    const PureState phi2 = lower_arm_ancilla(p.alpha, p.beta);
    return {inner_product(vec, phi1), inner_product(vec, phi2)};
}

// P(D1 | outcome m, phi) computed through the full pipeline
double conditional_fringe(const InteractionParams& p, const PureState& vec, double phi) {
    const JointState at_detectors = apply_bs2(build_joint_state(p.with_phase(phi)));
    if (vec.dim() != at_detectors.ancilla_dim()) {
        throw std::invalid_argument("erasing vector dimension does not match the ancilla");
    }
    double joint[2];
    for (std::size_t det = 0; det < 2; ++det) {
        cplx amp{0.0, 0.0};
        const auto row = at_detectors.row(det);
        for (std::size_t k = 0; k < row.size(); ++k) amp += std::conj(vec[k]) * row[k];
        joint[det] = std::norm(amp);
    }
    return joint[0] / (joint[0] + joint[1]);
}

template <typename F>
double scan_fringe_visibility(F&& prob, std::size_t points) {
    if (points < 720) {
        throw std::invalid_argument("visibility scan needs at least 720 points");
    }
    const auto top = grid_golden_maximize(prob, 0.0, kTwoPi, points, 1e-12, /*periodic=*/true);
    const auto bottom = grid_golden_minimize(prob, 0.0, kTwoPi, points, 1e-12, /*periodic=*/true);
    const double sum = top.value + bottom.value;
    if (sum <= 0.0) return 0.0;
    return (top.value - bottom.value) / sum;
}

}  // namespace

InteractionParams::InteractionParams(double alpha_, double beta_, double gamma_, double phase_phi_)
    : alpha(alpha_), beta(wrap_two_pi(beta_)), gamma(wrap_two_pi(gamma_)), phase_phi(phase_phi_) {
    if (alpha < -kAngleSlack || alpha > std::numbers::pi + kAngleSlack) {
        throw std::invalid_argument("alpha must lie in [0, pi]");
    }
}

InteractionParams InteractionParams::with_phase(double phi) const {
    return {alpha, beta, gamma, phi};
}

PureState lower_arm_ancilla(double alpha, double beta) {
    return PureState({cplx{std::cos(alpha / 2.0), 0.0}, std::polar(std::sin(alpha / 2.0), beta)});
}

JointState::JointState(std::vector<cplx> upper_row, std::vector<cplx> lower_row)
    : rows_{std::move(upper_row), std::move(lower_row)} {
    if (rows_[0].size() != rows_[1].size() || rows_[0].size() < 2) {
        throw std::invalid_argument("joint state rows must share a dimension >= 2");
    }
    if (std::abs(squared_norm() - 1.0) > kNormTolerance) {
        throw std::invalid_argument("joint state is not normalized");
    }
}

cplx JointState::amplitude(std::size_t path, std::size_t k) const {
    if (path > 1 || k >= ancilla_dim()) {
        throw std::out_of_range("joint state index out of range");
    }
    return rows_[path][k];
}

std::span<const cplx> JointState::row(std::size_t path) const {
    if (path > 1) {
        throw std::out_of_range("joint state row out of range");
    }
    return rows_[path];
}

double JointState::squared_norm() const {
    double n = 0.0;
    for (const auto& row : rows_) {
        for (const cplx& a : row) n += std::norm(a);
    }
    return n;
}

BeamSplitter::BeamSplitter(QubitUnitary matrix) : matrix_(matrix) {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            if (std::abs(std::abs(matrix_.at(r, c)) - inv_sqrt2) > kNormTolerance) {
                throw std::invalid_argument("beamsplitter is not symmetric");
            }
        }
    }
    // unitarity: rows orthonormal
    const cplx row_dot = std::conj(matrix_.at(0, 0)) * matrix_.at(1, 0) +
                         std::conj(matrix_.at(0, 1)) * matrix_.at(1, 1);
    if (std::abs(row_dot) > kNormTolerance) {
        throw std::invalid_argument("beamsplitter matrix is not unitary");
    }
}

const BeamSplitter& BeamSplitter::symmetric() {
    static const BeamSplitter bs{QubitUnitary{
        cplx{1.0 / std::numbers::sqrt2, 0.0}, kImag / std::numbers::sqrt2,
        kImag / std::numbers::sqrt2, cplx{1.0 / std::numbers::sqrt2, 0.0}}};
    return bs;
}

JointState BeamSplitter::apply(const JointState& js) const {
    const std::size_t d = js.ancilla_dim();
    std::vector<cplx> out0(d), out1(d);
    for (std::size_t k = 0; k < d; ++k) {
        const cplx u = js.amplitude(0, k);
        const cplx l = js.amplitude(1, k);
        out0[k] = matrix_.at(0, 0) * u + matrix_.at(0, 1) * l;
        out1[k] = matrix_.at(1, 0) * u + matrix_.at(1, 1) * l;
    }
    return {std::move(out0), std::move(out1)};
}

JointState build_joint_state(const InteractionParams& p, const PureState& phi1,
                             const PureState& phi2) {
    if (phi1.dim() != phi2.dim()) {
        throw std::invalid_argument("arm ancilla states must share a dimension");
    }
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const cplx lower_phase = std::polar(inv_sqrt2, p.phase_phi + p.gamma);
    std::vector<cplx> upper(phi1.dim()), lower(phi2.dim());
    for (std::size_t k = 0; k < phi1.dim(); ++k) {
        upper[k] = inv_sqrt2 * phi1[k];
        lower[k] = lower_phase * phi2[k];
    }
    return {std::move(upper), std::move(lower)};
}

JointState build_joint_state(const InteractionParams& p) {
    return build_joint_state(p, PureState::basis_state(2, 0), lower_arm_ancilla(p.alpha, p.beta));
}

JointState apply_bs2(const JointState& js, const BeamSplitter& bs) {
    return bs.apply(js);
}

OutcomeDistribution detector_distribution(const JointState& detector_state) {
    std::vector<double> probs(2, 0.0);
    for (std::size_t det = 0; det < 2; ++det) {
        for (const cplx& a : detector_state.row(det)) probs[det] += std::norm(a);
    }
    return {{"D1", "D2"}, std::move(probs)};
}

OutcomeDistribution detector_distribution(const InteractionParams& p) {
    return detector_distribution(apply_bs2(build_joint_state(p)));
}

double visibility(const PureState& phi1, const PureState& phi2) {
    return std::abs(inner_product(phi1, phi2));
}

double visibility(const InteractionParams& p) {
    return visibility(PureState::basis_state(2, 0), lower_arm_ancilla(p.alpha, p.beta));
}

double visibility_scan(const InteractionParams& p, std::size_t points) {
    return scan_fringe_visibility(
        [&p](double phi) { return detector_distribution(p.with_phase(phi)).probability(0); },
        points);
}

SubensembleVisibilities subensemble_visibility(const InteractionParams& p,
                                               const ProjectiveBasis& erasing) {
    SubensembleVisibilities out;
    std::optional<double>* slots[2] = {&out.plus, &out.minus};
    for (std::size_t m = 0; m < 2; ++m) {
        const BranchOverlap o = branch_overlap(p, erasing.vector(m));
        if (o.weight() < kEmptyBranchTol) continue;  // empty subensemble
        const double u = std::abs(o.with_phi1);
        const double v = std::abs(o.with_phi2);
        *slots[m] = 2.0 * u * v / (u * u + v * v);
    }
    return out;
}

SubensembleVisibilities subensemble_visibility_scan(const InteractionParams& p,
                                                    const ProjectiveBasis& erasing,
                                                    std::size_t points) {
    SubensembleVisibilities out;
    std::optional<double>* slots[2] = {&out.plus, &out.minus};
    for (std::size_t m = 0; m < 2; ++m) {
        const PureState& vec = erasing.vector(m);
        if (branch_overlap(p, vec).weight() < kEmptyBranchTol) continue;
        *slots[m] = scan_fringe_visibility(
            [&p, &vec](double phi) { return conditional_fringe(p, vec, phi); }, points);
    }
    return out;
}

}  // namespace mzerase
