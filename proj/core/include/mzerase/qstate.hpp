// Complex-amplitude state algebra: pure qudit states, orthonormal bases,
// Bloch-sphere coordinates and rotations, Born-rule outcome probabilities.
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "mzerase/distribution.hpp"

namespace mzerase {

using cplx = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;   // normalization / unitarity
inline constexpr double kOrthoTolerance = 1e-10;  // constructed-basis orthogonality

// Pure state of a d-level system, d >= 2. Amplitudes must be unit-norm
// within 1e-12; use normalized() when building states from raw arithmetic.
class PureState {
public:
    explicit PureState(std::vector<cplx> amplitudes);

    // |index> in the computational basis
    static PureState basis_state(std::size_t dim, std::size_t index);
    // rescale to unit norm, then construct
    static PureState normalized(std::vector<cplx> amplitudes);

    std::size_t dim() const { return amps_.size(); }
    const cplx& operator[](std::size_t i) const { return amps_[i]; }
    std::span<const cplx> amplitudes() const { return amps_; }

private:
    std::vector<cplx> amps_;
};

// <a|b>, conjugation on the first argument
cplx inner_product(const PureState& a, const PureState& b);

// |<a|b>|^2 — the global-phase-free way to compare states
double fidelity(const PureState& a, const PureState& b);

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    double length() const;
};

enum class Axis { X, Y, Z };

// 2x2 matrix acting on qubit amplitudes
class QubitUnitary {
public:
    QubitUnitary(cplx m00, cplx m01, cplx m10, cplx m11);

    cplx at(std::size_t row, std::size_t col) const;
    PureState apply(const PureState& s) const;
    QubitUnitary compose(const QubitUnitary& rhs) const;  // this * rhs

private:
    cplx m_[2][2];
};

// exp(-i angle sigma_axis / 2): rotates Bloch vectors by `angle` about
// `axis`, right-hand rule. Convention: |0> at +z, (|0>+|1>)/sqrt2 at +x,
// (|0>+i|1>)/sqrt2 at +y.
QubitUnitary bloch_rotation(Axis axis, double angle);

BlochVector to_bloch(const PureState& s);    // qubit only
PureState from_bloch(const BlochVector& v);  // rejects non-unit vectors

// Complete orthonormal basis: d vectors of dimension d, pairwise inner
// products below 1e-10.
class ProjectiveBasis {
public:
    explicit ProjectiveBasis(std::vector<PureState> vectors);

    static ProjectiveBasis computational(std::size_t dim);

    std::size_t dim() const { return vecs_.size(); }
    const PureState& vector(std::size_t i) const { return vecs_.at(i); }

private:
    std::vector<PureState> vecs_;
};

// p_i = |<basis_i|s>|^2
OutcomeDistribution born_probabilities(const PureState& s, const ProjectiveBasis& basis);

// Angle in [0, pi/2] between the measurement axes of two qubit bases
// (swap and phase of the basis vectors do not matter).
double basis_axis_angle(const ProjectiveBasis& a, const ProjectiveBasis& b);

}  // namespace mzerase
