#include "mzerase/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace mzerase {

namespace {

double squared_norm(std::span<const cplx> amps) {
    double n = 0.0;
    for (const cplx& a : amps) n += std::norm(a);
    return n;
}

void require_qubit(const PureState& s, const char* what) {
    if (s.dim() != 2) {
        throw std::invalid_argument(std::string(what) + " requires a qubit state");
    }
}

}  // namespace

PureState::PureState(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() < 2) {
        throw std::invalid_argument("pure state needs dimension >= 2");
    }
    const double n2 = squared_norm(amps_);
    if (std::abs(n2 - 1.0) > kNormTolerance) {
        throw std::invalid_argument("pure state is not normalized: |amps|^2 = " + std::to_string(n2));
    }
}

PureState PureState::basis_state(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw std::out_of_range("basis state index out of range");
    }
    std::vector<cplx> amps(dim, cplx{0.0, 0.0});
    amps[index] = 1.0;
    return PureState(std::move(amps));
}

PureState PureState::normalized(std::vector<cplx> amplitudes) {
    const double n = std::sqrt(squared_norm(amplitudes));
    if (n <= 0.0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    for (cplx& a : amplitudes) a /= n;
    return PureState(std::move(amplitudes));
}

cplx inner_product(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner product of states with different dimensions");
    }
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double fidelity(const PureState& a, const PureState& b) {
    return std::norm(inner_product(a, b));
}

double BlochVector::length() const {
    return std::sqrt(x * x + y * y + z * z);
}

QubitUnitary::QubitUnitary(cplx m00, cplx m01, cplx m10, cplx m11) : m_{{m00, m01}, {m10, m11}} {}

cplx QubitUnitary::at(std::size_t row, std::size_t col) const {
    if (row > 1 || col > 1) {
        throw std::out_of_range("2x2 matrix index out of range");
    }
    return m_[row][col];
}

PureState QubitUnitary::apply(const PureState& s) const {
    require_qubit(s, "QubitUnitary::apply");
    return PureState({m_[0][0] * s[0] + m_[0][1] * s[1], m_[1][0] * s[0] + m_[1][1] * s[1]});
}

QubitUnitary QubitUnitary::compose(const QubitUnitary& rhs) const {
    return {m_[0][0] * rhs.m_[0][0] + m_[0][1] * rhs.m_[1][0],
            m_[0][0] * rhs.m_[0][1] + m_[0][1] * rhs.m_[1][1],
            m_[1][0] * rhs.m_[0][0] + m_[1][1] * rhs.m_[1][0],
            m_[1][0] * rhs.m_[0][1] + m_[1][1] * rhs.m_[1][1]};
}

QubitUnitary bloch_rotation(Axis axis, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    switch (axis) {
        case Axis::X:
            return {cplx{c, 0.0}, cplx{0.0, -s}, cplx{0.0, -s}, cplx{c, 0.0}};
        case Axis::Y:
            return {cplx{c, 0.0}, cplx{-s, 0.0}, cplx{s, 0.0}, cplx{c, 0.0}};
        case Axis::Z:
            return {cplx{c, -s}, cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{c, s}};
    }
    throw std::invalid_argument("unknown rotation axis");
}

BlochVector to_bloch(const PureState& s) {
    require_qubit(s, "to_bloch");
    const cplx cross = std::conj(s[0]) * s[1];
    return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(s[0]) - std::norm(s[1])};
}

PureState from_bloch(const BlochVector& v) {
    if (std::abs(v.length() - 1.0) > kOrthoTolerance) {
        throw std::invalid_argument("Bloch vector is not unit length");
    }
    const double polar = std::acos(std::clamp(v.z, -1.0, 1.0));
    const double azimuth = std::atan2(v.y, v.x);
    return PureState::normalized(
        {cplx{std::cos(polar / 2.0), 0.0}, std::polar(std::sin(polar / 2.0), azimuth)});
}

ProjectiveBasis::ProjectiveBasis(std::vector<PureState> vectors) : vecs_(std::move(vectors)) {
    if (vecs_.size() < 2) {
        throw std::invalid_argument("projective basis needs at least two vectors");
    }
    const std::size_t d = vecs_.front().dim();
    if (vecs_.size() != d) {
        throw std::invalid_argument("projective basis must have exactly dim vectors");
    }
    for (const PureState& v : vecs_) {
        if (v.dim() != d) {
            throw std::invalid_argument("projective basis vectors have mixed dimensions");
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            if (std::abs(inner_product(vecs_[i], vecs_[j])) > kOrthoTolerance) {
                throw std::invalid_argument("projective basis vectors are not orthogonal");
            }
        }
    }
}

ProjectiveBasis ProjectiveBasis::computational(std::size_t dim) {
    std::vector<PureState> vecs;
    vecs.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        vecs.push_back(PureState::basis_state(dim, i));
    }
    return ProjectiveBasis(std::move(vecs));
}

OutcomeDistribution born_probabilities(const PureState& s, const ProjectiveBasis& basis) {
    if (s.dim() != basis.dim()) {
        throw std::invalid_argument("state and basis dimensions differ");
    }
    std::vector<std::string> labels;
    std::vector<double> probs;
    labels.reserve(basis.dim());
    probs.reserve(basis.dim());
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        labels.push_back("m" + std::to_string(i));
        probs.push_back(std::norm(inner_product(basis.vector(i), s)));
    }
    return {std::move(labels), std::move(probs)};
}

double basis_axis_angle(const ProjectiveBasis& a, const ProjectiveBasis& b) {
    if (a.dim() != 2 || b.dim() != 2) {
        throw std::invalid_argument("basis_axis_angle requires qubit bases");
    }
    const BlochVector va = to_bloch(a.vector(0));
    const BlochVector vb = to_bloch(b.vector(0));
    const double dot = va.x * vb.x + va.y * vb.y + va.z * vb.z;
    return std::acos(std::clamp(std::abs(dot), 0.0, 1.0));
}

}  // namespace mzerase
