#include "mzerase/discrimination.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mzerase {

namespace {

using AmpVec = std::vector<cplx>;
const cplx kImag{0.0, 1.0};

double entropy_bits(std::span<const double> probs) {
    double h = 0.0;
    for (double p : probs) {
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

AmpVec to_vec(const PureState& s) {
    return {s.amplitudes().begin(), s.amplitudes().end()};
}

cplx dot(const AmpVec& a, const AmpVec& b) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double vec_norm(const AmpVec& a) {
    double n = 0.0;
    for (const cplx& x : a) n += std::norm(x);
    return std::sqrt(n);
}

void project_out(AmpVec& v, const AmpVec& unit) {
    const cplx c = dot(unit, v);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * unit[i];
}

// Orthonormal frame of the span of the two hypotheses, phased so that
//   phi2 ~ cos(alpha/2) f1 - i sin(alpha/2) f2   (up to a global phase).
// With that phasing the canonical basis formulas below apply verbatim in
// any dimension and for any azimuth of the pair.
struct CanonicalFrame {
    AmpVec f1;
    AmpVec f2;
    double alpha = 0.0;
    bool degenerate = false;
};

CanonicalFrame canonical_frame(const DiscriminationProblem& prob) {
    CanonicalFrame frame;
    frame.f1 = to_vec(prob.phi1());
    const AmpVec phi2 = to_vec(prob.phi2());
    const cplx overlap = dot(frame.f1, phi2);

    if (std::abs(overlap) > 1.0 - kDegenerateOverlap) {
        frame.degenerate = true;
        if (prob.dim() != 2) {
            throw std::domain_error("parallel states: the span plane is undefined for d > 2");
        }
        // small-angle limit: deterministic perpendicular of phi1
        frame.f2 = {-std::conj(frame.f1[1]), std::conj(frame.f1[0])};
        frame.alpha = 0.0;
        return frame;
    }

    // two-vector Gram-Schmidt with one re-orthogonalization pass
    AmpVec residual = phi2;
    project_out(residual, frame.f1);
    project_out(residual, frame.f1);
    const double res_norm = vec_norm(residual);
    for (cplx& x : residual) x /= res_norm;

    frame.alpha = 2.0 * std::atan2(res_norm, std::abs(overlap));
    const cplx global = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx{1.0, 0.0};
    frame.f2.resize(residual.size());
    for (std::size_t i = 0; i < residual.size(); ++i) {
        frame.f2[i] = kImag * std::conj(global) * residual[i];
    }
    return frame;
}

PureState lift(cplx a0, cplx a1, const CanonicalFrame& frame) {
    AmpVec v(frame.f1.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a0 * frame.f1[i] + a1 * frame.f2[i];
    return PureState::normalized(std::move(v));
}

// the two in-plane vectors of the entropy-optimal basis
std::array<PureState, 2> symmetric_pair(const CanonicalFrame& frame) {
    const double a_angle = (std::numbers::pi + frame.alpha) / 4.0;
    const double b_angle = (std::numbers::pi - frame.alpha) / 4.0;
    return {lift(std::cos(a_angle), -kImag * std::sin(a_angle), frame),
            lift(std::cos(b_angle), kImag * std::sin(b_angle), frame)};
}

std::array<PureState, 2> erasing_pair(const CanonicalFrame& frame, double chi) {
    const double b_angle = (std::numbers::pi - frame.alpha) / 4.0;
    const double cb = std::cos(b_angle);
    const double sb = std::sin(b_angle);
    const cplx ring = std::polar(1.0, chi);
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    return {lift(inv_sqrt2 * (cb + kImag * ring * sb), inv_sqrt2 * (kImag * sb + ring * cb), frame),
            lift(inv_sqrt2 * (cb - kImag * ring * sb), inv_sqrt2 * (kImag * sb - ring * cb), frame)};
}

// Complete an orthonormal set to a full basis with pivoted Gram-Schmidt
// over the identity columns.
std::vector<PureState> complete_basis(std::vector<PureState> vecs, std::size_t d) {
    std::vector<AmpVec> accepted;
    accepted.reserve(d);
    for (const PureState& v : vecs) accepted.push_back(to_vec(v));

    while (accepted.size() < d) {
        AmpVec best;
        double best_norm = -1.0;
        for (std::size_t col = 0; col < d; ++col) {
            AmpVec cand(d, cplx{0.0, 0.0});
            cand[col] = 1.0;
            for (const AmpVec& u : accepted) project_out(cand, u);
            const double n = vec_norm(cand);
            if (n > best_norm) {
                best_norm = n;
                best = std::move(cand);
            }
        }
        for (const AmpVec& u : accepted) project_out(best, u);  // re-orthogonalize
        const double n = vec_norm(best);
        for (cplx& x : best) x /= n;
        accepted.push_back(std::move(best));
    }
    for (std::size_t i = vecs.size(); i < d; ++i) {
        vecs.push_back(PureState::normalized(std::move(accepted[i])));
    }
    return vecs;
}

ProjectiveBasis assemble_basis(std::array<PureState, 2> pair, std::size_t d) {
    std::vector<PureState> vecs{std::move(pair[0]), std::move(pair[1])};
    if (d > 2) vecs = complete_basis(std::move(vecs), d);
    return ProjectiveBasis(std::move(vecs));
}

// H(hypothesis | outcome) from the joint outcome table
double joint_conditional_entropy(std::span<const double> p1, std::span<const double> p2) {
    std::vector<double> joint;
    std::vector<double> marg;
    joint.reserve(2 * p1.size());
    marg.reserve(p1.size());
    for (std::size_t m = 0; m < p1.size(); ++m) {
        const double a = DiscriminationProblem::prior * p1[m];
        const double b = DiscriminationProblem::prior * p2[m];
        joint.push_back(a);
        joint.push_back(b);
        marg.push_back(a + b);
    }
    return entropy_bits(joint) - entropy_bits(marg);
}

double basis_conditional_entropy(const DiscriminationProblem& prob, const ProjectiveBasis& basis) {
    std::vector<double> p1(basis.dim()), p2(basis.dim());
    for (std::size_t m = 0; m < basis.dim(); ++m) {
        p1[m] = std::norm(inner_product(basis.vector(m), prob.phi1()));
        p2[m] = std::norm(inner_product(basis.vector(m), prob.phi2()));
    }
    return joint_conditional_entropy(p1, p2);
}

// --- qubit axis search (the Bloch-geometry oracle route) ---

struct Axis3 {
    double x, y, z;
};

Axis3 axis_from_angles(double polar, double azimuth) {
    return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
            std::cos(polar)};
}

double axis_conditional_entropy(const Axis3& n, const BlochVector& r1, const BlochVector& r2) {
    const double d1 = n.x * r1.x + n.y * r1.y + n.z * r1.z;
    const double d2 = n.x * r2.x + n.y * r2.y + n.z * r2.z;
    const std::array<double, 2> p1{0.5 * (1.0 + d1), 0.5 * (1.0 - d1)};
    const std::array<double, 2> p2{0.5 * (1.0 + d2), 0.5 * (1.0 - d2)};
    return joint_conditional_entropy(p1, p2);
}

struct AngleCandidate {
    double polar;
    double azimuth;
    double entropy;
};

// Nelder-Mead on (polar, azimuth); small, deterministic, 2-d only.
AngleCandidate nelder_mead_refine(const AngleCandidate& start,
                                  const std::function<double(double, double)>& f) {
    std::array<AngleCandidate, 3> simplex{
        AngleCandidate{start.polar, start.azimuth, start.entropy},
        AngleCandidate{start.polar + 0.02, start.azimuth, 0.0},
        AngleCandidate{start.polar, start.azimuth + 0.02, 0.0}};
    simplex[1].entropy = f(simplex[1].polar, simplex[1].azimuth);
    simplex[2].entropy = f(simplex[2].polar, simplex[2].azimuth);

    auto by_entropy = [](const AngleCandidate& a, const AngleCandidate& b) {
        return a.entropy < b.entropy;
    };
    for (int iter = 0; iter < 200; ++iter) {
        std::sort(simplex.begin(), simplex.end(), by_entropy);
        const double spread = simplex[2].entropy - simplex[0].entropy;
        const double size = std::abs(simplex[2].polar - simplex[0].polar) +
                            std::abs(simplex[2].azimuth - simplex[0].azimuth);
        if (spread < 1e-14 && size < 1e-10) break;

        const double cp = 0.5 * (simplex[0].polar + simplex[1].polar);
        const double ca = 0.5 * (simplex[0].azimuth + simplex[1].azimuth);
        auto eval_at = [&](double t) {
            AngleCandidate c{cp + t * (cp - simplex[2].polar), ca + t * (ca - simplex[2].azimuth),
                             0.0};
            c.entropy = f(c.polar, c.azimuth);
            return c;
        };
        AngleCandidate reflected = eval_at(1.0);
        if (reflected.entropy < simplex[0].entropy) {
            AngleCandidate expanded = eval_at(2.0);
            simplex[2] = expanded.entropy < reflected.entropy ? expanded : reflected;
        } else if (reflected.entropy < simplex[1].entropy) {
            simplex[2] = reflected;
        } else {
            AngleCandidate contracted = eval_at(-0.5);
            if (contracted.entropy < simplex[2].entropy) {
                simplex[2] = contracted;
            } else {
                // shrink toward the best vertex
                for (std::size_t i = 1; i < 3; ++i) {
                    simplex[i].polar = 0.5 * (simplex[i].polar + simplex[0].polar);
                    simplex[i].azimuth = 0.5 * (simplex[i].azimuth + simplex[0].azimuth);
                    simplex[i].entropy = f(simplex[i].polar, simplex[i].azimuth);
                }
            }
        }
    }
    std::sort(simplex.begin(), simplex.end(), by_entropy);
    return simplex[0];
}

AngleCandidate qubit_axis_search(const BlochVector& r1, const BlochVector& r2,
                                 std::size_t n_samples) {
    auto objective = [&](double polar, double azimuth) {
        return axis_conditional_entropy(axis_from_angles(polar, azimuth), r1, r2);
    };

    // Fibonacci sphere grid, keep the ten best candidates
    constexpr double kGoldenAngle = 2.399963229728653;  // pi * (3 - sqrt(5))
    std::vector<AngleCandidate> top;
    for (std::size_t k = 0; k < n_samples; ++k) {
        const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(n_samples);
        const double polar = std::acos(std::clamp(z, -1.0, 1.0));
        const double azimuth = kGoldenAngle * static_cast<double>(k);
        const double h = objective(polar, azimuth);
        top.push_back({polar, azimuth, h});
        std::push_heap(top.begin(), top.end(), [](const AngleCandidate& a, const AngleCandidate& b) {
            return a.entropy < b.entropy;
        });
        if (top.size() > 10) {
            std::pop_heap(top.begin(), top.end(), [](const AngleCandidate& a, const AngleCandidate& b) {
                return a.entropy < b.entropy;
            });
            top.pop_back();
        }
    }

    AngleCandidate best = top.front();
    for (const AngleCandidate& cand : top) {
        const AngleCandidate refined = nelder_mead_refine(cand, objective);
        if (refined.entropy < best.entropy) best = refined;
    }
    return best;
}

std::array<PureState, 2> axis_basis(const AngleCandidate& c) {
    Axis3 n = axis_from_angles(c.polar, c.azimuth);
    const double len = std::sqrt(n.x * n.x + n.y * n.y + n.z * n.z);
    n = {n.x / len, n.y / len, n.z / len};
    return {from_bloch({n.x, n.y, n.z}), from_bloch({-n.x, -n.y, -n.z})};
}

// Haar-ish random basis: Gram-Schmidt of a complex Gaussian matrix.
ProjectiveBasis random_basis(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    std::vector<AmpVec> cols;
    cols.reserve(d);
    for (std::size_t c = 0; c < d; ++c) {
        AmpVec v(d);
        for (cplx& x : v) x = cplx{gauss(rng), gauss(rng)};
        for (const AmpVec& u : cols) project_out(v, u);
        for (const AmpVec& u : cols) project_out(v, u);
        const double n = vec_norm(v);
        for (cplx& x : v) x /= n;
        cols.push_back(std::move(v));
    }
    std::vector<PureState> vecs;
    vecs.reserve(d);
    for (AmpVec& v : cols) vecs.push_back(PureState::normalized(std::move(v)));
    return ProjectiveBasis(std::move(vecs));
}

}  // namespace

DiscriminationProblem::DiscriminationProblem(PureState phi1, PureState phi2)
    : phi1_(std::move(phi1)), phi2_(std::move(phi2)) {
    if (phi1_.dim() != phi2_.dim()) {
        throw std::invalid_argument("hypothesis states must share a dimension");
    }
}

ProjectiveBasis symmetric_basis(const DiscriminationProblem& prob) {
    const CanonicalFrame frame = canonical_frame(prob);
    return assemble_basis(symmetric_pair(frame), prob.dim());
}

double guess_success_probability(const DiscriminationProblem& prob, const ProjectiveBasis& basis) {
    double success = 0.0;
    for (std::size_t m = 0; m < basis.dim(); ++m) {
        const double a = DiscriminationProblem::prior *
                         std::norm(inner_product(basis.vector(m), prob.phi1()));
        const double b = DiscriminationProblem::prior *
                         std::norm(inner_product(basis.vector(m), prob.phi2()));
        success += std::max(a, b);
    }
    return success;
}

double distinguishability(const DiscriminationProblem& prob) {
    return 2.0 * guess_success_probability(prob, symmetric_basis(prob)) - 1.0;
}

double path_conditional_entropy(const DiscriminationProblem& prob, const ProjectiveBasis& basis) {
    return basis_conditional_entropy(prob, basis);
}

OptimalBasisSearch brute_force_optimal_basis(const DiscriminationProblem& prob,
                                             std::size_t n_samples, std::uint64_t seed) {
    if (n_samples < 100) {
        throw std::invalid_argument("basis search needs at least 100 samples");
    }

    if (prob.dim() == 2) {
        const AngleCandidate best =
            qubit_axis_search(to_bloch(prob.phi1()), to_bloch(prob.phi2()), n_samples);
        auto pair = axis_basis(best);
        return {ProjectiveBasis({std::move(pair[0]), std::move(pair[1])}), best.entropy};
    }

    const CanonicalFrame frame = canonical_frame(prob);

    // in-span scan: the reduced problem is a qubit at canonical azimuth
    const PureState q1 = PureState::basis_state(2, 0);
    const PureState q2 = PureState({cplx{std::cos(frame.alpha / 2.0), 0.0},
                                    -kImag * std::sin(frame.alpha / 2.0)});
    const AngleCandidate in_span = qubit_axis_search(to_bloch(q1), to_bloch(q2), n_samples);
    auto pair2d = axis_basis(in_span);
    ProjectiveBasis best_basis = assemble_basis(
        {lift(pair2d[0][0], pair2d[0][1], frame), lift(pair2d[1][0], pair2d[1][1], frame)},
        prob.dim());
    double best_entropy = basis_conditional_entropy(prob, best_basis);

    // falsification probes across the full dimension
    std::mt19937_64 rng(seed);
    const std::size_t n_probes = std::max<std::size_t>(100, n_samples / 10);
    for (std::size_t i = 0; i < n_probes; ++i) {
        ProjectiveBasis probe = random_basis(prob.dim(), rng);
        const double h = basis_conditional_entropy(prob, probe);
        if (h < best_entropy) {
            best_entropy = h;
            best_basis = std::move(probe);
        }
    }
    return {std::move(best_basis), best_entropy};
}

ErasingBasis erasing_basis(const DiscriminationProblem& prob, double chi) {
    double wrapped = std::fmod(chi, std::numbers::pi);
    if (wrapped < 0.0) wrapped += std::numbers::pi;

    const CanonicalFrame frame = canonical_frame(prob);
    ProjectiveBasis vectors = assemble_basis(erasing_pair(frame, wrapped), prob.dim());

    // unbiasedness to the in-plane symmetric pair is the defining invariant
    const auto sym = symmetric_pair(frame);
    for (std::size_t e = 0; e < 2; ++e) {
        for (const PureState& s : sym) {
            if (std::abs(fidelity(vectors.vector(e), s) - 0.5) > kOrthoTolerance) {
                throw std::logic_error("erasing basis lost unbiasedness to the symmetric basis");
            }
        }
    }
    return {wrapped, std::move(vectors)};
}

}  // namespace mzerase
