// Optimal projective discrimination of two equiprobable pure states, the
// ring of unbiased erasing bases, and the d-level reduction to the
// two-dimensional span of the hypothesis pair.
#pragma once

#include <cstdint>
#include <cstddef>

#include "mzerase/qstate.hpp"

namespace mzerase {

// Overlap modulus above 1 - kDegenerateOverlap marks a (anti)parallel pair:
// the span plane is undefined.
inline constexpr double kDegenerateOverlap = 1e-10;

// Two pure-state hypotheses with fixed equal priors.
class DiscriminationProblem {
public:
    DiscriminationProblem(PureState phi1, PureState phi2);

    const PureState& phi1() const { return phi1_; }
    const PureState& phi2() const { return phi2_; }
    std::size_t dim() const { return phi1_.dim(); }
    static constexpr double prior = 0.5;

private:
    PureState phi1_;
    PureState phi2_;
};

// Basis minimizing the conditional entropy of the hypothesis: its first two
// vectors lie in span{phi1, phi2}, placed symmetrically between the states;
// for d > 2 the remaining vectors complete the orthogonal complement.
// Parallel qubit pairs fall back to the deterministic small-angle limit
// placement around phi1; parallel pairs with d > 2 are rejected
// (std::domain_error).
ProjectiveBasis symmetric_basis(const DiscriminationProblem& prob);

// L = sum_m p(m) max_hypothesis p(hypothesis | m), in [1/2, 1]
double guess_success_probability(const DiscriminationProblem& prob, const ProjectiveBasis& basis);

// D = 2L - 1 evaluated at the symmetric basis
double distinguishability(const DiscriminationProblem& prob);

// H(hypothesis | outcome) in bits, in [0, 1]
double path_conditional_entropy(const DiscriminationProblem& prob, const ProjectiveBasis& basis);

// Sampling oracle for the optimality of the symmetric basis. Qubit problems
// scan measurement axes on a Fibonacci sphere; d > 2 problems scan within the
// two-dimensional span and add seeded random full-dimension bases as
// falsification probes. The best ten grid candidates get Nelder-Mead
// refinement. Rejects n_samples < 100.
struct OptimalBasisSearch {
    ProjectiveBasis basis;
    double conditional_entropy;
};

OptimalBasisSearch brute_force_optimal_basis(const DiscriminationProblem& prob,
                                             std::size_t n_samples,
                                             std::uint64_t seed = 20240815);

// One basis from the ring unbiased to the symmetric basis, parameterized by
// chi in [0, pi). Vectors 0 and 1 are the ring pair; for d > 2 the span
// complement is appended. Produced only by erasing_basis(), which checks the
// unbiasedness invariant |<e|s_1,2>|^2 = 1/2 within 1e-10.
struct ErasingBasis {
    double chi;
    ProjectiveBasis vectors;

    const PureState& plus() const { return vectors.vector(0); }
    const PureState& minus() const { return vectors.vector(1); }
};

ErasingBasis erasing_basis(const DiscriminationProblem& prob, double chi);

}  // namespace mzerase
