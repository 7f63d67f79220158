#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "mzerase/games.hpp"

using namespace mzerase;

namespace {

constexpr double kPi = std::numbers::pi;

double h2(double p) {
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

}  // namespace

TEST_CASE("shannon entropy") {
    CHECK(shannon_entropy(OutcomeDistribution({"a", "b"}, {0.5, 0.5})) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(shannon_entropy(OutcomeDistribution({"a", "b"}, {1.0, 0.0})) ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK(shannon_entropy(OutcomeDistribution({"a", "b"}, {0.25, 0.75})) ==
          doctest::Approx(0.811278124459133).epsilon(1e-13));

    CHECK_THROWS_AS(OutcomeDistribution({"a", "b"}, {-1e-6, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(OutcomeDistribution({"a", "b"}, {0.7, 0.7}), std::invalid_argument);
    // tiny negatives and sub-1e-9 sum drift are absorbed
    const OutcomeDistribution d({"a", "b"}, {1.0 + 3e-10, -1e-13});
    CHECK(d.probability(0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("conditional entropy") {
    // independent uniform pair
    CHECK(conditional_entropy(JointDistribution({"a0", "a1"}, {"b0", "b1"},
                                                {0.25, 0.25, 0.25, 0.25})) ==
          doctest::Approx(1.0).epsilon(1e-14));
    // perfectly correlated
    CHECK(conditional_entropy(JointDistribution({"a0", "a1"}, {"b0", "b1"},
                                                {0.5, 0.0, 0.0, 0.5})) ==
          doctest::Approx(0.0).epsilon(1e-14));
    // the path game at full interaction resolves the hypothesis completely
    const DiscriminationProblem prob{PureState::basis_state(2, 0),
                                     lower_arm_ancilla(kPi, 1.5 * kPi)};
    const ProjectiveBasis basis = symmetric_basis(prob);
    std::vector<double> table;
    for (std::size_t m = 0; m < 2; ++m) {
        table.push_back(0.5 * std::norm(inner_product(basis.vector(m), prob.phi1())));
    }
    for (std::size_t m = 0; m < 2; ++m) {
        table.push_back(0.5 * std::norm(inner_product(basis.vector(m), prob.phi2())));
    }
    CHECK(conditional_entropy(JointDistribution({"upper", "lower"}, {"s1", "s2"}, table)) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("path game endpoints and closed form") {
    const PathGameResult free_case = play_path_game({0.0, 1.5 * kPi, 0.0});
    CHECK(free_case.h_path_given_meas == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(free_case.which_path_information == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(free_case.distinguishability == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(free_case.detector_uninformative);

    const PathGameResult full = play_path_game({kPi, 1.5 * kPi, 0.0});
    CHECK(full.h_path_given_meas == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(full.which_path_information == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(full.distinguishability == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(full.detector_uninformative);

    // alpha = 3pi/4 spot value
    const PathGameResult mid = play_path_game({0.75 * kPi, 1.5 * kPi, 0.5 * kPi});
    CHECK(mid.which_path_information ==
          doctest::Approx(1.0 - h2((1.0 + std::sin(3.0 * kPi / 8.0)) / 2.0)).epsilon(1e-12));
}

TEST_CASE("phase game basics") {
    // uncorrelated ancilla: erasing tells nothing, for any ring angle
    for (double chi : {0.0, 0.7, 1.9, 2.8}) {
        const PhaseGameResult r = play_phase_game({{0.0, 1.5 * kPi, 0.0}, 0.3, chi});
        CHECK(r.erasure_information == doctest::Approx(0.0).epsilon(1e-12));
    }

    // full interaction at the tie-broken offset: detector blind, eraser sharp
    const InteractionParams full{kPi, 1.5 * kPi, 0.5 * kPi};
    const double phi0 = find_phi0_tilde(full);
    CHECK(phi0 == doctest::Approx(0.0));
    CHECK(play_phase_game({full, phi0, 0.1}).h_phase_given_detector ==
          doctest::Approx(1.0).epsilon(1e-12));
    const ChiOptimum best = optimize_chi(full, phi0);
    CHECK(best.entropy == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("erasure information is nonnegative and bounded by the detector entropy") {
    std::mt19937_64 rng(79);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int i = 0; i < 60; ++i) {
        const PhaseGameConfig cfg{{angle(rng) / 2.0, angle(rng), angle(rng)}, angle(rng) / 2.0,
                                  angle(rng) / 2.0};
        const PhaseGameResult r = play_phase_game(cfg);
        CHECK(r.erasure_information >= -1e-12);
        CHECK(r.h_phase_given_detector_eraser <= r.h_phase_given_detector + 1e-12);
        CHECK(r.h_phase_given_detector <= 1.0 + 1e-12);
    }
}

TEST_CASE("phase game distribution plumbing agrees with the direct entropies") {
    const PhaseGameConfig cfg{{1.2, 0.9, 2.2}, 0.7, 0.4};
    const JointDistribution joint = phase_game_distribution(cfg);
    const PhaseGameResult direct = play_phase_game(cfg);
    CHECK(conditional_entropy(joint) ==
          doctest::Approx(direct.h_phase_given_detector_eraser).epsilon(1e-12));
    CHECK(joint.a_size() == 2);
    CHECK(joint.b_size() == 4);
}

TEST_CASE("the hardest phase offset balances the fringe") {
    // closed form: the detector entropy peaks where the fringe crosses 1/2,
    // at phi0 = -gamma (mod pi)
    // the objective is quadratically flat at its peak, so the located offset
    // is good to ~1e-7 even though the refinement runs to 1e-10; the entropy
    // value itself is exact to machine precision there
    std::mt19937_64 rng(83);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int i = 0; i < 30; ++i) {
        const double alpha = 0.2 + angle(rng) * (kPi - 0.4) / (2.0 * kPi);
        const double gamma = angle(rng);
        const InteractionParams p{alpha, 1.5 * kPi, gamma};
        const double expected = std::fmod(2.0 * kPi - gamma, kPi);
        const double got = find_phi0_tilde(p);
        CHECK(std::min(std::abs(got - expected), kPi - std::abs(got - expected)) < 5e-7);
        CHECK(play_phase_game({p, got, 0.0}).h_phase_given_detector ==
              doctest::Approx(1.0).epsilon(1e-9));
    }

    // balanced fringe point of the convention at alpha = 0, gamma = 0
    CHECK(std::abs(find_phi0_tilde({0.0, 0.0, 0.0})) < 5e-7);
}

TEST_CASE("identity between erased phase information and path information") {
    // trivial endpoints
    const ErasureIdentityReport at_zero = verify_erasure_identity({0.0, 0.3, 5.1}, 1e-6);
    CHECK(at_zero.lhs == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(at_zero.rhs == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(at_zero.pass);

    const ErasureIdentityReport at_pi = verify_erasure_identity({kPi, 4.4, 2.2}, 1e-6);
    CHECK(at_pi.lhs == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(at_pi.rhs == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(at_pi.pass);

    // the figure-3 working point
    const ErasureIdentityReport fig = verify_erasure_identity({0.75 * kPi, 1.5 * kPi, 0.5 * kPi},
                                                              1e-6);
    CHECK(fig.games.h_phase_given_detector == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fig.games.h_phase_given_detector_eraser ==
          doctest::Approx(fig.games.h_path_given_meas).epsilon(1e-6));
    CHECK(fig.pass);

    // rotational invariance: arbitrary azimuth and arm phase
    std::mt19937_64 rng(89);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int i = 0; i < 30; ++i) {
        const InteractionParams p{angle(rng) / 2.0, angle(rng), angle(rng)};
        CHECK(verify_erasure_identity(p, 1e-6).pass);
    }
}

TEST_CASE("left side of the identity does not move with beta or gamma") {
    const double alpha = 1.9;
    const double reference = verify_erasure_identity({alpha, 1.5 * kPi, 0.5 * kPi}, 1e-6).lhs;
    std::mt19937_64 rng(97);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int i = 0; i < 10; ++i) {
        const double lhs = verify_erasure_identity({alpha, angle(rng), angle(rng)}, 1e-6).lhs;
        CHECK(lhs == doctest::Approx(reference).epsilon(1e-6));
    }
}

TEST_CASE("average erasure information") {
    CHECK_THROWS_AS(average_erasure_information({1.0, 0.0, 0.0}, 0.0, 62),
                    std::invalid_argument);
    CHECK_THROWS_AS(average_erasure_information({1.0, 0.0, 0.0}, 0.0, 65),
                    std::invalid_argument);

    // the quoted working point, two ring angles
    const InteractionParams p{0.75 * kPi, 1.5 * kPi, 0.5 * kPi};
    const AverageEResult a = average_erasure_information(p, 0.0);
    const AverageEResult b = average_erasure_information(p, 1.3);
    CHECK(std::abs(a.value - 0.389) < 1e-3);
    CHECK(std::abs(b.value - 0.389) < 1e-3);
    CHECK(std::abs(a.value - b.value) < 1e-6);
    CHECK(a.converged);

    // no interaction, nothing to erase
    const AverageEResult zero = average_erasure_information({0.0, 1.5 * kPi, 0.0}, 0.9, 64);
    CHECK(zero.value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("full game report is internally consistent") {
    const GameReport r = run_games({2.0, 0.8, 3.9});
    CHECK(r.erasure_information ==
          doctest::Approx(r.h_phase_given_detector - r.h_phase_given_detector_eraser)
              .epsilon(1e-14));
    CHECK(r.which_path_information == doctest::Approx(1.0 - r.h_path_given_meas).epsilon(1e-14));
    CHECK(r.phi0_tilde >= 0.0);
    CHECK(r.phi0_tilde < kPi);
    CHECK(r.chi_star >= 0.0);
    CHECK(r.chi_star < kPi);
}
