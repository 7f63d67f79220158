#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "mzerase/cavity.hpp"
#include "mzerase/discrimination.hpp"
#include "mzerase/interferometer.hpp"

using namespace mzerase;

namespace {

constexpr double kPi = std::numbers::pi;

DiscriminationProblem arm_problem(const InteractionParams& p) {
    return {PureState::basis_state(2, 0), lower_arm_ancilla(p.alpha, p.beta)};
}

}  // namespace

TEST_CASE("interaction parameter ranges") {
    CHECK_THROWS_AS(InteractionParams(-0.1, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(InteractionParams(kPi + 0.1, 0.0, 0.0), std::invalid_argument);
    // beta and gamma wrap
    const InteractionParams p{1.0, 2.5 * kPi, -0.5 * kPi};
    CHECK(p.beta == doctest::Approx(0.5 * kPi));
    CHECK(p.gamma == doctest::Approx(1.5 * kPi));
}

TEST_CASE("joint state construction") {
    // no interaction: product state, both rows proportional to |0>
    const JointState product = build_joint_state({0.0, 0.0, 0.0, 0.0});
    CHECK(std::abs(product.amplitude(0, 0) - 1.0 / std::numbers::sqrt2) < 1e-14);
    CHECK(std::abs(product.amplitude(1, 0) - 1.0 / std::numbers::sqrt2) < 1e-14);
    CHECK(std::abs(product.amplitude(0, 1)) < 1e-14);
    CHECK(std::abs(product.amplitude(1, 1)) < 1e-14);

    // full interaction: maximally entangled, lower row lands on -i|1>
    const JointState bell = build_joint_state({kPi, 1.5 * kPi, 0.0, 0.0});
    CHECK(std::abs(bell.amplitude(0, 0) - 1.0 / std::numbers::sqrt2) < 1e-14);
    CHECK(std::abs(bell.amplitude(1, 1) - cplx{0.0, -1.0 / std::numbers::sqrt2}) < 1e-14);
    CHECK(std::abs(bell.amplitude(1, 0)) < 1e-14);

    CHECK_THROWS_AS(JointState({cplx{1, 0}, cplx{0, 0}}, {cplx{1, 0}, cplx{0, 0}}),
                    std::invalid_argument);  // norm 2
}

TEST_CASE("Michelson joint state matches the direct construction") {
    for (double eta : {0.4, 1.3, 2.2, kPi}) {
        for (double phi : {0.0, 0.9, 4.0}) {
            const InteractionParams p = michelson_to_canonical(eta).with_phase(phi);
            const JointState js = build_joint_state(p);
            const PureState u = reflected_atom_state(eta);
            for (std::size_t k = 0; k < 2; ++k) {
                const cplx direct = std::polar(1.0 / std::numbers::sqrt2, phi) * u[k];
                CHECK(std::abs(js.amplitude(1, k) - direct) < 1e-12);
            }
        }
    }
}

TEST_CASE("second beamsplitter preserves norm") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> gauss;
    for (int i = 0; i < 1000; ++i) {
        std::vector<cplx> a(3), b(3);
        double n2 = 0.0;
        for (auto* row : {&a, &b}) {
            for (cplx& x : *row) {
                x = {gauss(rng), gauss(rng)};
                n2 += std::norm(x);
            }
        }
        const double scale = 1.0 / std::sqrt(n2);
        for (auto* row : {&a, &b}) {
            for (cplx& x : *row) x *= scale;
        }
        const JointState out = apply_bs2(JointState(a, b));
        CHECK(std::abs(out.squared_norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("detector statistics") {
    // balanced point of the convention: phi + gamma = 0
    const OutcomeDistribution balanced = detector_distribution({0.0, 0.0, 0.0, 0.0});
    CHECK(balanced.probability(0) == doctest::Approx(0.5).epsilon(1e-14));

    // constructive interference at D1 sits at phi = 3pi/2 for alpha = 0
    const OutcomeDistribution bright = detector_distribution({0.0, 0.0, 0.0, 1.5 * kPi});
    CHECK(bright.probability(0) == doctest::Approx(1.0).epsilon(1e-12));

    // orthogonal ancilla states kill the fringe at every phase
    for (double phi = 0.0; phi < 2.0 * kPi; phi += 0.37) {
        const OutcomeDistribution flat = detector_distribution({kPi, 1.5 * kPi, 0.7, phi});
        CHECK(flat.probability(0) == doctest::Approx(0.5).epsilon(1e-13));
    }
}

TEST_CASE("fringes are 2pi periodic") {
    const InteractionParams p{1.1, 0.4, 2.0};
    for (double phi = 0.0; phi < 2.0 * kPi; phi += 0.61) {
        const double a = detector_distribution(p.with_phase(phi)).probability(0);
        const double b = detector_distribution(p.with_phase(phi + 2.0 * kPi)).probability(0);
        CHECK(std::abs(a - b) < 1e-12);
    }
}

TEST_CASE("detector marginal does not depend on the traced ancilla basis") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int i = 0; i < 50; ++i) {
        const InteractionParams p{angle(rng) / 2.0, angle(rng), angle(rng), angle(rng)};
        const JointState at_det = apply_bs2(build_joint_state(p));
        const OutcomeDistribution direct = detector_distribution(at_det);

        // resolve each detector row in a random ancilla basis instead
        const ErasingBasis random_ring = erasing_basis(arm_problem(p), angle(rng));
        for (std::size_t det = 0; det < 2; ++det) {
            double total = 0.0;
            for (std::size_t m = 0; m < 2; ++m) {
                cplx amp{0, 0};
                for (std::size_t k = 0; k < 2; ++k) {
                    amp += std::conj(random_ring.vectors.vector(m)[k]) * at_det.row(det)[k];
                }
                total += std::norm(amp);
            }
            CHECK(total == doctest::Approx(direct.probability(det)).epsilon(1e-12));
        }
    }
}

TEST_CASE("visibility closed form vs phase scan") {
    CHECK(visibility({0.0, 0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(visibility({kPi, 1.5 * kPi, 0.0}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(visibility({0.75 * kPi, 1.5 * kPi, 0.0}) ==
          doctest::Approx(0.382683432365090).epsilon(1e-12));

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int i = 0; i < 20; ++i) {
        const InteractionParams p{angle(rng) / 2.0, angle(rng), angle(rng)};
        CHECK(visibility_scan(p) == doctest::Approx(visibility(p)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(visibility_scan({1.0, 0.0, 0.0}, 100), std::invalid_argument);
}

TEST_CASE("duality equality for pure ancillas") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int i = 0; i < 200; ++i) {
        const InteractionParams p{angle(rng) / 2.0, angle(rng), 0.0};
        const double v = visibility(p);
        const double d = distinguishability(arm_problem(p));
        CHECK(std::abs(d * d + v * v - 1.0) < 1e-12);
    }
}

TEST_CASE("subensemble visibility on the erasing ring") {
    // no interaction: fringes already perfect in both branches
    const InteractionParams free{0.0, 1.5 * kPi, 0.0};
    const auto both = subensemble_visibility(free, erasing_basis(arm_problem(free), 0.0).vectors);
    REQUIRE(both.plus.has_value());
    REQUIRE(both.minus.has_value());
    CHECK(*both.plus == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(*both.minus == doctest::Approx(1.0).epsilon(1e-12));

    // every ring angle restores full contrast in both sorted subensembles,
    // and the restored contrast closes the duality budget
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int i = 0; i < 25; ++i) {
        const InteractionParams p{0.05 + angle(rng) * (kPi - 0.1) / (2.0 * kPi), angle(rng),
                                  angle(rng)};
        const double chi = angle(rng) / 2.0;
        const auto sub = subensemble_visibility(p, erasing_basis(arm_problem(p), chi).vectors);
        REQUIRE(sub.plus.has_value());
        REQUIRE(sub.minus.has_value());
        CHECK(*sub.plus == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(*sub.minus == doctest::Approx(1.0).epsilon(1e-9));

        const double v = visibility(p);
        const double d = distinguishability(arm_problem(p));
        const double restored = std::min(*sub.plus, *sub.minus);
        CHECK(std::abs(restored * restored - v * v - d * d) < 1e-9);
    }

    // measuring the discrimination basis itself erases nothing
    const InteractionParams full{kPi, 1.5 * kPi, 0.0};
    const auto none = subensemble_visibility(full, symmetric_basis(arm_problem(full)));
    REQUIRE(none.plus.has_value());
    CHECK(*none.plus == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(*none.minus == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("empty subensemble is reported, not NaN") {
    // alpha = 0 with the ring angle whose minus branch is orthogonal to |0>
    const InteractionParams p{0.0, 1.5 * kPi, 0.0};
    const auto sub = subensemble_visibility(p, erasing_basis(arm_problem(p), kPi / 2.0).vectors);
    CHECK(sub.plus.has_value() != sub.minus.has_value());  // exactly one branch survives
    const double v = sub.plus ? *sub.plus : *sub.minus;
    CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("subensemble scan route agrees with the closed form") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int i = 0; i < 10; ++i) {
        const InteractionParams p{0.2 + angle(rng) / 3.0, angle(rng), angle(rng)};
        const auto ring = erasing_basis(arm_problem(p), angle(rng) / 2.0).vectors;
        const auto formula = subensemble_visibility(p, ring);
        const auto scanned = subensemble_visibility_scan(p, ring);
        REQUIRE(formula.plus.has_value());
        REQUIRE(scanned.plus.has_value());
        CHECK(*scanned.plus == doctest::Approx(*formula.plus).epsilon(1e-9));
        CHECK(*scanned.minus == doctest::Approx(*formula.minus).epsilon(1e-9));
    }
}

TEST_CASE("beamsplitter convention validation") {
    CHECK_THROWS_AS(BeamSplitter(QubitUnitary{cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}}),
                    std::invalid_argument);
    const BeamSplitter& bs = BeamSplitter::symmetric();
    CHECK(std::abs(bs.matrix().at(0, 1) - cplx{0.0, 1.0 / std::numbers::sqrt2}) < 1e-15);
}
