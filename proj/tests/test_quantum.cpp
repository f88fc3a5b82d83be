#include "kqm/oracle.hpp"
#include "kqm/quantum.hpp"
#include "kqm/rng.hpp"

#include <doctest.h>

#include <numbers>

using namespace kqm;

namespace {

CMat pauli_z() {
    CMat m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

CMat pauli_x() {
    CMat m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

CVec ket(std::initializer_list<Complex> entries) {
    CVec v(static_cast<Index>(entries.size()));
    Index i = 0;
    for (Complex c : entries) v[i++] = c;
    return v;
}

}  // namespace

TEST_CASE("Born probabilities for sigma_z") {
    const double r = 1.0 / std::numbers::sqrt2;
    const KahlerVector plus = gamma_inv(ket({r, r}));
    const auto split = born_probabilities(plus, lift_operator(pauli_z()));
    REQUIRE(split.size() == 2);
    CHECK(split[0].eigenvalue == doctest::Approx(-1.0));
    CHECK(split[0].probability == doctest::Approx(0.5));
    CHECK(split[1].eigenvalue == doctest::Approx(1.0));
    CHECK(split[1].probability == doctest::Approx(0.5));
    CHECK(split[0].projector_rank == 2);

    const KahlerVector zero = gamma_inv(ket({1, 0}));
    const auto certain = born_probabilities(zero, lift_operator(pauli_z()));
    CHECK(certain[0].probability == doctest::Approx(0.0));
    CHECK(certain[1].probability == doctest::Approx(1.0));
}

TEST_CASE("rank-divided probabilities are exposed but not the default") {
    const double r = 1.0 / std::numbers::sqrt2;
    const KahlerVector plus = gamma_inv(ket({r, r}));
    const auto divided = born_probabilities(plus, lift_operator(pauli_z()), true);
    CHECK(divided[0].probability == doctest::Approx(0.25));
    CHECK(divided[1].probability == doctest::Approx(0.25));
}

TEST_CASE("Born rule requires a normalized state") {
    const KahlerVector unnormalized = gamma_inv(ket({2, 0}));
    CHECK_THROWS_AS(born_probabilities(unnormalized, lift_operator(pauli_z())),
                    std::invalid_argument);
}

TEST_CASE("Born probabilities match the complex oracle on random inputs") {
    Rng rng(51);
    for (int t = 0; t < 150; ++t) {
        const int n = rng.uniform_int(1, 16);
        const KahlerVector eta = random_state(rng, n);
        const KahlerOperator op = random_k_hermitian(rng, n);

        const auto real_side = born_probabilities(eta, op);
        CMat h(n, n);
        h.real() = op.S();
        h.imag() = op.A();
        const auto reference = oracle::born(gamma(eta).entries(), h);

        REQUIRE(real_side.size() == reference.probabilities.size());
        double sum = 0;
        for (std::size_t i = 0; i < real_side.size(); ++i) {
            CHECK(std::abs(real_side[i].probability - reference.probabilities[i]) < 1e-12);
            CHECK(real_side[i].projector_rank == 2 * reference.ranks[i]);
            sum += real_side[i].probability;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("Born rule over a degenerate (rank-4) eigenspace") {
    Rng rng(56);
    const CMat u = random_unitary(rng, 3);
    CVec diag(3);
    diag << 2.0, 2.0, -1.0;
    const CMat h_raw = u * diag.asDiagonal() * u.adjoint();
    const CMat h = 0.5 * (h_raw + h_raw.adjoint());
    const KahlerOperator op = lift_operator(h);

    for (int t = 0; t < 20; ++t) {
        const KahlerVector eta = random_state(rng, 3);
        const auto outcomes = born_probabilities(eta, op);
        REQUIRE(outcomes.size() == 2);
        CHECK(outcomes[0].projector_rank == 2);
        CHECK(outcomes[1].projector_rank == 4);
        CHECK(outcomes[0].probability + outcomes[1].probability ==
              doctest::Approx(1.0).epsilon(1e-12));

        const auto reference = oracle::born(gamma(eta).entries(), h);
        REQUIRE(reference.probabilities.size() == 2);
        CHECK(std::abs(outcomes[0].probability - reference.probabilities[0]) < 1e-12);
        CHECK(std::abs(outcomes[1].probability - reference.probabilities[1]) < 1e-12);

        // The rank-divided values no longer sum to 1 here.
        const auto divided = born_probabilities(eta, op, true);
        CHECK(divided[0].probability + divided[1].probability < 1.0);
        CHECK(divided[1].probability ==
              doctest::Approx(outcomes[1].probability / 4.0).epsilon(1e-12));
    }
}

TEST_CASE("composition is tensor_K and preserves norms") {
    const KahlerVector zero = gamma_inv(ket({1, 0}));
    const KahlerVector zz = compose_systems(zero, zero);
    CHECK(zz.dim() == 4);
    CHECK(zz.q()[0] == 1.0);
    CHECK(zz.stacked().cwiseAbs().sum() == 1.0);

    Rng rng(52);
    for (int t = 0; t < 100; ++t) {
        const KahlerVector a = random_state(rng, rng.uniform_int(1, 6));
        const KahlerVector b = random_state(rng, rng.uniform_int(1, 6));
        const KahlerVector ab = compose_systems(a, b);
        CHECK(ab.norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK((gamma(ab).entries() - oracle::kron(gamma(a).entries(), gamma(b).entries()))
                  .cwiseAbs()
                  .maxCoeff() < 1e-14);
    }

    // Associativity through gamma: (a (x) b) (x) c is the triple Kronecker.
    const KahlerVector a = random_state(rng, 2);
    const KahlerVector b = random_state(rng, 3);
    const KahlerVector c = random_state(rng, 2);
    const CVec triple =
        oracle::kron(oracle::kron(gamma(a).entries(), gamma(b).entries()), gamma(c).entries());
    CHECK((gamma(compose_systems(compose_systems(a, b), c)).entries() - triple)
              .cwiseAbs()
              .maxCoeff() < 1e-12);
}

TEST_CASE("Bell state statistics and entanglement") {
    const KahlerVector bell = bell_state();
    CHECK(bell.dim() == 4);
    CHECK(bell.norm() == doctest::Approx(1.0).epsilon(1e-14));

    // Computational-basis probabilities via a register observable with
    // distinct eigenvalues 0..3.
    CMat reg = CMat::Zero(4, 4);
    reg(1, 1) = 1;
    reg(2, 2) = 2;
    reg(3, 3) = 3;
    const auto outcomes = born_probabilities(bell, lift_operator(reg));
    REQUIRE(outcomes.size() == 4);
    CHECK(outcomes[0].probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(outcomes[1].probability == doctest::Approx(0.0));
    CHECK(outcomes[2].probability == doctest::Approx(0.0));
    CHECK(outcomes[3].probability == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("measuring sigma_z (x) I then conditioning gives perfect correlation") {
    const KahlerVector bell = bell_state();
    const CMat sz_i = oracle::kron(pauli_z(), CMat(CMat::Identity(2, 2)));
    const KahlerOperator first = lift_operator(sz_i);

    const SpectralDecomposition decomp = eigen_structured(first);
    REQUIRE(decomp.clusters().size() == 2);
    const auto outcomes = born_probabilities(bell, first);
    CHECK(outcomes[0].probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(outcomes[1].probability == doctest::Approx(0.5).epsilon(1e-12));

    const CMat i_sz = oracle::kron(CMat(CMat::Identity(2, 2)), pauli_z());
    for (std::size_t branch = 0; branch < 2; ++branch) {
        const Mat projector = decomp.clusters()[branch].projector;
        const KahlerVector conditioned =
            KahlerVector::from_stacked(projector * bell.stacked()).normalized();
        const auto second = born_probabilities(conditioned, lift_operator(i_sz));
        // The second qubit is forced to the same outcome as the first.
        const double forced = decomp.clusters()[branch].eigenvalue;
        for (const auto& outcome : second) {
            const double expected = outcome.eigenvalue == doctest::Approx(forced) ? 1.0 : 0.0;
            CHECK(outcome.probability == doctest::Approx(expected).epsilon(1e-10));
        }
    }
}

TEST_CASE("the Bell state is not a K-tensor product (coarse grid search)") {
    const KahlerVector bell = bell_state();
    const CVec bell_c = gamma(bell).entries();

    double best = std::numeric_limits<double>::infinity();
    const int steps = 10;
    for (int it = 0; it <= steps; ++it) {
        for (int ip = 0; ip < steps; ++ip) {
            for (int jt = 0; jt <= steps; ++jt) {
                for (int jp = 0; jp < steps; ++jp) {
                    const double ta = std::numbers::pi * it / steps;
                    const double pa = 2 * std::numbers::pi * ip / steps;
                    const double tb = std::numbers::pi * jt / steps;
                    const double pb = 2 * std::numbers::pi * jp / steps;
                    const CVec prod =
                        oracle::kron(gamma(bloch_state(ta, pa)).entries(),
                                     gamma(bloch_state(tb, pb)).entries());
                    // Optimal global phase reduces the distance to
                    // sqrt(2 - 2|<prod, bell>|).
                    const double overlap = std::abs(oracle::inner(prod, bell_c));
                    best = std::min(best, std::sqrt(std::max(0.0, 2.0 - 2.0 * overlap)));
                }
            }
        }
    }
    CHECK(best > 0.5);
}

TEST_CASE("correlation examples") {
    const KahlerVector zero = gamma_inv(ket({1, 0}));
    const KahlerVector one = gamma_inv(ket({0, 1}));

    CorrelationQuery query{.operators = {ComplexOperator::hermitian(pauli_x())},
                           .psi = zero,
                           .phi = one};
    const CorrelationResult result = correlation(query);
    CHECK(result.value.real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(result.value.imag() == doctest::Approx(0.0));
    CHECK(result.residual < 1e-13);

    Rng rng(53);
    const CVec psi = random_complex_state(rng, 5);
    CorrelationQuery identity{.operators = {ComplexOperator::hermitian(
                                  CMat(CMat::Identity(5, 5)))},
                              .psi = ComplexState(psi),
                              .phi = ComplexState(psi)};
    const CorrelationResult same = correlation(identity);
    CHECK(same.value.real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(same.value.imag() == doctest::Approx(0.0));

    CHECK_THROWS_AS(correlation(CorrelationQuery{.operators = {}, .psi = zero, .phi = one}),
                    std::invalid_argument);
    CorrelationQuery mismatch{.operators = {ComplexOperator::hermitian(pauli_x())},
                              .psi = zero,
                              .phi = bell_state()};
    CHECK_THROWS_AS(correlation(mismatch), std::invalid_argument);
}

TEST_CASE("correlation chains match the oracle for mixed operator kinds") {
    Rng rng(54);
    for (int t = 0; t < 100; ++t) {
        const int n = rng.uniform_int(1, 16);
        const int k = rng.uniform_int(1, 5);
        CorrelationQuery query{.operators = {},
                               .psi = ComplexState(random_complex_state(rng, n)),
                               .phi = ComplexState(random_complex_state(rng, n))};
        for (int i = 0; i < k; ++i) {
            switch (rng.uniform_int(0, 2)) {
                case 0:
                    query.operators.emplace_back(
                        ComplexOperator::hermitian(random_hermitian(rng, n)));
                    break;
                case 1:
                    query.operators.emplace_back(ComplexOperator::unitary(random_unitary(rng, n)));
                    break;
                default:
                    query.operators.emplace_back(
                        lift_operator(ComplexOperator::projector(random_projector(rng, n))));
                    break;
            }
        }
        const CorrelationResult result = correlation(query);
        CHECK(result.residual <= 1e-10 * (1.0 + std::abs(result.value)));
    }
}

TEST_CASE("Bloch coordinates") {
    const KahlerVector zero = gamma_inv(ket({1, 0}));
    const BlochAngles north = bloch_coordinates(zero);
    CHECK(north.theta == doctest::Approx(0.0));
    CHECK(north.phi == 0.0);

    const double r = 1.0 / std::numbers::sqrt2;
    const BlochAngles equator = bloch_coordinates(gamma_inv(ket({r, r})));
    CHECK(equator.theta == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
    CHECK(equator.phi == doctest::Approx(0.0));

    // Round trip on a grid away from the poles.
    for (int it = 1; it < 10; ++it) {
        for (int ip = 0; ip < 10; ++ip) {
            const double theta = std::numbers::pi * it / 10.0;
            const double phi = 2 * std::numbers::pi * ip / 10.0;
            const BlochAngles back = bloch_coordinates(bloch_state(theta, phi));
            CHECK(back.theta == doctest::Approx(theta).epsilon(1e-12));
            CHECK(back.phi == doctest::Approx(phi).epsilon(1e-12));
        }
    }

    // Global phase does not move the point on the sphere.
    Rng rng(55);
    for (int t = 0; t < 50; ++t) {
        const KahlerVector eta = random_state(rng, 2);
        const BlochAngles base = bloch_coordinates(eta);
        const double alpha = rng.uniform_in(0, 2 * std::numbers::pi);
        const CVec rotated = std::exp(Complex(0, alpha)) * gamma(eta).entries();
        const BlochAngles moved = bloch_coordinates(gamma_inv(rotated));
        CHECK(moved.theta == doctest::Approx(base.theta).epsilon(1e-10));
        if (base.theta > 1e-6 && base.theta < std::numbers::pi - 1e-6) {
            const double diff = std::remainder(moved.phi - base.phi, 2 * std::numbers::pi);
            CHECK(std::abs(diff) < 1e-10);
        }
    }

    CHECK_THROWS_AS(bloch_coordinates(bell_state()), std::invalid_argument);
    CHECK_THROWS_AS(bloch_coordinates(KahlerVector::zero(2)), std::invalid_argument);
    CHECK_THROWS_AS(bloch_state(-0.1, 0.0), std::invalid_argument);
}
