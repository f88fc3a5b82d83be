#include "kqm/correspondence.hpp"
#include "kqm/oracle.hpp"
#include "kqm/rng.hpp"

#include <doctest.h>

using namespace kqm;

TEST_CASE("gamma maps pairs to complex vectors and back") {
    Vec q(2), p(2);
    q << 1, 3;
    p << 2, -1;
    const CVec psi = gamma(KahlerVector(q, p)).entries();
    CHECK(psi[0] == Complex(1, 2));
    CHECK(psi[1] == Complex(3, -1));

    const KahlerVector back = gamma_inv(psi);
    CHECK(back.q() == q);
    CHECK(back.p() == p);

    const KahlerVector zero = gamma_inv(CVec(CVec::Zero(1)));
    CHECK(zero.q()[0] == 0.0);
    CHECK(zero.p()[0] == 0.0);

    Rng rng(5);
    for (int t = 0; t < 1000; ++t) {
        const CVec v = random_cvec(rng, rng.uniform_int(1, 6));
        CHECK((gamma(gamma_inv(v)).entries() - v).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("gamma intertwines J with multiplication by i") {
    Rng rng(6);
    for (int t = 0; t < 200; ++t) {
        const int n = rng.uniform_int(1, 8);
        const KahlerVector x(random_vec(rng, n), random_vec(rng, n));
        const CVec lhs = gamma(apply_J(x)).entries();
        const CVec rhs = Complex(0, 1) * gamma(x).entries();
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("complex inner product convention and identity") {
    CVec a(1), b(1);
    a << Complex(1, 1);
    b << Complex(2, -1);
    // (1-i)(2-i) = 1 - 3i, conjugate-linear in the first argument.
    CHECK(complex_inner(ComplexState(a), ComplexState(b)) == Complex(1, -3));

    CVec e1(3);
    e1 << 1, 0, 0;
    CHECK(complex_inner(ComplexState(e1), ComplexState(e1)) == Complex(1, 0));

    Rng rng(8);
    for (int t = 0; t < 300; ++t) {
        const int n = rng.uniform_int(1, 16);
        const CVec psi1 = random_cvec(rng, n);
        const CVec psi2 = random_cvec(rng, n);
        const Complex inner = complex_inner(ComplexState(psi1), ComplexState(psi2));

        const Complex self = complex_inner(ComplexState(psi1), ComplexState(psi1));
        CHECK(self.imag() == 0.0);
        CHECK(self.real() >= 0.0);

        const KahlerVector x1 = gamma_inv(psi1);
        const KahlerVector x2 = gamma_inv(psi2);
        CHECK(inner.real() == doctest::Approx(metric_g(x1, x2)).epsilon(1e-13));
        CHECK(inner.imag() == doctest::Approx(symplectic_omega(x1, x2)).epsilon(1e-13));
    }

    CHECK_THROWS_AS(complex_inner(ComplexState(a), ComplexState(e1)), std::invalid_argument);
}

TEST_CASE("lift of sigma_y and the identity") {
    CMat sy(2, 2);
    sy << 0, Complex(0, -1), Complex(0, 1), 0;
    const KahlerOperator lifted = lift_operator(sy);
    CHECK(lifted.S().norm() == 0.0);
    CHECK(lifted.A()(0, 1) == -1.0);
    CHECK(lifted.A()(1, 0) == 1.0);
    CHECK(lifted.k_hermitian());

    const KahlerOperator id = lift_operator(CMat(CMat::Identity(3, 3)));
    CHECK((id.expanded() - Mat::Identity(6, 6)).norm() == 0.0);
}

TEST_CASE("lift is a homomorphism and intertwines the action") {
    Rng rng(9);
    for (int t = 0; t < 200; ++t) {
        const int n = rng.uniform_int(1, 8);
        const CMat l1 = random_cmat(rng, n);
        const CMat l2 = random_cmat(rng, n);
        const CVec psi = random_cvec(rng, n);

        const Mat lhs = lift_operator(CMat(l1 * l2)).expanded();
        const Mat rhs = (lift_operator(l1) * lift_operator(l2)).expanded();
        CHECK((lhs - rhs).norm() <= 1e-12 * std::max(1.0, lhs.norm()));

        const KahlerVector via_complex = gamma_inv(CVec(l1 * psi));
        const KahlerVector via_lift = lift_operator(l1).apply(gamma_inv(psi));
        CHECK((via_complex - via_lift).stacked().norm() <=
              1e-12 * std::max(1.0, via_lift.stacked().norm()));

        CHECK((lift_operator(CMat(l1.adjoint())).expanded() -
               lift_operator(l1).transpose().expanded())
                  .norm() == 0.0);
    }
}

TEST_CASE("lower inverts lift and rejects J-incompatible blocks") {
    Rng rng(10);
    for (int t = 0; t < 100; ++t) {
        const CMat h = random_hermitian(rng, rng.uniform_int(1, 6));
        const CMat back = lower_operator(lift_operator(h)).matrix();
        CHECK((back - h).cwiseAbs().maxCoeff() == 0.0);
    }

    Mat bad(2, 2);
    bad << 1, 0, 0, 2;
    CHECK_THROWS_WITH_AS(lower_operator(bad), doctest::Contains("S-blocks differ"),
                         std::invalid_argument);
}

TEST_CASE("the 4x4 block matrix lowers to the 2x2 Hermitian form") {
    const double s11 = 0.7, s12 = -1.3, s22 = 2.1, a = 0.9;
    Mat l4(4, 4);
    l4 << s11, s12, 0, -a,
          s12, s22, a, 0,
          0, a, s11, s12,
          -a, 0, s12, s22;
    const ComplexOperator lowered = lower_operator(l4);
    CMat expected(2, 2);
    expected << s11, Complex(s12, a), Complex(s12, -a), s22;
    CHECK((lowered.matrix() - expected).cwiseAbs().maxCoeff() == 0.0);
    CHECK(lowered.kind() == ComplexOperator::Kind::hermitian);
}

TEST_CASE("complex operator tags are validated") {
    CMat not_hermitian(2, 2);
    not_hermitian << 1, 2, 3, 4;
    CHECK_THROWS_AS(ComplexOperator::hermitian(not_hermitian), std::invalid_argument);
    CHECK_THROWS_AS(ComplexOperator::unitary(not_hermitian), std::invalid_argument);
    CHECK_THROWS_AS(ComplexOperator::projector(not_hermitian), std::invalid_argument);
    CHECK(ComplexOperator::classify(not_hermitian).kind() == ComplexOperator::Kind::general);

    Rng rng(12);
    const CMat u = random_unitary(rng, 4);
    CHECK(ComplexOperator::classify(u).kind() == ComplexOperator::Kind::unitary);
    const CMat p = random_projector(rng, 4);
    CHECK(ComplexOperator::classify(p).kind() == ComplexOperator::Kind::projector);
    CHECK(ComplexOperator::classify(random_hermitian(rng, 4)).kind() ==
          ComplexOperator::Kind::hermitian);
    CHECK(ComplexOperator::classify(CMat(CMat::Identity(2, 2))).kind() ==
          ComplexOperator::Kind::projector);
}

TEST_CASE("kahler operator construction contracts") {
    CHECK_THROWS_AS(KahlerOperator(Mat::Identity(2, 2), Mat::Identity(3, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(KahlerOperator::from_expanded(Mat::Identity(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(ComplexState(CVec{}), std::invalid_argument);

    Rng rng(13);
    const KahlerOperator op = random_k_hermitian(rng, 3);
    CHECK(op.k_hermitian());
    const KahlerOperator round = KahlerOperator::from_expanded(op.expanded());
    CHECK((round.S() - op.S()).norm() == 0.0);
    CHECK((round.A() - op.A()).norm() == 0.0);

    const KahlerVector eta(random_vec(rng, 3), random_vec(rng, 3));
    CHECK((op.apply(eta).stacked() - op.expanded() * eta.stacked()).norm() <= 1e-14);
}
