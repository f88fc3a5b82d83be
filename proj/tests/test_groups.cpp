#include "kqm/groups.hpp"
#include "kqm/rng.hpp"

#include <doctest.h>

#include <numbers>

using namespace kqm;

TEST_CASE("J passes all four memberships") {
    const Memberships m = check_memberships(complex_structure_matrix(3));
    CHECK(m.orthogonal);
    CHECK(m.symplectic);
    CHECK(m.j_commuting);
    CHECK(m.block_form);
    CHECK(m.kahler_unitary);
}

TEST_CASE("lifted unitaries are Kahler-unitary") {
    Rng rng(61);
    for (int t = 0; t < 100; ++t) {
        const int n = rng.uniform_int(1, 8);
        const Mat m = lift_operator(random_unitary(rng, n)).expanded();
        const Memberships result = check_memberships(m);
        CHECK(result.orthogonal);
        CHECK(result.symplectic);
        CHECK(result.j_commuting);
        CHECK(result.block_form);
        CHECK(result.kahler_unitary);
        CHECK(result.orthogonal_residual < 1e-12);
        CHECK(result.symplectic_residual < 1e-12);
    }
}

TEST_CASE("rotations that ignore the complex structure are orthogonal only") {
    const double t1 = 0.3, t2 = 1.4;
    auto rot = [](double t) {
        Mat r(2, 2);
        r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
        return r;
    };
    Mat m = Mat::Zero(4, 4);
    m.topLeftCorner(2, 2) = rot(t1);
    m.bottomRightCorner(2, 2) = rot(t2);

    const Memberships result = check_memberships(m);
    CHECK(result.orthogonal);
    CHECK_FALSE(result.symplectic);
    CHECK_FALSE(result.j_commuting);
    CHECK_FALSE(result.block_form);
    CHECK_FALSE(result.kahler_unitary);
}

TEST_CASE("membership checks reject odd dimensions") {
    CHECK_THROWS_AS(check_memberships(Mat::Identity(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(check_memberships(Mat::Identity(2, 4)), std::invalid_argument);
}

TEST_CASE("the u(2) generator basis is skew, J-commuting, and 4-dimensional") {
    const auto& generators = u2_generators();
    const Mat j = complex_structure_matrix(2);
    for (const Mat& g : generators) {
        CHECK((g.transpose() + g).norm() == 0.0);
        CHECK((g * j - j * g).norm() == 0.0);
    }
    CHECK((generators[1] - j).norm() == 0.0);

    // Linear independence: vectorized generators have rank 4.
    Mat stacked(16, 4);
    for (int i = 0; i < 4; ++i) stacked.col(i) = generators[static_cast<std::size_t>(i)].reshaped();
    Eigen::ColPivHouseholderQR<Mat> qr(stacked);
    CHECK(qr.rank() == 4);
}

TEST_CASE("exponentials of the generators") {
    const GroupElement identity = exp_generator({0, 0, 0, 0});
    CHECK((identity.matrix() - Mat::Identity(4, 4)).norm() < 1e-15);

    // exp((pi/2) G2) lays out exactly like J.
    const GroupElement quarter = exp_generator({0, std::numbers::pi / 2, 0, 0});
    CHECK((quarter.matrix() - complex_structure_matrix(2)).cwiseAbs().maxCoeff() < 1e-12);

    // exp(phi G2) is the explicit cos/sin block rotation.
    for (int k = 0; k < 100; ++k) {
        const double phi = 2 * std::numbers::pi * k / 100.0;
        const Mat expected = phase_rotation(phi, 2).expanded();
        CHECK((exp_generator({0, phi, 0, 0}).matrix() - expected).cwiseAbs().maxCoeff() < 1e-12);
    }

    Rng rng(62);
    for (int t = 0; t < 50; ++t) {
        std::array<double, 4> theta{};
        for (double& c : theta) c = rng.uniform_in(-3.0, 3.0);
        const GroupElement element = exp_generator(theta);
        CHECK(element.memberships().kahler_unitary);
        CHECK(element.memberships().symplectic);
    }
}

TEST_CASE("phase rotation equivalence") {
    CVec z(2);
    z << Complex(0.3, -1.2), Complex(2.0, 0.7);
    CHECK(phase_rotation_equivalence(0.0, ComplexState(z)) == 0.0);
    CHECK(phase_rotation_equivalence(std::numbers::pi, ComplexState(z)) < 1e-13);

    Rng rng(63);
    for (int t = 0; t < 100; ++t) {
        const double phi = rng.uniform_in(0, 2 * std::numbers::pi);
        CHECK(phase_rotation_equivalence(phi, ComplexState(random_cvec(rng, 2))) < 1e-12);
    }
}

TEST_CASE("closure under products and inverses") {
    Rng rng(64);
    Mat product = Mat::Identity(8, 8);
    for (int f = 0; f < 10; ++f) {
        product = product * lift_operator(random_unitary(rng, 4)).expanded();
    }
    const Memberships prod = check_memberships(product);
    CHECK(prod.kahler_unitary);
    CHECK(prod.orthogonal_residual < 1e-11);
    const Memberships inverse = check_memberships(Mat(product.transpose()));
    CHECK(inverse.kahler_unitary);
}

TEST_CASE("group element validates at construction") {
    const GroupElement j(complex_structure_matrix(2));
    CHECK(j.memberships().kahler_unitary);
    CHECK(j.matrix().rows() == 4);
}
