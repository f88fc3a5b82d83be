#include "kqm/groups.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace kqm {

Memberships check_memberships(const Mat& m, double tol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("membership checks require a square matrix");
    if (m.rows() < 2 || m.rows() % 2 != 0) {
        throw std::invalid_argument("membership checks require even dimension 2n >= 2");
    }
    const Index n = m.rows() / 2;
    const Mat j = complex_structure_matrix(n);
    const Mat id = Mat::Identity(2 * n, 2 * n);

    const double nrm = m.norm();
    const double quad_scale = std::max(1.0, nrm * nrm);
    const double lin_scale = std::max(1.0, nrm);

    Memberships out;
    out.orthogonal_residual = (m.transpose() * m - id).norm() / quad_scale;
    out.symplectic_residual = (m.transpose() * j * m - j).norm() / quad_scale;
    out.j_commuting_residual = (m * j - j * m).norm() / lin_scale;
    out.block_form_residual =
        std::hypot((m.topLeftCorner(n, n) - m.bottomRightCorner(n, n)).norm(),
                   (m.topRightCorner(n, n) + m.bottomLeftCorner(n, n)).norm()) /
        lin_scale;

    out.orthogonal = out.orthogonal_residual < tol;
    out.symplectic = out.symplectic_residual < tol;
    out.j_commuting = out.j_commuting_residual < tol;
    out.block_form = out.block_form_residual < tol;
    out.kahler_unitary = out.block_form && out.orthogonal;
    return out;
}

GroupElement::GroupElement(Mat m, double tol)
    : m_(std::move(m)), memberships_(check_memberships(m_, tol)) {}

const std::array<Mat, 4>& u2_generators() {
    static const std::array<Mat, 4> generators = [] {
        const CMat i_unit = Complex(0, 1) * CMat::Identity(2, 2);
        CMat sx(2, 2), sy(2, 2), sz(2, 2);
        sx << 0, 1, 1, 0;
        sy << 0, Complex(0, -1), Complex(0, 1), 0;
        sz << 1, 0, 0, -1;
        return std::array<Mat, 4>{
            lift_operator(CMat(Complex(0, 1) * sy)).expanded(),
            lift_operator(i_unit).expanded(),
            lift_operator(CMat(Complex(0, 1) * sx)).expanded(),
            lift_operator(CMat(Complex(0, 1) * sz)).expanded(),
        };
    }();
    return generators;
}

GroupElement exp_generator(const std::array<double, 4>& theta) {
    const auto& g = u2_generators();
    Mat gen = Mat::Zero(4, 4);
    for (std::size_t i = 0; i < 4; ++i) gen += theta[i] * g[i];
    return GroupElement(gen.exp());
}

KahlerOperator phase_rotation(double phi, Index n) {
    return KahlerOperator(std::cos(phi) * Mat::Identity(n, n), std::sin(phi) * Mat::Identity(n, n));
}

double phase_rotation_equivalence(double phi, const ComplexState& z) {
    const CVec rotated = std::exp(Complex(0, phi)) * z.entries();
    const KahlerVector lhs = gamma_inv(rotated);
    const KahlerVector rhs = phase_rotation(phi, z.dim()).apply(gamma_inv(z));
    return (lhs - rhs).stacked().cwiseAbs().maxCoeff();
}

}  // namespace kqm
