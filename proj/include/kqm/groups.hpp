#pragma once

#include "kqm/correspondence.hpp"

#include <array>

namespace kqm {

/// Outcome of the Kahler-unitary membership tests on a real 2n x 2n matrix.
/// kahler_unitary means block form (cV) together with M M^T = I, and
/// coincides with orthogonal && symplectic as well as with orthogonal &&
/// J-commuting.
struct Memberships {
    bool orthogonal = false;
    bool symplectic = false;
    bool j_commuting = false;
    bool block_form = false;
    bool kahler_unitary = false;

    double orthogonal_residual = 0.0;
    double symplectic_residual = 0.0;
    double j_commuting_residual = 0.0;
    double block_form_residual = 0.0;
};

/// Tests each membership with Frobenius residuals scaled by the matrix norm.
/// Throws on odd dimension.
Memberships check_memberships(const Mat& m, double tol = 1e-9);

/// Real 2n x 2n matrix with its memberships verified at construction.
class GroupElement {
  public:
    explicit GroupElement(Mat m, double tol = 1e-9);

    const Mat& matrix() const { return m_; }
    const Memberships& memberships() const { return memberships_; }

  private:
    Mat m_;
    Memberships memberships_;
};

/// The four generators of the u(2) algebra in K^4, each skew-symmetric and
/// J-commuting: G1 = lift(i sigma_y), G2 = lift(i I) = J, G3 = lift(i sigma_x),
/// G4 = lift(i sigma_z). G2 spans the U(1) phase center; the other three span
/// the su(2) part.
const std::array<Mat, 4>& u2_generators();

/// exp(sum theta_i G_i); the result passes all four memberships.
GroupElement exp_generator(const std::array<double, 4>& theta);

/// The phase rotation g(phi) = exp(phi * lift(iI)) in K^{2n}: blocks
/// [[cos I, -sin I], [sin I, cos I]]. For n = 2 this is g_2(phi).
KahlerOperator phase_rotation(double phi, Index n);

/// Max-norm residual of gamma^{-1}(e^{i phi} Z) == g(phi) gamma^{-1}(Z).
double phase_rotation_equivalence(double phi, const ComplexState& z);

}  // namespace kqm
