#pragma once

#include "kqm/kahler.hpp"

#include <Eigen/SparseCore>

namespace kqm {

/// Element of the plain real tensor product R^{2n1} (x) R^{2n2}, stored as
/// the four n1 x n2 coefficient blocks over the sign basis:
///   qq = (+,+), pq = (-,+), qp = (+,-), pp = (-,-).
/// Flattened layout follows the Kronecker product of stacked [q; p] vectors.
class RealTensorVector {
  public:
    RealTensorVector(Mat qq, Mat pq, Mat qp, Mat pp);

    static RealTensorVector zero(Index n1, Index n2);
    static RealTensorVector from_flattened(const Vec& flat, Index n1, Index n2);

    Index dim1() const { return qq_.rows(); }
    Index dim2() const { return qq_.cols(); }
    /// Total real dimension 4 n1 n2.
    Index size() const { return 4 * dim1() * dim2(); }

    const Mat& qq() const { return qq_; }
    const Mat& pq() const { return pq_; }
    const Mat& qp() const { return qp_; }
    const Mat& pp() const { return pp_; }

    /// Coefficient order matching kron(stacked(x), stacked(y)).
    Vec flattened() const;

  private:
    Mat qq_, pq_, qp_, pp_;
};

/// x (x)_R y: slot coefficients (++) = q1 q2^T, (-+) = p1 q2^T,
/// (+-) = q1 p2^T, (--) = p1 p2^T. Bilinear in each factor.
RealTensorVector tensor_R(const KahlerVector& x, const KahlerVector& y);

/// x (x)_K y in K^{2 n1 n2}: q-part q1q2 - p1p2, p-part q1p2 + p1q2 per
/// component pair (a, b), flattened row-major in a. Satisfies
/// gamma(x (x)_K y) = gamma(x) (x)_C gamma(y).
KahlerVector tensor_K(const KahlerVector& x, const KahlerVector& y);

/// The projector P relating the two products: q = (++) - (--),
/// p = (+-) + (-+); P(tensor_R(x, y)) == tensor_K(x, y).
KahlerVector projector_P(const RealTensorVector& t);

/// P as an explicit sparse 2 n1 n2 x 4 n1 n2 matrix over flattened layouts.
Eigen::SparseMatrix<double> projector_P_matrix(Index n1, Index n2);

/// g on the (x)_R space: the tensor form g (x) g (the flat dot product).
double tensor_r_metric(const RealTensorVector& t, const RealTensorVector& u);

/// omega on the (x)_R space: the tensor form omega (x) g + g (x) omega.
double tensor_r_omega(const RealTensorVector& t, const RealTensorVector& u);

/// Residuals of the four bilinear-form laws on one quadruple:
///   g((x)_R)     = g.g
///   omega((x)_R) = omega.g + g.omega
///   g((x)_K)     = g.g - omega.omega
///   omega((x)_K) = g.omega + omega.g
struct BilinearFormResiduals {
    double g_r;
    double omega_r;
    double g_k;
    double omega_k;

    double max() const { return std::max(std::max(g_r, omega_r), std::max(g_k, omega_k)); }
};
BilinearFormResiduals tensor_bilinear_residuals(const KahlerVector& x, const KahlerVector& y,
                                                const KahlerVector& u, const KahlerVector& v);

}  // namespace kqm
