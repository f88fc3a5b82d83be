#pragma once

#include <Eigen/Dense>

#include <stdexcept>

namespace kqm {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using Index = Eigen::Index;
using Complex = std::complex<double>;

/// Default comparison tolerances: relative 1e-10 with absolute floor 1e-13.
struct Tolerance {
    double rel = 1e-10;
    double abs = 1e-13;

    bool close(double a, double b) const {
        const double scale = std::max(std::abs(a), std::abs(b));
        return std::abs(a - b) <= std::max(abs, rel * scale);
    }
};

/// Thrown when an input violates a structural invariant (symmetry, parity,
/// J-compatibility) rather than a simple argument contract.
class StructuralViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Element of the Kähler space K^{2n}: a pair of real n-vectors (q, p).
/// q and p are stored separately; the stacked 2n form [q; p] is produced
/// only at matrix-interface boundaries.
class KahlerVector {
  public:
    KahlerVector(Vec q, Vec p);

    static KahlerVector zero(Index n);
    /// Splits a stacked 2n vector [q; p] back into the pair.
    static KahlerVector from_stacked(const Vec& qp);

    Index dim() const { return q_.size(); }
    const Vec& q() const { return q_; }
    const Vec& p() const { return p_; }
    Vec stacked() const;

    KahlerVector& operator+=(const KahlerVector& rhs);
    KahlerVector& operator-=(const KahlerVector& rhs);
    KahlerVector& operator*=(double s);
    friend KahlerVector operator+(KahlerVector a, const KahlerVector& b) { return a += b; }
    friend KahlerVector operator-(KahlerVector a, const KahlerVector& b) { return a -= b; }
    friend KahlerVector operator*(double s, KahlerVector v) { return v *= s; }
    friend KahlerVector operator*(KahlerVector v, double s) { return v *= s; }
    KahlerVector operator-() const;

    /// g-norm sqrt(g(x,x)).
    double norm() const;
    /// Returns the vector scaled to g-norm 1; throws on the zero vector.
    KahlerVector normalized() const;

  private:
    Vec q_;
    Vec p_;
};

/// g(x,y) = sum_a (x.q_a y.q_a + x.p_a y.p_a). Symmetric, positive definite.
double metric_g(const KahlerVector& x, const KahlerVector& y);

/// omega(x,y) = sum_a (x.q_a y.p_a - y.q_a x.p_a). Antisymmetric, non-degenerate.
double symplectic_omega(const KahlerVector& x, const KahlerVector& y);

/// J(q,p) = (-p, q); J^2 = -identity.
KahlerVector apply_J(const KahlerVector& x);

/// The 2n x 2n matrix [[0,-I],[I,0]] of J, materialized on request.
Mat complex_structure_matrix(Index n);

}  // namespace kqm
