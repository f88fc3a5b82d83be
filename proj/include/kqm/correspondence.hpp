#pragma once

#include "kqm/kahler.hpp"

namespace kqm {

/// Complex n-vector on the Hilbert-space side of the gamma correspondence.
class ComplexState {
  public:
    explicit ComplexState(CVec entries);

    Index dim() const { return entries_.size(); }
    const CVec& entries() const { return entries_; }

  private:
    CVec entries_;
};

/// Complex n x n matrix with a structural tag validated at construction.
class ComplexOperator {
  public:
    enum class Kind { hermitian, unitary, projector, general };

    static ComplexOperator hermitian(CMat m, double tol = 1e-10);
    static ComplexOperator unitary(CMat m, double tol = 1e-10);
    static ComplexOperator projector(CMat m, double tol = 1e-10);
    static ComplexOperator general(CMat m);
    /// Attaches the strongest tag that holds within tol
    /// (projector > unitary > hermitian > general).
    static ComplexOperator classify(CMat m, double tol = 1e-10);

    Kind kind() const { return kind_; }
    Index dim() const { return m_.rows(); }
    const CMat& matrix() const { return m_; }

  private:
    ComplexOperator(CMat m, Kind kind);

    CMat m_;
    Kind kind_;
};

const char* to_string(ComplexOperator::Kind kind);

/// Real 2n x 2n operator commuting with J, stored as its (S, A) blocks and
/// expanded to [[S,-A],[A,S]] only at matrix boundaries. K-Hermitian exactly
/// when S is symmetric and A antisymmetric (the lift of a complex Hermitian
/// matrix S + iA).
class KahlerOperator {
  public:
    KahlerOperator(Mat S, Mat A);

    static KahlerOperator identity(Index n);
    /// Splits a 2n x 2n matrix into blocks; throws if it does not commute
    /// with J (X11 != X22 or X12 != -X21 beyond tol, relative Frobenius).
    static KahlerOperator from_expanded(const Mat& m, double tol = 1e-10);

    Index dim() const { return S_.rows(); }
    const Mat& S() const { return S_; }
    const Mat& A() const { return A_; }
    Mat expanded() const;

    bool k_hermitian(const Tolerance& tol = {}) const;

    KahlerVector apply(const KahlerVector& eta) const;
    /// Composition; corresponds to the complex product through the lift.
    KahlerOperator operator*(const KahlerOperator& rhs) const;
    KahlerOperator operator+(const KahlerOperator& rhs) const;
    KahlerOperator scaled(double s) const;
    /// lift(L)^T = lift(L^dagger): blocks (S^T, -A^T).
    KahlerOperator transpose() const;

  private:
    Mat S_;
    Mat A_;
};

/// gamma(q,p) = q + ip.
ComplexState gamma(const KahlerVector& x);
/// gamma^{-1}(psi): exact real/imaginary split.
KahlerVector gamma_inv(const ComplexState& psi);
KahlerVector gamma_inv(const CVec& psi);

/// Complex inner product, conjugate-linear in the FIRST argument;
/// equals g + i*omega through gamma^{-1}.
Complex complex_inner(const ComplexState& psi1, const ComplexState& psi2);

/// L = S + iA -> [[S,-A],[A,S]]; gamma(lift(L) eta) = L gamma(eta).
/// Accepts any complex matrix; the result is K-Hermitian iff L is Hermitian.
KahlerOperator lift_operator(const ComplexOperator& L);
KahlerOperator lift_operator(const CMat& L);

/// Exact inverse of lift_operator on its image: [[S,-A],[A,S]] -> S + iA.
ComplexOperator lower_operator(const KahlerOperator& Lk);
/// Validating overload for raw 2n x 2n matrices.
ComplexOperator lower_operator(const Mat& expanded, double tol = 1e-10);

}  // namespace kqm
