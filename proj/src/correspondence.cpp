#include "kqm/correspondence.hpp"

#include <cmath>

namespace kqm {

namespace {

double rel_scale(const CMat& m) { return std::max(1.0, m.norm()); }

bool is_hermitian(const CMat& m, double tol) {
    return (m - m.adjoint()).norm() <= tol * rel_scale(m);
}

bool is_unitary(const CMat& m, double tol) {
    const CMat gram = m.adjoint() * m;
    return (gram - CMat::Identity(m.rows(), m.cols())).norm() <= tol * std::max(1.0, gram.norm());
}

bool is_projector(const CMat& m, double tol) {
    return is_hermitian(m, tol) && (m * m - m).norm() <= tol * rel_scale(m);
}

void require_square(const CMat& m) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw std::invalid_argument("operator must be a square matrix with n >= 1");
    }
}

}  // namespace

ComplexState::ComplexState(CVec entries) : entries_(std::move(entries)) {
    if (entries_.size() < 1) throw std::invalid_argument("complex states require n >= 1");
    if (!entries_.allFinite()) throw std::invalid_argument("complex state entries must be finite");
}

ComplexOperator::ComplexOperator(CMat m, Kind kind) : m_(std::move(m)), kind_(kind) {}

ComplexOperator ComplexOperator::hermitian(CMat m, double tol) {
    require_square(m);
    if (!is_hermitian(m, tol)) throw std::invalid_argument("matrix is not Hermitian within tolerance");
    return ComplexOperator(std::move(m), Kind::hermitian);
}

ComplexOperator ComplexOperator::unitary(CMat m, double tol) {
    require_square(m);
    if (!is_unitary(m, tol)) throw std::invalid_argument("matrix is not unitary within tolerance");
    return ComplexOperator(std::move(m), Kind::unitary);
}

ComplexOperator ComplexOperator::projector(CMat m, double tol) {
    require_square(m);
    if (!is_projector(m, tol)) throw std::invalid_argument("matrix is not a projector within tolerance");
    return ComplexOperator(std::move(m), Kind::projector);
}

ComplexOperator ComplexOperator::general(CMat m) {
    require_square(m);
    return ComplexOperator(std::move(m), Kind::general);
}

ComplexOperator ComplexOperator::classify(CMat m, double tol) {
    require_square(m);
    if (is_projector(m, tol)) return ComplexOperator(std::move(m), Kind::projector);
    if (is_unitary(m, tol)) return ComplexOperator(std::move(m), Kind::unitary);
    if (is_hermitian(m, tol)) return ComplexOperator(std::move(m), Kind::hermitian);
    return ComplexOperator(std::move(m), Kind::general);
}

const char* to_string(ComplexOperator::Kind kind) {
    switch (kind) {
        case ComplexOperator::Kind::hermitian: return "hermitian";
        case ComplexOperator::Kind::unitary: return "unitary";
        case ComplexOperator::Kind::projector: return "projector";
        case ComplexOperator::Kind::general: return "general";
    }
    return "general";
}

KahlerOperator::KahlerOperator(Mat S, Mat A) : S_(std::move(S)), A_(std::move(A)) {
    if (S_.rows() != S_.cols() || A_.rows() != A_.cols() || S_.rows() != A_.rows()) {
        throw std::invalid_argument("S and A must be square matrices of equal size");
    }
    if (S_.rows() < 1) throw std::invalid_argument("Kahler operators require n >= 1");
}

KahlerOperator KahlerOperator::identity(Index n) {
    return KahlerOperator(Mat::Identity(n, n), Mat::Zero(n, n));
}

KahlerOperator KahlerOperator::from_expanded(const Mat& m, double tol) {
    if (m.rows() != m.cols() || m.rows() < 2 || m.rows() % 2 != 0) {
        throw std::invalid_argument("expanded operator must be square of even size >= 2");
    }
    const Index n = m.rows() / 2;
    const Mat x11 = m.topLeftCorner(n, n);
    const Mat x12 = m.topRightCorner(n, n);
    const Mat x21 = m.bottomLeftCorner(n, n);
    const Mat x22 = m.bottomRightCorner(n, n);
    const double scale = std::max(1.0, m.norm());
    const double s_resid = (x11 - x22).norm();
    const double a_resid = (x12 + x21).norm();
    if (s_resid > tol * scale) {
        throw std::invalid_argument("matrix does not commute with J: S-blocks differ (residual " +
                                    std::to_string(s_resid) + ")");
    }
    if (a_resid > tol * scale) {
        throw std::invalid_argument("matrix does not commute with J: A-blocks differ (residual " +
                                    std::to_string(a_resid) + ")");
    }
    return KahlerOperator(0.5 * (x11 + x22), 0.5 * (x21 - x12));
}

Mat KahlerOperator::expanded() const {
    const Index n = dim();
    Mat m(2 * n, 2 * n);
    m.topLeftCorner(n, n) = S_;
    m.topRightCorner(n, n) = -A_;
    m.bottomLeftCorner(n, n) = A_;
    m.bottomRightCorner(n, n) = S_;
    return m;
}

bool KahlerOperator::k_hermitian(const Tolerance& tol) const {
    const double scale = std::max(1.0, std::max(S_.norm(), A_.norm()));
    const double bound = std::max(tol.abs, tol.rel * scale);
    return (S_ - S_.transpose()).norm() <= bound && (A_ + A_.transpose()).norm() <= bound;
}

KahlerVector KahlerOperator::apply(const KahlerVector& eta) const {
    if (eta.dim() != dim()) throw std::invalid_argument("operator/vector dimension mismatch");
    return KahlerVector(S_ * eta.q() - A_ * eta.p(), A_ * eta.q() + S_ * eta.p());
}

KahlerOperator KahlerOperator::operator*(const KahlerOperator& rhs) const {
    if (rhs.dim() != dim()) throw std::invalid_argument("operator dimension mismatch");
    return KahlerOperator(S_ * rhs.S_ - A_ * rhs.A_, S_ * rhs.A_ + A_ * rhs.S_);
}

KahlerOperator KahlerOperator::operator+(const KahlerOperator& rhs) const {
    if (rhs.dim() != dim()) throw std::invalid_argument("operator dimension mismatch");
    return KahlerOperator(S_ + rhs.S_, A_ + rhs.A_);
}

KahlerOperator KahlerOperator::scaled(double s) const { return KahlerOperator(s * S_, s * A_); }

KahlerOperator KahlerOperator::transpose() const {
    return KahlerOperator(S_.transpose(), -A_.transpose());
}

ComplexState gamma(const KahlerVector& x) {
    CVec psi(x.dim());
    psi.real() = x.q();
    psi.imag() = x.p();
    return ComplexState(std::move(psi));
}

KahlerVector gamma_inv(const CVec& psi) {
    if (psi.size() < 1) throw std::invalid_argument("complex states require n >= 1");
    return KahlerVector(psi.real(), psi.imag());
}

KahlerVector gamma_inv(const ComplexState& psi) { return gamma_inv(psi.entries()); }

Complex complex_inner(const ComplexState& psi1, const ComplexState& psi2) {
    if (psi1.dim() != psi2.dim()) throw std::invalid_argument("dimension mismatch");
    return psi1.entries().dot(psi2.entries());
}

KahlerOperator lift_operator(const CMat& L) {
    require_square(L);
    return KahlerOperator(L.real(), L.imag());
}

KahlerOperator lift_operator(const ComplexOperator& L) { return lift_operator(L.matrix()); }

ComplexOperator lower_operator(const KahlerOperator& Lk) {
    CMat m(Lk.dim(), Lk.dim());
    m.real() = Lk.S();
    m.imag() = Lk.A();
    return ComplexOperator::classify(std::move(m));
}

ComplexOperator lower_operator(const Mat& expanded, double tol) {
    return lower_operator(KahlerOperator::from_expanded(expanded, tol));
}

}  // namespace kqm
