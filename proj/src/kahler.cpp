#include "kqm/kahler.hpp"

#include <cmath>

namespace kqm {

namespace {

void require_same_dim(const KahlerVector& x, const KahlerVector& y) {
    if (x.dim() != y.dim()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(x.dim()) +
                                    " vs " + std::to_string(y.dim()));
    }
}

}  // namespace

KahlerVector::KahlerVector(Vec q, Vec p) : q_(std::move(q)), p_(std::move(p)) {
    if (q_.size() != p_.size()) {
        throw std::invalid_argument("q and p must have identical length");
    }
    if (q_.size() < 1) {
        throw std::invalid_argument("Kahler vectors require n >= 1");
    }
}

KahlerVector KahlerVector::zero(Index n) {
    if (n < 1) throw std::invalid_argument("Kahler vectors require n >= 1");
    return KahlerVector(Vec::Zero(n), Vec::Zero(n));
}

KahlerVector KahlerVector::from_stacked(const Vec& qp) {
    if (qp.size() < 2 || qp.size() % 2 != 0) {
        throw std::invalid_argument("stacked vector must have even length >= 2");
    }
    const Index n = qp.size() / 2;
    return KahlerVector(qp.head(n), qp.tail(n));
}

Vec KahlerVector::stacked() const {
    Vec qp(2 * dim());
    qp << q_, p_;
    return qp;
}

KahlerVector& KahlerVector::operator+=(const KahlerVector& rhs) {
    require_same_dim(*this, rhs);
    q_ += rhs.q_;
    p_ += rhs.p_;
    return *this;
}

KahlerVector& KahlerVector::operator-=(const KahlerVector& rhs) {
    require_same_dim(*this, rhs);
    q_ -= rhs.q_;
    p_ -= rhs.p_;
    return *this;
}

KahlerVector& KahlerVector::operator*=(double s) {
    q_ *= s;
    p_ *= s;
    return *this;
}

KahlerVector KahlerVector::operator-() const { return KahlerVector(-q_, -p_); }

double KahlerVector::norm() const { return std::sqrt(metric_g(*this, *this)); }

KahlerVector KahlerVector::normalized() const {
    const double nrm = norm();
    if (nrm == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
    return KahlerVector(q_ / nrm, p_ / nrm);
}

double metric_g(const KahlerVector& x, const KahlerVector& y) {
    require_same_dim(x, y);
    return x.q().dot(y.q()) + x.p().dot(y.p());
}

double symplectic_omega(const KahlerVector& x, const KahlerVector& y) {
    require_same_dim(x, y);
    return x.q().dot(y.p()) - y.q().dot(x.p());
}

KahlerVector apply_J(const KahlerVector& x) { return KahlerVector(-x.p(), x.q()); }

Mat complex_structure_matrix(Index n) {
    if (n < 1) throw std::invalid_argument("complex structure requires n >= 1");
    Mat j = Mat::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = -Mat::Identity(n, n);
    j.bottomLeftCorner(n, n) = Mat::Identity(n, n);
    return j;
}

}  // namespace kqm
