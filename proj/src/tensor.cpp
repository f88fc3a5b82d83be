#include "kqm/tensor.hpp"

#include <vector>

namespace kqm {

namespace {

void require_same_shape(const Mat& a, const Mat& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string("tensor block shape mismatch: ") + what);
    }
}

Vec flatten_row_major(const Mat& m) {
    return Mat(m.transpose()).reshaped();
}

double frob_dot(const Mat& a, const Mat& b) { return a.cwiseProduct(b).sum(); }

}  // namespace

RealTensorVector::RealTensorVector(Mat qq, Mat pq, Mat qp, Mat pp)
    : qq_(std::move(qq)), pq_(std::move(pq)), qp_(std::move(qp)), pp_(std::move(pp)) {
    require_same_shape(qq_, pq_, "pq");
    require_same_shape(qq_, qp_, "qp");
    require_same_shape(qq_, pp_, "pp");
    if (qq_.rows() < 1 || qq_.cols() < 1) {
        throw std::invalid_argument("tensor factors require n >= 1");
    }
}

RealTensorVector RealTensorVector::zero(Index n1, Index n2) {
    return RealTensorVector(Mat::Zero(n1, n2), Mat::Zero(n1, n2), Mat::Zero(n1, n2),
                            Mat::Zero(n1, n2));
}

Vec RealTensorVector::flattened() const {
    // Basis order (s1, a) major over (s2, b): index
    // (s1 n1 + a) * 2 n2 + (s2 n2 + b), matching kron([q1;p1], [q2;p2]).
    const Index n1 = dim1();
    const Index n2 = dim2();
    Vec flat(4 * n1 * n2);
    for (Index a = 0; a < n1; ++a) {
        for (Index b = 0; b < n2; ++b) {
            flat[a * 2 * n2 + b] = qq_(a, b);
            flat[a * 2 * n2 + n2 + b] = qp_(a, b);
            flat[(n1 + a) * 2 * n2 + b] = pq_(a, b);
            flat[(n1 + a) * 2 * n2 + n2 + b] = pp_(a, b);
        }
    }
    return flat;
}

RealTensorVector RealTensorVector::from_flattened(const Vec& flat, Index n1, Index n2) {
    if (flat.size() != 4 * n1 * n2) {
        throw std::invalid_argument("flattened tensor has wrong length");
    }
    Mat qq(n1, n2), pq(n1, n2), qp(n1, n2), pp(n1, n2);
    for (Index a = 0; a < n1; ++a) {
        for (Index b = 0; b < n2; ++b) {
            qq(a, b) = flat[a * 2 * n2 + b];
            qp(a, b) = flat[a * 2 * n2 + n2 + b];
            pq(a, b) = flat[(n1 + a) * 2 * n2 + b];
            pp(a, b) = flat[(n1 + a) * 2 * n2 + n2 + b];
        }
    }
    return RealTensorVector(std::move(qq), std::move(pq), std::move(qp), std::move(pp));
}

RealTensorVector tensor_R(const KahlerVector& x, const KahlerVector& y) {
    return RealTensorVector(x.q() * y.q().transpose(), x.p() * y.q().transpose(),
                            x.q() * y.p().transpose(), x.p() * y.p().transpose());
}

KahlerVector tensor_K(const KahlerVector& x, const KahlerVector& y) {
    const Mat q = x.q() * y.q().transpose() - x.p() * y.p().transpose();
    const Mat p = x.q() * y.p().transpose() + x.p() * y.q().transpose();
    return KahlerVector(flatten_row_major(q), flatten_row_major(p));
}

KahlerVector projector_P(const RealTensorVector& t) {
    return KahlerVector(flatten_row_major(t.qq() - t.pp()), flatten_row_major(t.qp() + t.pq()));
}

Eigen::SparseMatrix<double> projector_P_matrix(Index n1, Index n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("tensor factors require n >= 1");
    const Index n = n1 * n2;
    Eigen::SparseMatrix<double> p(2 * n, 4 * n);
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(static_cast<std::size_t>(4 * n));
    for (Index a = 0; a < n1; ++a) {
        for (Index b = 0; b < n2; ++b) {
            const Index out = a * n2 + b;
            entries.emplace_back(out, a * 2 * n2 + b, 1.0);                  // (++) -> q
            entries.emplace_back(out, (n1 + a) * 2 * n2 + n2 + b, -1.0);     // (--) -> q
            entries.emplace_back(n + out, a * 2 * n2 + n2 + b, 1.0);         // (+-) -> p
            entries.emplace_back(n + out, (n1 + a) * 2 * n2 + b, 1.0);       // (-+) -> p
        }
    }
    p.setFromTriplets(entries.begin(), entries.end());
    return p;
}

double tensor_r_metric(const RealTensorVector& t, const RealTensorVector& u) {
    if (t.dim1() != u.dim1() || t.dim2() != u.dim2()) {
        throw std::invalid_argument("tensor dimension mismatch");
    }
    return frob_dot(t.qq(), u.qq()) + frob_dot(t.pq(), u.pq()) + frob_dot(t.qp(), u.qp()) +
           frob_dot(t.pp(), u.pp());
}

double tensor_r_omega(const RealTensorVector& t, const RealTensorVector& u) {
    if (t.dim1() != u.dim1() || t.dim2() != u.dim2()) {
        throw std::invalid_argument("tensor dimension mismatch");
    }
    // omega (x) g pairs the first sign slot, g (x) omega the second.
    const double omega_g = frob_dot(t.qq(), u.pq()) - frob_dot(t.pq(), u.qq()) +
                           frob_dot(t.qp(), u.pp()) - frob_dot(t.pp(), u.qp());
    const double g_omega = frob_dot(t.qq(), u.qp()) - frob_dot(t.qp(), u.qq()) +
                           frob_dot(t.pq(), u.pp()) - frob_dot(t.pp(), u.pq());
    return omega_g + g_omega;
}

BilinearFormResiduals tensor_bilinear_residuals(const KahlerVector& x, const KahlerVector& y,
                                                const KahlerVector& u, const KahlerVector& v) {
    const double g_xu = metric_g(x, u);
    const double g_yv = metric_g(y, v);
    const double o_xu = symplectic_omega(x, u);
    const double o_yv = symplectic_omega(y, v);

    const RealTensorVector xr = tensor_R(x, y);
    const RealTensorVector ur = tensor_R(u, v);
    const KahlerVector xk = tensor_K(x, y);
    const KahlerVector uk = tensor_K(u, v);

    BilinearFormResiduals r;
    r.g_r = std::abs(tensor_r_metric(xr, ur) - g_xu * g_yv);
    r.omega_r = std::abs(tensor_r_omega(xr, ur) - (o_xu * g_yv + g_xu * o_yv));
    r.g_k = std::abs(metric_g(xk, uk) - (g_xu * g_yv - o_xu * o_yv));
    r.omega_k = std::abs(symplectic_omega(xk, uk) - (g_xu * o_yv + o_xu * g_yv));
    return r;
}

}  // namespace kqm
