#include "kqm/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace kqm::oracle {

Complex inner(const CVec& psi1, const CVec& psi2) {
    if (psi1.size() != psi2.size()) throw std::invalid_argument("dimension mismatch");
    Complex acc(0.0, 0.0);
    for (Index k = 0; k < psi1.size(); ++k) {
        acc += std::conj(psi1[k]) * psi2[k];
    }
    return acc;
}

HermitianEigen eigen_hermitian(const CMat& H, double tol) {
    if (H.rows() != H.cols() || H.rows() < 1) {
        throw std::invalid_argument("expected a square matrix");
    }
    if ((H - H.adjoint()).norm() > tol * std::max(1.0, H.norm())) {
        throw std::invalid_argument("matrix is not Hermitian within tolerance");
    }
    Eigen::SelfAdjointEigenSolver<CMat> solver(0.5 * (H + H.adjoint()));
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigensolver failed to converge");
    }
    return HermitianEigen{solver.eigenvalues(), solver.eigenvectors()};
}

BornResult born(const CVec& psi, const CMat& H, double tol) {
    if (psi.size() != H.rows()) throw std::invalid_argument("state/operator dimension mismatch");
    const HermitianEigen eig = eigen_hermitian(H, tol);
    // Same clustering rule as the structured side, applied to the reference
    // spectrum, so probability lists line up cluster-by-cluster. The scale
    // matches the expanded 2n x 2n Frobenius norm.
    const double threshold = std::max(1e-12, 1e-9 * std::sqrt(2.0) * H.norm());
    BornResult out;
    Index start = 0;
    while (start < eig.eigenvalues.size()) {
        Index end = start + 1;
        while (end < eig.eigenvalues.size() &&
               eig.eigenvalues[end] - eig.eigenvalues[end - 1] <= threshold) {
            ++end;
        }
        double lambda = 0.0;
        double prob = 0.0;
        for (Index k = start; k < end; ++k) {
            lambda += eig.eigenvalues[k];
            prob += std::norm(inner(eig.eigenvectors.col(k), psi));
        }
        out.eigenvalues.push_back(lambda / static_cast<double>(end - start));
        out.probabilities.push_back(prob);
        out.ranks.push_back(static_cast<int>(end - start));
        start = end;
    }
    return out;
}

CVec kron(const CVec& a, const CVec& b) {
    CVec out(a.size() * b.size());
    for (Index i = 0; i < a.size(); ++i) {
        for (Index j = 0; j < b.size(); ++j) {
            out[i * b.size() + j] = a[i] * b[j];
        }
    }
    return out;
}

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Complex correlation(const std::vector<CMat>& ops, const CVec& psi, const CVec& phi) {
    if (ops.empty()) throw std::invalid_argument("correlation requires at least one operator");
    if (psi.size() != phi.size()) throw std::invalid_argument("state dimension mismatch");
    CVec acc = psi;
    // L1 ... Lk psi: the rightmost operator applies first.
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (it->rows() != it->cols() || it->rows() != acc.size()) {
            throw std::invalid_argument("operator dimension mismatch");
        }
        acc = (*it) * acc;
    }
    return inner(acc, phi);
}

ClosedForm2 eigen2_closed_form(double s11, double s12, double s22, double a) {
    if (a == 0.0) throw std::invalid_argument("closed form requires a != 0");
    ClosedForm2 out;
    out.kappa = std::sqrt(4.0 * a * a + s11 * s11 - 2.0 * s11 * s22 + 4.0 * s12 * s12 + s22 * s22);
    out.lambda1 = 0.5 * (-out.kappa + s11 + s22);
    out.lambda2 = 0.5 * (out.kappa + s11 + s22);
    const double w_minus = (-out.kappa + s11 - s22) / (2.0 * a);
    const double w_plus = (out.kappa + s11 - s22) / (2.0 * a);
    const double w0 = s12 / a;
    const double denom = 1.0 + w0 * w0;
    const double n_minus = std::sqrt(denom) / std::sqrt(1.0 + w_minus * w_minus + w0 * w0);
    const double n_plus = std::sqrt(denom) / std::sqrt(1.0 + w_plus * w_plus + w0 * w0);
    out.v1 = CVec(2);
    out.v1 << n_minus * w_minus * Complex(w0, 1.0) / denom, Complex(n_minus, 0.0);
    out.v2 = CVec(2);
    out.v2 << n_plus * w_plus * Complex(w0, 1.0) / denom, Complex(n_plus, 0.0);
    return out;
}

}  // namespace kqm::oracle
