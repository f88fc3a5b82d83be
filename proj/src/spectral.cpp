#include "kqm/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace kqm {

namespace {

void require_k_hermitian(const KahlerOperator& L, const Tolerance& tol) {
    if (!L.k_hermitian(tol)) {
        const double s_resid = (L.S() - L.S().transpose()).norm();
        const double a_resid = (L.A() + L.A().transpose()).norm();
        throw std::invalid_argument(
            "operator is not K-Hermitian: symmetry residuals S=" + std::to_string(s_resid) +
            ", A=" + std::to_string(a_resid));
    }
}

// Deterministic sign convention: the first significant coordinate of the
// stacked [q; p] vector is made positive.
KahlerVector fix_sign(const KahlerVector& v) {
    const Vec qp = v.stacked();
    const double cutoff = 1e-7 * qp.cwiseAbs().maxCoeff();
    for (Index i = 0; i < qp.size(); ++i) {
        if (std::abs(qp[i]) > cutoff) {
            return qp[i] < 0.0 ? -v : v;
        }
    }
    return v;
}

double operator_scale(const KahlerOperator& L) {
    // Frobenius norm of the expanded matrix; each block appears twice.
    return std::sqrt(2.0) * std::hypot(L.S().norm(), L.A().norm());
}

}  // namespace

std::vector<std::pair<Index, Index>> cluster_sorted(const Vec& values, double threshold) {
    std::vector<std::pair<Index, Index>> ranges;
    Index start = 0;
    while (start < values.size()) {
        Index end = start + 1;
        while (end < values.size() && values[end] - values[end - 1] <= threshold) ++end;
        ranges.emplace_back(start, end);
        start = end;
    }
    return ranges;
}

Mat projector_from_pairs(const std::vector<JPair>& pairs) {
    if (pairs.empty()) throw std::invalid_argument("projector requires at least one pair");
    const Index two_n = 2 * pairs.front().v.dim();
    Mat e = Mat::Zero(two_n, two_n);
    for (const JPair& pair : pairs) {
        const Vec v = pair.v.stacked();
        const Vec jv = pair.jv.stacked();
        e.noalias() += v * v.transpose();
        e.noalias() += jv * jv.transpose();
    }
    return e;
}

SpectralDecomposition::SpectralDecomposition(Index n, std::vector<Cluster> clusters)
    : n_(n), clusters_(std::move(clusters)) {}

std::vector<double> SpectralDecomposition::eigenvalues() const {
    std::vector<double> out;
    out.reserve(clusters_.size());
    for (const Cluster& c : clusters_) out.push_back(c.eigenvalue);
    return out;
}

std::vector<int> SpectralDecomposition::multiplicities() const {
    std::vector<int> out;
    out.reserve(clusters_.size());
    for (const Cluster& c : clusters_) out.push_back(c.multiplicity);
    return out;
}

Mat SpectralDecomposition::reconstruct() const {
    Mat acc = Mat::Zero(2 * n_, 2 * n_);
    for (const Cluster& c : clusters_) acc += c.eigenvalue * c.projector;
    return acc;
}

Mat SpectralDecomposition::completeness() const {
    Mat acc = Mat::Zero(2 * n_, 2 * n_);
    for (const Cluster& c : clusters_) acc += c.projector;
    return acc;
}

Mat SpectralDecomposition::eigenbasis_matrix() const {
    Mat basis(2 * n_, 2 * n_);
    Index col = 0;
    for (const Cluster& c : clusters_) {
        for (const JPair& pair : c.pairs) {
            if (col >= n_) throw StructuralViolation("decomposition carries more than n J-pairs");
            basis.col(col) = pair.v.stacked();
            basis.col(n_ + col) = pair.jv.stacked();
            ++col;
        }
    }
    if (col != n_) {
        throw StructuralViolation("decomposition does not carry n J-pairs");
    }
    return basis;
}

std::pair<Mat, Mat> SpectralDecomposition::block_projectors(Index cluster) const {
    if (cluster < 0 || cluster >= static_cast<Index>(clusters_.size())) {
        throw std::invalid_argument("cluster index out of range");
    }
    Mat p = Mat::Zero(n_, n_);
    Index col = 0;
    for (Index i = 0; i < static_cast<Index>(clusters_.size()); ++i) {
        for (std::size_t k = 0; k < clusters_[i].pairs.size(); ++k, ++col) {
            if (col >= n_) throw StructuralViolation("decomposition carries more than n J-pairs");
            if (i == cluster) p(col, col) = 1.0;
        }
    }
    Mat p1 = Mat::Zero(2 * n_, 2 * n_);
    Mat p2 = Mat::Zero(2 * n_, 2 * n_);
    p1.topLeftCorner(n_, n_) = p;
    p2.bottomRightCorner(n_, n_) = p;
    return {p1, p2};
}

SpectralDecomposition eigen_structured(const KahlerOperator& L, const EigenOptions& opts) {
    require_k_hermitian(L, opts.input_tol);
    const Index n = L.dim();

    CMat h(n, n);
    h.real() = 0.5 * (L.S() + L.S().transpose());
    h.imag() = 0.5 * (L.A() - L.A().transpose());
    Eigen::SelfAdjointEigenSolver<CMat> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigensolver failed to converge");
    }

    const Vec vals = solver.eigenvalues();
    const double threshold = opts.cluster.threshold(operator_scale(L));
    std::vector<SpectralDecomposition::Cluster> clusters;
    for (const auto& [start, end] : cluster_sorted(vals, threshold)) {
        SpectralDecomposition::Cluster c;
        c.eigenvalue = vals.segment(start, end - start).mean();
        c.multiplicity = static_cast<int>(2 * (end - start));
        for (Index k = start; k < end; ++k) {
            KahlerVector v = fix_sign(gamma_inv(CVec(solver.eigenvectors().col(k))));
            KahlerVector jv = apply_J(v);
            c.pairs.push_back(JPair{std::move(v), std::move(jv)});
        }
        c.projector = projector_from_pairs(c.pairs);
        clusters.push_back(std::move(c));
    }
    return SpectralDecomposition(n, std::move(clusters));
}

SpectralDecomposition eigen_dense(const KahlerOperator& L, const EigenOptions& opts) {
    require_k_hermitian(L, opts.input_tol);
    const Index n = L.dim();

    Eigen::SelfAdjointEigenSolver<Mat> solver(L.expanded());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("symmetric eigensolver failed to converge");
    }
    const Vec vals = solver.eigenvalues();

    const double base_threshold = opts.cluster.threshold(operator_scale(L));
    auto ranges = cluster_sorted(vals, base_threshold);
    auto has_odd = [](const std::vector<std::pair<Index, Index>>& rs) {
        return std::any_of(rs.begin(), rs.end(),
                           [](const auto& r) { return (r.second - r.first) % 2 != 0; });
    };
    if (has_odd(ranges)) {
        // Double degeneracy guarantees even parity; one threshold doubling
        // absorbs borderline splits before this counts as a violation.
        ranges = cluster_sorted(vals, 2.0 * base_threshold);
        if (has_odd(ranges)) {
            throw StructuralViolation("eigenvalue cluster with odd multiplicity");
        }
    }

    std::vector<SpectralDecomposition::Cluster> clusters;
    for (const auto& [start, end] : ranges) {
        const double lambda = vals.segment(start, end - start).mean();
        std::vector<KahlerVector> members;
        for (Index k = start; k < end; ++k) {
            members.push_back(KahlerVector::from_stacked(solver.eigenvectors().col(k)));
        }
        SpectralDecomposition::Cluster c;
        c.eigenvalue = lambda;
        c.multiplicity = static_cast<int>(end - start);
        c.pairs = orthonormalize_J_paired(members, L, lambda);
        c.projector = projector_from_pairs(c.pairs);
        clusters.push_back(std::move(c));
    }
    return SpectralDecomposition(n, std::move(clusters));
}

SpectralDecomposition eigen_closed_form_n2(const KahlerOperator& L, const EigenOptions& opts) {
    if (L.dim() != 2) throw std::invalid_argument("closed form requires n == 2");
    require_k_hermitian(L, opts.input_tol);

    const double s11 = L.S()(0, 0);
    const double s22 = L.S()(1, 1);
    const double s12 = 0.5 * (L.S()(0, 1) + L.S()(1, 0));
    const double a = 0.5 * (L.A()(0, 1) - L.A()(1, 0));

    // The w formulas divide by a; route near-singular inputs to the
    // structured solver.
    if (std::abs(a) <= 1e-8 * (std::abs(s11) + std::abs(s22) + std::abs(s12) + 1.0)) {
        return eigen_structured(L, opts);
    }

    const double kappa =
        std::sqrt(4.0 * a * a + s11 * s11 - 2.0 * s11 * s22 + 4.0 * s12 * s12 + s22 * s22);
    const double lambda1 = 0.5 * (-kappa + s11 + s22);
    const double lambda2 = 0.5 * (kappa + s11 + s22);
    if (lambda2 - lambda1 <= opts.cluster.threshold(operator_scale(L))) {
        return eigen_structured(L, opts);
    }

    const double w_minus = (-kappa + s11 - s22) / (2.0 * a);
    const double w_plus = (kappa + s11 - s22) / (2.0 * a);
    const double w0 = s12 / a;
    const double denom = 1.0 + w0 * w0;
    const double rho_minus = w_minus / denom;
    const double rho_plus = w_plus / denom;
    const double n_minus = std::sqrt(denom) / std::sqrt(1.0 + w_minus * w_minus + w0 * w0);
    const double n_plus = std::sqrt(denom) / std::sqrt(1.0 + w_plus * w_plus + w0 * w0);

    auto make_cluster = [&](double lambda, double nrm, double rho) {
        Vec q(2), p(2);
        q << nrm * w0 * rho, nrm;
        p << nrm * rho, 0.0;
        KahlerVector v = fix_sign(KahlerVector(q, p).normalized());
        SpectralDecomposition::Cluster c;
        c.eigenvalue = lambda;
        c.multiplicity = 2;
        c.pairs.push_back(JPair{v, apply_J(v)});
        c.projector = projector_from_pairs(c.pairs);
        return c;
    };

    std::vector<SpectralDecomposition::Cluster> clusters;
    clusters.push_back(make_cluster(lambda1, n_minus, rho_minus));
    clusters.push_back(make_cluster(lambda2, n_plus, rho_plus));
    return SpectralDecomposition(2, std::move(clusters));
}

std::vector<JPair> orthonormalize_J_paired(const std::vector<KahlerVector>& vectors,
                                           const KahlerOperator& L, double lambda,
                                           double eig_tol) {
    if (vectors.empty()) throw std::invalid_argument("no input vectors");
    const Index n = L.dim();
    const double scale = std::max(1.0, operator_scale(L));

    Mat inputs(2 * n, static_cast<Index>(vectors.size()));
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        const KahlerVector& vin = vectors[k];
        if (vin.dim() != n) throw std::invalid_argument("vector/operator dimension mismatch");
        const double nrm = vin.norm();
        if (nrm == 0.0) throw std::invalid_argument("zero input vector");
        const KahlerVector resid = L.apply(vin) - lambda * vin;
        if (resid.norm() > eig_tol * scale * nrm) {
            throw std::invalid_argument("input is not an eigenvector for the given eigenvalue");
        }
        inputs.col(static_cast<Index>(k)) = vin.stacked();
    }

    Eigen::ColPivHouseholderQR<Mat> qr(inputs);
    qr.setThreshold(1e-10);
    const Index rank = qr.rank();

    std::vector<JPair> pairs;
    std::vector<Vec> work;
    for (Index k = 0; k < inputs.cols(); ++k) work.push_back(inputs.col(k));

    const double drop = 1e-10 * inputs.colwise().norm().maxCoeff();
    for (std::size_t k = 0; k < work.size(); ++k) {
        Vec w = work[k];
        // Re-project against the selected pairs; the J-partner is covered
        // automatically since g(Jx, y) = -g(x, Jy).
        for (const JPair& pair : pairs) {
            const Vec v = pair.v.stacked();
            const Vec jv = pair.jv.stacked();
            w -= v.dot(w) * v;
            w -= jv.dot(w) * jv;
        }
        if (w.norm() <= drop) continue;
        KahlerVector v = KahlerVector::from_stacked(w).normalized();
        pairs.push_back(JPair{v, apply_J(v)});
    }

    if (2 * static_cast<Index>(pairs.size()) != rank) {
        throw StructuralViolation(
            "input vectors do not span a J-invariant (even-dimensional) subspace");
    }
    return pairs;
}

}  // namespace kqm
