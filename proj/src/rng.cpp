#include "kqm/rng.hpp"

#include <Eigen/QR>

#include <cmath>
#include <numbers>

namespace kqm {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t h = splitmix64(master);
    h = splitmix64(h ^ stream);
    h = splitmix64(h ^ index);
    return h;
}

int Rng::uniform_int(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("empty integer range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

double Rng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // u1 in (0, 1] so the log stays finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

Vec random_vec(Rng& rng, Index n) {
    Vec v(n);
    for (Index i = 0; i < n; ++i) v[i] = rng.normal();
    return v;
}

Mat random_mat(Rng& rng, Index rows, Index cols) {
    Mat m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) m(i, j) = rng.normal();
    }
    return m;
}

CVec random_cvec(Rng& rng, Index n) {
    CVec v(n);
    for (Index i = 0; i < n; ++i) v[i] = Complex(rng.normal(), rng.normal());
    return v;
}

CMat random_cmat(Rng& rng, Index n) {
    CMat m(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) m(i, j) = Complex(rng.normal(), rng.normal());
    }
    return m;
}

KahlerVector random_state(Rng& rng, Index n) {
    return KahlerVector(random_vec(rng, n), random_vec(rng, n)).normalized();
}

KahlerOperator random_k_hermitian(Rng& rng, Index n) {
    const Mat s = random_mat(rng, n, n);
    const Mat a = random_mat(rng, n, n);
    return KahlerOperator(0.5 * (s + s.transpose()), 0.5 * (a - a.transpose()));
}

CMat random_unitary(Rng& rng, Index n) {
    const CMat gauss = random_cmat(rng, n);
    Eigen::HouseholderQR<CMat> qr(gauss);
    CMat q = qr.householderQ();
    const CVec diag = qr.matrixQR().diagonal();
    for (Index i = 0; i < n; ++i) {
        const double mag = std::abs(diag[i]);
        q.col(i) *= mag > 0.0 ? diag[i] / mag : Complex(1.0, 0.0);
    }
    return q;
}

CMat random_hermitian(Rng& rng, Index n) {
    const CMat g = random_cmat(rng, n);
    return 0.5 * (g + g.adjoint());
}

CMat random_projector(Rng& rng, Index n) {
    const int rank = rng.uniform_int(1, static_cast<int>(n));
    const CMat u = random_unitary(rng, n);
    const CMat cols = u.leftCols(rank);
    return cols * cols.adjoint();
}

CVec random_complex_state(Rng& rng, Index n) {
    const CVec v = random_cvec(rng, n);
    return v / v.norm();
}

}  // namespace kqm
