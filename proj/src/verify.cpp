#include "kqm/verify.hpp"

#include "kqm/oracle.hpp"
#include "kqm/rng.hpp"
#include "kqm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace kqm {

using nlohmann::json;

namespace {

double rel_resid(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double rel_resid(Complex a, Complex b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

std::uint64_t check_stream(const std::string& name) {
    // FNV-1a over the check name; stable stream ids independent of run order.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

class SuiteBuilder {
  public:
    SuiteBuilder(std::string suite, const VerifyOptions& opts, std::vector<int> default_dims,
                 int default_trials, double headline_tol) {
        report_.suite = std::move(suite);
        report_.seed = opts.seed;
        report_.dims = opts.dims.empty() ? std::move(default_dims) : opts.dims;
        report_.trials = opts.trials > 0 ? opts.trials : default_trials;
        report_.tolerance = opts.tol_override.value_or(headline_tol);
        tol_override_ = opts.tol_override;
        for (int n : report_.dims) {
            if (n < 1) throw std::invalid_argument("dimensions must be >= 1");
        }
    }

    std::uint64_t seed() const { return report_.seed; }
    int trials() const { return report_.trials; }
    const std::vector<int>& dims() const { return report_.dims; }

    Rng trial_rng(const std::string& check, std::uint64_t trial) const {
        return Rng(derive_seed(report_.seed, check_stream(check), trial));
    }

    void add(const std::string& name, double residual, double tolerance) {
        CheckResult check{name, residual, tol_override_.value_or(tolerance)};
        report_.max_residual = std::max(report_.max_residual, residual);
        report_.passed = report_.passed && check.passed();
        report_.checks.push_back(std::move(check));
    }

    VerificationReport take() { return std::move(report_); }

  private:
    VerificationReport report_;
    std::optional<double> tol_override_;
};

// ---------------------------------------------------------------------------
// axioms

VerificationReport suite_axioms(const VerifyOptions& opts) {
    SuiteBuilder suite("axioms", opts, {1, 2, 4, 8, 16, 32, 64}, 10000, 1e-12);

    double g_omega = 0, omega_g = 0, omega_jj = 0, g_jj = 0;
    double g_sym = 0, omega_anti = 0, g_pos = 0, j_squared = 0;
    double g_bilinear = 0, omega_bilinear = 0;

    std::uint64_t trial = 0;
    for (int n : suite.dims()) {
        for (int t = 0; t < suite.trials(); ++t, ++trial) {
            Rng rng = suite.trial_rng("axioms", trial);
            const KahlerVector x(random_vec(rng, n), random_vec(rng, n));
            const KahlerVector y(random_vec(rng, n), random_vec(rng, n));
            const KahlerVector z(random_vec(rng, n), random_vec(rng, n));
            const double alpha = rng.normal();

            g_omega = std::max(g_omega, rel_resid(metric_g(x, y), symplectic_omega(x, apply_J(y))));
            omega_g = std::max(omega_g, rel_resid(symplectic_omega(x, y), metric_g(apply_J(x), y)));
            omega_jj = std::max(omega_jj, rel_resid(symplectic_omega(apply_J(x), apply_J(y)),
                                                    symplectic_omega(x, y)));
            g_jj = std::max(g_jj, rel_resid(metric_g(apply_J(x), apply_J(y)), metric_g(x, y)));
            g_sym = std::max(g_sym, rel_resid(metric_g(x, y), metric_g(y, x)));
            omega_anti = std::max(omega_anti,
                                  rel_resid(symplectic_omega(x, y), -symplectic_omega(y, x)));
            g_pos = std::max(g_pos, std::max(0.0, -metric_g(x, x)));
            j_squared = std::max(j_squared,
                                 (apply_J(apply_J(x)) + x).stacked().cwiseAbs().maxCoeff());
            g_bilinear = std::max(g_bilinear, rel_resid(metric_g(alpha * x + y, z),
                                                        alpha * metric_g(x, z) + metric_g(y, z)));
            omega_bilinear = std::max(
                omega_bilinear, rel_resid(symplectic_omega(alpha * x + y, z),
                                          alpha * symplectic_omega(x, z) + symplectic_omega(y, z)));
        }
    }

    suite.add("g-equals-omega-J", g_omega, 1e-12);
    suite.add("omega-equals-gJ", omega_g, 1e-12);
    suite.add("omega-J-invariant", omega_jj, 1e-12);
    suite.add("g-J-invariant", g_jj, 1e-12);
    suite.add("g-symmetric", g_sym, 1e-12);
    suite.add("omega-antisymmetric", omega_anti, 1e-12);
    suite.add("g-positive", g_pos, 0.0);
    suite.add("J-squared-minus-identity", j_squared, 0.0);
    suite.add("g-bilinear", g_bilinear, 1e-12);
    suite.add("omega-bilinear", omega_bilinear, 1e-12);
    return suite.take();
}

// ---------------------------------------------------------------------------
// correspondence

VerificationReport suite_correspondence(const VerifyOptions& opts) {
    SuiteBuilder suite("correspondence", opts, {1, 2, 3, 4, 8, 16, 32, 64}, 10000, 1e-12);

    double inner_identity = 0, round_trip = 0, j_is_i = 0;
    std::uint64_t trial = 0;
    for (int n : suite.dims()) {
        for (int t = 0; t < suite.trials(); ++t, ++trial) {
            Rng rng = suite.trial_rng("correspondence", trial);
            const CVec psi1 = random_cvec(rng, n);
            const CVec psi2 = random_cvec(rng, n);
            const KahlerVector x1 = gamma_inv(psi1);
            const KahlerVector x2 = gamma_inv(psi2);

            const Complex lhs = oracle::inner(psi1, psi2);
            const Complex rhs(metric_g(x1, x2), symplectic_omega(x1, x2));
            inner_identity = std::max(inner_identity, rel_resid(lhs, rhs));

            round_trip = std::max(
                round_trip, (gamma(gamma_inv(psi1)).entries() - psi1).cwiseAbs().maxCoeff());
            j_is_i = std::max(j_is_i, (gamma(apply_J(x1)).entries() - Complex(0, 1) * psi1)
                                          .cwiseAbs()
                                          .maxCoeff());
        }
    }
    suite.add("inner-product-identity", inner_identity, 1e-12);
    suite.add("gamma-round-trip", round_trip, 0.0);
    suite.add("J-is-multiplication-by-i", j_is_i, 1e-15);

    const int op_trials = std::max(1, suite.trials() / 50);
    double equivariance = 0, product_hom = 0, adjoint = 0, linearity = 0;
    double lower_lift = 0, lift_lower = 0;
    trial = 0;
    for (int n : suite.dims()) {
        for (int t = 0; t < op_trials; ++t, ++trial) {
            Rng rng = suite.trial_rng("correspondence-operators", trial);
            const CMat l1 = random_cmat(rng, n);
            const CMat l2 = random_cmat(rng, n);
            const CVec psi = random_cvec(rng, n);
            const KahlerOperator k1 = lift_operator(l1);
            const KahlerOperator k2 = lift_operator(l2);

            const KahlerVector via_complex = gamma_inv(CVec(l1 * psi));
            const KahlerVector via_lift = k1.apply(gamma_inv(psi));
            equivariance = std::max(equivariance,
                                    (via_complex - via_lift).stacked().cwiseAbs().maxCoeff() /
                                        std::max(1.0, via_complex.stacked().norm()));

            const Mat prod_lifted = lift_operator(CMat(l1 * l2)).expanded();
            const Mat lifted_prod = (k1 * k2).expanded();
            product_hom = std::max(product_hom, (prod_lifted - lifted_prod).norm() /
                                                    std::max(1.0, prod_lifted.norm()));

            adjoint = std::max(adjoint, (lift_operator(CMat(l1.adjoint())).expanded() -
                                         k1.transpose().expanded())
                                            .cwiseAbs()
                                            .maxCoeff());

            const double alpha = rng.normal();
            linearity = std::max(linearity, (lift_operator(CMat(alpha * l1 + l2)).expanded() -
                                             (k1.scaled(alpha) + k2).expanded())
                                                .cwiseAbs()
                                                .maxCoeff());

            lower_lift =
                std::max(lower_lift, (lower_operator(k1).matrix() - l1).cwiseAbs().maxCoeff());
            lift_lower = std::max(lift_lower,
                                  (lift_operator(lower_operator(k1.expanded(), 1e-9)).expanded() -
                                   k1.expanded())
                                      .cwiseAbs()
                                      .maxCoeff());
        }
    }
    suite.add("operator-equivariance", equivariance, 1e-12);
    suite.add("lift-product-homomorphism", product_hom, 1e-12);
    suite.add("lift-adjoint-is-transpose", adjoint, 0.0);
    suite.add("lift-real-linearity", linearity, 1e-15);
    suite.add("lower-after-lift-exact", lower_lift, 0.0);
    suite.add("lift-after-lower-exact", lift_lower, 0.0);
    return suite.take();
}

// ---------------------------------------------------------------------------
// spectral

VerificationReport suite_spectral(const VerifyOptions& opts) {
    SuiteBuilder suite("spectral", opts, {1, 2, 3, 4, 6, 8, 12, 16, 24, 32}, 500, 1e-10);

    double parity = 0, j_eigvec = 0, eigvec = 0, reconstruction = 0, completeness = 0;
    double idempotent = 0, orthogonal = 0, symmetric = 0, j_commuting = 0;
    double oracle_match = 0, dense_match = 0;

    for (int t = 0; t < suite.trials(); ++t) {
        Rng rng = suite.trial_rng("spectral", static_cast<std::uint64_t>(t));
        const int n = suite.dims()[static_cast<std::size_t>(t) % suite.dims().size()];
        const KahlerOperator op = random_k_hermitian(rng, n);
        const Mat expanded = op.expanded();
        const double scale = std::max(1.0, expanded.norm());
        const Mat j = complex_structure_matrix(n);

        const SpectralDecomposition structured = eigen_structured(op);

        int total_multiplicity = 0;
        for (const auto& cluster : structured.clusters()) {
            total_multiplicity += cluster.multiplicity;
            if (cluster.multiplicity % 2 != 0) parity = std::max(parity, 1.0);
            for (const JPair& pair : cluster.pairs) {
                const Vec v = pair.v.stacked();
                const Vec jv = pair.jv.stacked();
                eigvec = std::max(eigvec,
                                  (expanded * v - cluster.eigenvalue * v).norm() / scale);
                j_eigvec = std::max(j_eigvec,
                                    (expanded * jv - cluster.eigenvalue * jv).norm() / scale);
            }
            idempotent = std::max(idempotent,
                                  (cluster.projector * cluster.projector - cluster.projector)
                                      .norm());
            symmetric = std::max(symmetric,
                                 (cluster.projector - cluster.projector.transpose()).norm());
            j_commuting = std::max(j_commuting,
                                   (j * cluster.projector - cluster.projector * j).norm());
        }
        if (total_multiplicity != 2 * n) parity = std::max(parity, 1.0);

        for (std::size_t i = 0; i < structured.clusters().size(); ++i) {
            for (std::size_t k = i + 1; k < structured.clusters().size(); ++k) {
                orthogonal = std::max(orthogonal, (structured.clusters()[i].projector *
                                                   structured.clusters()[k].projector)
                                                      .norm());
            }
        }

        reconstruction = std::max(reconstruction,
                                  (structured.reconstruct() - expanded).norm() /
                                      std::max(1e-12, expanded.norm()));
        completeness = std::max(completeness,
                                (structured.completeness() - Mat::Identity(2 * n, 2 * n)).norm());

        // Oracle route: direct dense Hermitian solve of S + iA.
        CMat h(n, n);
        h.real() = op.S();
        h.imag() = op.A();
        const Vec oracle_vals = oracle::eigen_hermitian(h).eigenvalues;
        const auto oracle_ranges =
            cluster_sorted(oracle_vals, ClusterRule{}.threshold(expanded.norm()));
        if (oracle_ranges.size() != structured.clusters().size()) {
            oracle_match = std::max(oracle_match, 1.0);
        } else {
            for (std::size_t i = 0; i < oracle_ranges.size(); ++i) {
                const auto [start, end] = oracle_ranges[i];
                const double lambda = oracle_vals.segment(start, end - start).mean();
                oracle_match = std::max(
                    oracle_match, std::abs(lambda - structured.clusters()[i].eigenvalue) / scale);
                if (2 * (end - start) != structured.clusters()[i].multiplicity) {
                    oracle_match = std::max(oracle_match, 1.0);
                }
            }
        }

        // Naive dense route, including the parity rule.
        const SpectralDecomposition dense = eigen_dense(op);
        const auto dense_vals = dense.eigenvalues();
        if (dense_vals.size() != structured.clusters().size()) {
            dense_match = std::max(dense_match, 1.0);
        } else {
            for (std::size_t i = 0; i < dense_vals.size(); ++i) {
                dense_match = std::max(dense_match, std::abs(dense_vals[i] -
                                                             structured.clusters()[i].eigenvalue) /
                                                        scale);
            }
        }
        for (const auto& cluster : dense.clusters()) {
            if (cluster.multiplicity % 2 != 0) parity = std::max(parity, 1.0);
        }
        reconstruction = std::max(reconstruction, (dense.reconstruct() - expanded).norm() /
                                                      std::max(1e-12, expanded.norm()));
    }

    suite.add("even-multiplicity", parity, 0.0);
    suite.add("eigenvector-residual", eigvec, 1e-10);
    suite.add("J-partner-eigenvector-residual", j_eigvec, 1e-10);
    suite.add("reconstruction", reconstruction, 1e-10);
    suite.add("completeness", completeness, 1e-10);
    suite.add("projector-idempotent", idempotent, 1e-10);
    suite.add("projector-pairwise-orthogonal", orthogonal, 1e-10);
    suite.add("projector-symmetric", symmetric, 1e-12);
    suite.add("projector-J-commuting", j_commuting, 1e-10);
    suite.add("oracle-eigenvalue-match", oracle_match, 1e-10);
    suite.add("dense-structured-match", dense_match, 1e-10);

    // Closed-form K^4 spectrum, generic parameters (|a| > 0.1).
    const int cf_trials = 2 * suite.trials();
    double closed_form = 0;
    for (int t = 0; t < cf_trials; ++t) {
        Rng rng = suite.trial_rng("spectral-closed-form", static_cast<std::uint64_t>(t));
        const double s11 = rng.normal();
        const double s12 = rng.normal();
        const double s22 = rng.normal();
        double a = rng.normal();
        while (std::abs(a) <= 0.1) a = rng.normal();
        Mat s(2, 2), av(2, 2);
        s << s11, s12, s12, s22;
        av << 0, a, -a, 0;
        const KahlerOperator op(s, av);

        const SpectralDecomposition closed = eigen_closed_form_n2(op);
        const SpectralDecomposition dense = eigen_dense(op);
        const auto cl = closed.eigenvalues();
        const auto dl = dense.eigenvalues();
        if (cl.size() != dl.size()) {
            closed_form = std::max(closed_form, 1.0);
            continue;
        }
        for (std::size_t i = 0; i < cl.size(); ++i) {
            closed_form = std::max(closed_form, rel_resid(cl[i], dl[i]));
        }
        closed_form = std::max(closed_form, (closed.reconstruct() - op.expanded()).norm() /
                                                std::max(1e-12, op.expanded().norm()));
    }
    suite.add("closed-form-dense-agreement", closed_form, 1e-9);

    // Near-singular fallback coverage: |a| ~ 0 routes through eigen_structured.
    double near_singular = 0;
    for (int t = 0; t < cf_trials; ++t) {
        Rng rng = suite.trial_rng("spectral-near-singular", static_cast<std::uint64_t>(t));
        const double s11 = rng.normal();
        const double s12 = rng.normal();
        const double s22 = rng.normal();
        const double a = t % 10 == 0 ? 0.0 : 1e-9 * rng.uniform_in(-1.0, 1.0);
        Mat s(2, 2), av(2, 2);
        s << s11, s12, s12, s22;
        av << 0, a, -a, 0;
        const KahlerOperator op(s, av);
        const SpectralDecomposition closed = eigen_closed_form_n2(op);
        near_singular = std::max(near_singular, (closed.reconstruct() - op.expanded()).norm() /
                                                    std::max(1e-12, op.expanded().norm()));
        int total = 0;
        for (int m : closed.multiplicities()) total += m;
        if (total != 4) near_singular = std::max(near_singular, 1.0);
    }
    suite.add("closed-form-near-singular-fallback", near_singular, 1e-10);

    return suite.take();
}

// ---------------------------------------------------------------------------
// tensor

VerificationReport suite_tensor(const VerifyOptions& opts) {
    SuiteBuilder suite("tensor", opts, {1, 2, 3, 4, 5, 6, 7, 8}, 10000, 1e-11);

    double projector_identity = 0, gamma_kron = 0, norm_mult = 0;
    double g_r = 0, omega_r = 0, g_k = 0, omega_k = 0;

    for (int t = 0; t < suite.trials(); ++t) {
        Rng rng = suite.trial_rng("tensor", static_cast<std::uint64_t>(t));
        const int n1 = suite.dims()[static_cast<std::size_t>(rng.uniform_int(
            0, static_cast<int>(suite.dims().size()) - 1))];
        const int n2 = suite.dims()[static_cast<std::size_t>(rng.uniform_int(
            0, static_cast<int>(suite.dims().size()) - 1))];
        const KahlerVector x = random_state(rng, n1);
        const KahlerVector y = random_state(rng, n2);
        const KahlerVector u = random_state(rng, n1);
        const KahlerVector v = random_state(rng, n2);

        const KahlerVector xk = tensor_K(x, y);
        projector_identity =
            std::max(projector_identity,
                     (projector_P(tensor_R(x, y)) - xk).stacked().cwiseAbs().maxCoeff());
        gamma_kron = std::max(
            gamma_kron, (gamma(xk).entries() -
                         oracle::kron(gamma(x).entries(), gamma(y).entries()))
                            .cwiseAbs()
                            .maxCoeff());
        norm_mult = std::max(norm_mult, std::abs(metric_g(xk, xk) - 1.0));

        const BilinearFormResiduals forms = tensor_bilinear_residuals(x, y, u, v);
        g_r = std::max(g_r, forms.g_r);
        omega_r = std::max(omega_r, forms.omega_r);
        g_k = std::max(g_k, forms.g_k);
        omega_k = std::max(omega_k, forms.omega_k);
    }
    suite.add("projector-P-identity", projector_identity, 1e-13);
    suite.add("gamma-kron-intertwine", gamma_kron, 1e-13);
    suite.add("composite-norm", norm_mult, 1e-12);
    suite.add("bilinear-g-R", g_r, 1e-11);
    suite.add("bilinear-omega-R", omega_r, 1e-11);
    suite.add("bilinear-g-K", g_k, 1e-11);
    suite.add("bilinear-omega-K", omega_k, 1e-11);

    const int op_trials = std::max(1, suite.trials() / 50);
    double intertwine = 0, p_matrix = 0;
    for (int t = 0; t < op_trials; ++t) {
        Rng rng = suite.trial_rng("tensor-operators", static_cast<std::uint64_t>(t));
        const int n1 = suite.dims()[static_cast<std::size_t>(rng.uniform_int(
            0, static_cast<int>(suite.dims().size()) - 1))];
        const int n2 = suite.dims()[static_cast<std::size_t>(rng.uniform_int(
            0, static_cast<int>(suite.dims().size()) - 1))];
        const KahlerVector x = random_state(rng, n1);
        const KahlerVector y = random_state(rng, n2);
        const CMat l1 = random_cmat(rng, n1);
        const CMat l2 = random_cmat(rng, n2);

        const KahlerVector lhs = lift_operator(oracle::kron(l1, l2)).apply(tensor_K(x, y));
        const KahlerVector rhs =
            tensor_K(lift_operator(l1).apply(x), lift_operator(l2).apply(y));
        intertwine = std::max(intertwine, (lhs - rhs).stacked().cwiseAbs().maxCoeff() /
                                              std::max(1.0, lhs.stacked().norm()));

        const RealTensorVector tr = tensor_R(x, y);
        const Vec via_matrix = projector_P_matrix(n1, n2) * tr.flattened();
        p_matrix = std::max(p_matrix,
                            (via_matrix - projector_P(tr).stacked()).cwiseAbs().maxCoeff());
    }
    suite.add("operator-kron-intertwine", intertwine, 1e-11);
    suite.add("projector-P-matrix-consistency", p_matrix, 0.0);
    return suite.take();
}

// ---------------------------------------------------------------------------
// born

VerificationReport suite_born(const VerifyOptions& opts) {
    SuiteBuilder suite("born", opts, {1, 2, 3, 4, 8, 16}, 1000, 1e-12);

    double oracle_match = 0, prob_sum = 0, nonneg = 0, phase_invariance = 0;
    for (int t = 0; t < suite.trials(); ++t) {
        Rng rng = suite.trial_rng("born", static_cast<std::uint64_t>(t));
        const int n = suite.dims()[static_cast<std::size_t>(t) % suite.dims().size()];
        const KahlerVector eta = random_state(rng, n);
        const KahlerOperator op = random_k_hermitian(rng, n);

        const auto outcomes = born_probabilities(eta, op);
        CMat h(n, n);
        h.real() = op.S();
        h.imag() = op.A();
        const oracle::BornResult reference = oracle::born(gamma(eta).entries(), h);

        if (outcomes.size() != reference.probabilities.size()) {
            oracle_match = std::max(oracle_match, 1.0);
        } else {
            for (std::size_t i = 0; i < outcomes.size(); ++i) {
                oracle_match = std::max(oracle_match, std::abs(outcomes[i].probability -
                                                               reference.probabilities[i]));
                oracle_match = std::max(oracle_match, rel_resid(outcomes[i].eigenvalue,
                                                                reference.eigenvalues[i]));
            }
        }

        double sum = 0;
        for (const auto& outcome : outcomes) {
            sum += outcome.probability;
            nonneg = std::max(nonneg, -outcome.probability);
        }
        prob_sum = std::max(prob_sum, std::abs(sum - 1.0));

        const double phi = rng.uniform_in(0.0, 2.0 * std::numbers::pi);
        const KahlerVector rotated = phase_rotation(phi, n).apply(eta);
        const auto rotated_outcomes = born_probabilities(rotated, op);
        if (rotated_outcomes.size() != outcomes.size()) {
            phase_invariance = std::max(phase_invariance, 1.0);
        } else {
            for (std::size_t i = 0; i < outcomes.size(); ++i) {
                phase_invariance = std::max(phase_invariance,
                                            std::abs(rotated_outcomes[i].probability -
                                                     outcomes[i].probability));
            }
        }
    }
    suite.add("probability-oracle-match", oracle_match, 1e-12);
    suite.add("probability-sum", prob_sum, 1e-10);
    suite.add("probability-nonnegative", nonneg, 0.0);
    suite.add("phase-invariance", phase_invariance, 1e-12);

    // Bell register: exact probabilities and a seeded sampling run.
    const KahlerVector bell = bell_state();
    CMat reg = CMat::Zero(4, 4);
    reg(1, 1) = 1;
    reg(2, 2) = 2;
    reg(3, 3) = 3;
    const auto bell_outcomes = born_probabilities(bell, lift_operator(reg));
    double bell_exact = 0;
    const std::array<double, 4> expected{0.5, 0.0, 0.0, 0.5};
    if (bell_outcomes.size() != 4) {
        bell_exact = 1.0;
    } else {
        for (std::size_t i = 0; i < 4; ++i) {
            bell_exact = std::max(bell_exact,
                                  std::abs(bell_outcomes[i].probability - expected[i]));
        }
    }
    suite.add("bell-probabilities", bell_exact, 1e-12);

    const int shots = 100000;
    Rng sampler = suite.trial_rng("born-bell-sampling", 0);
    std::array<int, 4> counts{0, 0, 0, 0};
    for (int s = 0; s < shots; ++s) {
        const double u = sampler.uniform();
        double acc = 0;
        std::size_t outcome = 3;
        for (std::size_t i = 0; i < 4; ++i) {
            acc += bell_outcomes[i].probability;
            if (u < acc) {
                outcome = i;
                break;
            }
        }
        ++counts[outcome];
    }
    const double stderr3 = 3.0 * std::sqrt(0.25 / shots);
    const double f00 = static_cast<double>(counts[0]) / shots;
    const double f11 = static_cast<double>(counts[3]) / shots;
    suite.add("bell-sampling-frequencies",
              std::max(std::abs(f00 - 0.5), std::abs(f11 - 0.5)), stderr3);
    suite.add("bell-sampling-impossible-outcomes",
              static_cast<double>(counts[1] + counts[2]), 0.0);
    return suite.take();
}

// ---------------------------------------------------------------------------
// groups

VerificationReport suite_groups(const VerifyOptions& opts) {
    SuiteBuilder suite("groups", opts, {1, 2, 3, 4, 8, 16}, 500, 1e-12);

    double lifted_all = 0, counterexample = 0, closure = 0, inverse_closure = 0;
    double block_conditions = 0, lower_unitary = 0, equivalence = 0;
    for (int t = 0; t < suite.trials(); ++t) {
        Rng rng = suite.trial_rng("groups", static_cast<std::uint64_t>(t));
        const int n = suite.dims()[static_cast<std::size_t>(t) % suite.dims().size()];

        const CMat u = random_unitary(rng, n);
        const Mat m = lift_operator(u).expanded();
        const Memberships lifted = check_memberships(m);
        if (!lifted.orthogonal || !lifted.symplectic || !lifted.j_commuting ||
            !lifted.block_form || !lifted.kahler_unitary) {
            lifted_all = std::max(lifted_all, 1.0);
        }
        lifted_all = std::max({lifted_all, lifted.orthogonal_residual,
                               lifted.symplectic_residual, lifted.j_commuting_residual,
                               lifted.block_form_residual});
        // (O and Sp) <=> (O and J-commuting) <=> Kahler-unitary.
        const bool o_sp = lifted.orthogonal && lifted.symplectic;
        const bool o_j = lifted.orthogonal && lifted.j_commuting;
        if (o_sp != lifted.kahler_unitary || o_j != lifted.kahler_unitary) {
            equivalence = std::max(equivalence, 1.0);
        }

        // Orthogonal-not-symplectic counterexample: block-diag(Rq, Rp) with
        // well-separated rotations.
        Mat rq = Mat::Identity(n, n);
        Mat rp = Mat::Identity(n, n);
        if (n == 1) {
            rq(0, 0) = 1.0;
            rp(0, 0) = -1.0;
        } else {
            Eigen::HouseholderQR<Mat> qr1(random_mat(rng, n, n));
            Eigen::HouseholderQR<Mat> qr2(random_mat(rng, n, n));
            rq = qr1.householderQ();
            rp = qr2.householderQ();
            while ((rq.transpose() * rp - Mat::Identity(n, n)).norm() < 0.1) {
                Eigen::HouseholderQR<Mat> retry(random_mat(rng, n, n));
                rp = retry.householderQ();
            }
        }
        Mat bad = Mat::Zero(2 * n, 2 * n);
        bad.topLeftCorner(n, n) = rq;
        bad.bottomRightCorner(n, n) = rp;
        const Memberships pattern = check_memberships(bad);
        if (!pattern.orthogonal || pattern.symplectic || pattern.j_commuting ||
            pattern.block_form || pattern.kahler_unitary) {
            counterexample = std::max(counterexample, 1.0);
        }
        const bool bad_o_sp = pattern.orthogonal && pattern.symplectic;
        const bool bad_o_j = pattern.orthogonal && pattern.j_commuting;
        if (bad_o_sp != pattern.kahler_unitary || bad_o_j != pattern.kahler_unitary) {
            equivalence = std::max(equivalence, 1.0);
        }

        // The equivalence also holds off the group: a general Gaussian matrix
        // and a J-commuting non-orthogonal lift satisfy it vacuously.
        for (const Mat& probe :
             {Mat(random_mat(rng, 2 * n, 2 * n)),
              lift_operator(random_cmat(rng, n)).expanded()}) {
            const Memberships other = check_memberships(probe);
            const bool other_o_sp = other.orthogonal && other.symplectic;
            const bool other_o_j = other.orthogonal && other.j_commuting;
            if (other_o_sp != other.kahler_unitary || other_o_j != other.kahler_unitary) {
                equivalence = std::max(equivalence, 1.0);
            }
        }

        // Closure under products of 10 factors and under inverses.
        if (t % 10 == 0) {
            Mat product = Mat::Identity(2 * n, 2 * n);
            for (int f = 0; f < 10; ++f) {
                product = product * lift_operator(random_unitary(rng, n)).expanded();
            }
            const Memberships prod_m = check_memberships(product);
            closure = std::max({closure, prod_m.orthogonal_residual, prod_m.symplectic_residual,
                                prod_m.j_commuting_residual, prod_m.block_form_residual});
            const Memberships inv_m = check_memberships(Mat(product.transpose()));
            inverse_closure =
                std::max({inverse_closure, inv_m.orthogonal_residual, inv_m.symplectic_residual,
                          inv_m.j_commuting_residual, inv_m.block_form_residual});
        }

        // Symplectic block conditions of the Kahler-unitary parametrization.
        const Mat x = m.topLeftCorner(n, n);
        const Mat y = m.topRightCorner(n, n);
        const Mat id = Mat::Identity(n, n);
        block_conditions = std::max(
            {block_conditions, (x.transpose() * x + y.transpose() * y - id).norm(),
             (x * x.transpose() + y * y.transpose() - id).norm(),
             (y.transpose() * x - x.transpose() * y).norm(),
             (x * y.transpose() - y * x.transpose()).norm()});

        const CMat lowered = lower_operator(KahlerOperator::from_expanded(m)).matrix();
        lower_unitary = std::max(lower_unitary,
                                 (lowered.adjoint() * lowered - CMat::Identity(n, n)).norm());
    }
    suite.add("lifted-unitary-memberships", lifted_all, 1e-12);
    suite.add("counterexample-pattern", counterexample, 0.0);
    suite.add("membership-equivalence", equivalence, 0.0);
    suite.add("product-closure", closure, 1e-11);
    suite.add("inverse-closure", inverse_closure, 1e-11);
    suite.add("symplectic-block-conditions", block_conditions, 1e-11);
    suite.add("lower-is-unitary", lower_unitary, 1e-11);

    // exp(phi G2) against the explicit cos/sin block pattern on a grid.
    double exp_grid = 0;
    for (int k = 0; k < 100; ++k) {
        const double phi = 2.0 * std::numbers::pi * k / 100.0;
        const Mat expected = phase_rotation(phi, 2).expanded();
        const Mat actual = exp_generator({0.0, phi, 0.0, 0.0}).matrix();
        exp_grid = std::max(exp_grid, (actual - expected).cwiseAbs().maxCoeff());
    }
    suite.add("exp-G2-phase-grid", exp_grid, 1e-12);

    // Generator algebra: skew-symmetry, J-commutation, G2 = J, and membership
    // of exp(sum theta_i G_i) for random coefficients.
    double generator_alg = 0;
    const Mat j4 = complex_structure_matrix(2);
    for (const Mat& g : u2_generators()) {
        generator_alg = std::max(generator_alg, (g.transpose() + g).cwiseAbs().maxCoeff());
        generator_alg = std::max(generator_alg, (g * j4 - j4 * g).cwiseAbs().maxCoeff());
    }
    generator_alg = std::max(generator_alg, (u2_generators()[1] - j4).cwiseAbs().maxCoeff());
    suite.add("generator-algebra", generator_alg, 0.0);

    double exp_membership = 0;
    for (int t = 0; t < 100; ++t) {
        Rng rng = suite.trial_rng("groups-exp", static_cast<std::uint64_t>(t));
        std::array<double, 4> theta{};
        for (double& c : theta) c = rng.uniform_in(-2.5, 2.5);
        const GroupElement element = exp_generator(theta);
        const Memberships& m = element.memberships();
        exp_membership = std::max({exp_membership, m.orthogonal_residual, m.symplectic_residual,
                                   m.j_commuting_residual, m.block_form_residual});
        if (!m.kahler_unitary) exp_membership = std::max(exp_membership, 1.0);
    }
    suite.add("exp-generator-memberships", exp_membership, 1e-12);

    double phase_equiv = 0;
    for (int t = 0; t < 100; ++t) {
        Rng rng = suite.trial_rng("groups-phase", static_cast<std::uint64_t>(t));
        const double phi = rng.uniform_in(0.0, 2.0 * std::numbers::pi);
        phase_equiv = std::max(phase_equiv,
                               phase_rotation_equivalence(phi, ComplexState(random_cvec(rng, 2))));
    }
    suite.add("phase-rotation-equivalence", phase_equiv, 1e-12);
    return suite.take();
}

// ---------------------------------------------------------------------------
// reconstruction

VerificationReport suite_reconstruction(const VerifyOptions& opts) {
    SuiteBuilder suite("reconstruction", opts, {1, 2, 3, 4, 8, 16}, 200, 1e-10);

    double residual = 0;
    for (int t = 0; t < suite.trials(); ++t) {
        Rng rng = suite.trial_rng("reconstruction", static_cast<std::uint64_t>(t));
        const int n = suite.dims()[static_cast<std::size_t>(t) % suite.dims().size()];
        const int k = rng.uniform_int(1, 5);

        CorrelationQuery query{.operators = {},
                               .psi = ComplexState(random_complex_state(rng, n)),
                               .phi = ComplexState(random_complex_state(rng, n))};
        for (int i = 0; i < k; ++i) {
            ComplexOperator op = [&] {
                switch (rng.uniform_int(0, 2)) {
                    case 0: return ComplexOperator::hermitian(random_hermitian(rng, n));
                    case 1: return ComplexOperator::unitary(random_unitary(rng, n));
                    default: return ComplexOperator::projector(random_projector(rng, n));
                }
            }();
            // Alternate representations to exercise the mixed-input path.
            if (i % 2 == 1) {
                query.operators.emplace_back(lift_operator(op));
            } else {
                query.operators.emplace_back(std::move(op));
            }
        }

        const CorrelationResult result = correlation(query);
        residual = std::max(residual, result.residual / (1.0 + std::abs(result.value)));
    }
    suite.add("correlation-reconstruction", residual, 1e-10);
    return suite.take();
}

}  // namespace

json VerificationReport::to_json() const {
    json checks_json = json::array();
    for (const CheckResult& check : checks) {
        checks_json.push_back(json{{"name", check.name},
                                   {"residual", check.residual},
                                   {"tolerance", check.tolerance},
                                   {"passed", check.passed()}});
    }
    return json{{"suite", suite},         {"seed", seed},
                {"trials", trials},       {"dimensions", dims},
                {"tolerance", tolerance}, {"max_residual", max_residual},
                {"passed", passed},       {"checks", checks_json}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "axioms", "correspondence", "spectral", "tensor", "born", "groups", "reconstruction"};
    return names;
}

VerificationReport run_suite(const std::string& suite, const VerifyOptions& opts) {
    if (suite == "axioms") return suite_axioms(opts);
    if (suite == "correspondence") return suite_correspondence(opts);
    if (suite == "spectral") return suite_spectral(opts);
    if (suite == "tensor") return suite_tensor(opts);
    if (suite == "born") return suite_born(opts);
    if (suite == "groups") return suite_groups(opts);
    if (suite == "reconstruction") return suite_reconstruction(opts);
    throw std::invalid_argument("unknown suite: " + suite);
}

std::vector<VerificationReport> run_all(const VerifyOptions& opts) {
    std::vector<VerificationReport> reports;
    reports.reserve(suite_names().size());
    for (const std::string& name : suite_names()) {
        reports.push_back(run_suite(name, opts));
    }
    return reports;
}

json reports_to_json(const std::vector<VerificationReport>& reports, std::uint64_t seed) {
    bool passed = true;
    json list = json::array();
    for (const VerificationReport& report : reports) {
        passed = passed && report.passed;
        list.push_back(report.to_json());
    }
    return json{{"suite", "all"}, {"seed", seed}, {"passed", passed}, {"reports", list}};
}

}  // namespace kqm
