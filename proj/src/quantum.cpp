#include "kqm/quantum.hpp"

#include "kqm/oracle.hpp"

#include <cmath>
#include <numbers>

namespace kqm {

std::vector<MeasurementOutcome> born_probabilities(const KahlerVector& eta,
                                                   const KahlerOperator& L, bool rank_divisor,
                                                   const EigenOptions& opts) {
    if (eta.dim() != L.dim()) throw std::invalid_argument("state/operator dimension mismatch");
    if (!opts.input_tol.close(metric_g(eta, eta), 1.0)) {
        throw std::invalid_argument("state is not normalized: g(eta, eta) != 1");
    }
    const SpectralDecomposition decomp = eigen_structured(L, opts);
    const Vec stacked = eta.stacked();
    std::vector<MeasurementOutcome> outcomes;
    outcomes.reserve(decomp.clusters().size());
    for (const auto& cluster : decomp.clusters()) {
        double prob = stacked.dot(cluster.projector * stacked);
        prob = std::max(prob, 0.0);
        if (rank_divisor) prob /= static_cast<double>(cluster.multiplicity);
        outcomes.push_back(MeasurementOutcome{cluster.eigenvalue, prob, cluster.multiplicity});
    }
    return outcomes;
}

KahlerVector compose_systems(const KahlerVector& eta1, const KahlerVector& eta2) {
    return tensor_K(eta1, eta2);
}

KahlerVector bell_state() {
    Vec q(4), p(4);
    q << 1.0, 0.0, 0.0, 1.0;
    q /= std::numbers::sqrt2;
    p.setZero();
    return KahlerVector(q, p);
}

namespace {

CVec state_as_complex(const AnyState& s) {
    if (const auto* c = std::get_if<ComplexState>(&s)) return c->entries();
    return gamma(std::get<KahlerVector>(s)).entries();
}

KahlerVector state_as_kahler(const AnyState& s) {
    if (const auto* k = std::get_if<KahlerVector>(&s)) return *k;
    return gamma_inv(std::get<ComplexState>(s));
}

}  // namespace

CorrelationResult correlation(const CorrelationQuery& query) {
    if (query.operators.empty()) {
        throw std::invalid_argument("correlation requires at least one operator");
    }

    const KahlerVector psi_k = state_as_kahler(query.psi);
    const KahlerVector phi_k = state_as_kahler(query.phi);
    if (psi_k.dim() != phi_k.dim()) throw std::invalid_argument("state dimension mismatch");
    const Index n = psi_k.dim();

    std::vector<CMat> complex_ops;
    std::vector<KahlerOperator> kahler_ops;
    complex_ops.reserve(query.operators.size());
    kahler_ops.reserve(query.operators.size());
    for (const AnyOperator& op : query.operators) {
        if (const auto* c = std::get_if<ComplexOperator>(&op)) {
            complex_ops.push_back(c->matrix());
            kahler_ops.push_back(lift_operator(*c));
        } else {
            const auto& k = std::get<KahlerOperator>(op);
            complex_ops.push_back(lower_operator(k).matrix());
            kahler_ops.push_back(k);
        }
        if (complex_ops.back().rows() != n) {
            throw std::invalid_argument("operator dimension mismatch");
        }
    }

    // Kahler side: chain the lifted operators right-to-left, then g + i*omega.
    KahlerVector acc = psi_k;
    for (auto it = kahler_ops.rbegin(); it != kahler_ops.rend(); ++it) {
        acc = it->apply(acc);
    }
    const Complex real_side(metric_g(acc, phi_k), symplectic_omega(acc, phi_k));

    const Complex complex_side =
        oracle::correlation(complex_ops, state_as_complex(query.psi), state_as_complex(query.phi));
    return CorrelationResult{real_side, std::abs(real_side - complex_side)};
}

BlochAngles bloch_coordinates(const KahlerVector& eta) {
    if (eta.dim() != 2) throw std::invalid_argument("Bloch coordinates require a qubit (n == 2)");
    const double nrm = eta.norm();
    if (nrm == 0.0) throw std::invalid_argument("zero vector has no Bloch coordinates");
    if (!Tolerance{}.close(nrm, 1.0)) {
        throw std::invalid_argument("state is not normalized");
    }
    const CVec psi = gamma(eta).entries();
    const double r0 = std::abs(psi[0]);
    const double r1 = std::abs(psi[1]);
    BlochAngles angles;
    angles.theta = 2.0 * std::atan2(r1, r0);
    if (r0 <= 1e-12 || r1 <= 1e-12) {
        angles.phi = 0.0;
    } else {
        double phi = std::arg(psi[1]) - std::arg(psi[0]);
        phi = std::fmod(phi, 2.0 * std::numbers::pi);
        if (phi < 0.0) phi += 2.0 * std::numbers::pi;
        angles.phi = phi;
    }
    return angles;
}

KahlerVector bloch_state(double theta, double phi) {
    if (theta < 0.0 || theta > std::numbers::pi) {
        throw std::invalid_argument("theta must lie in [0, pi]");
    }
    Vec q(2), p(2);
    q << std::cos(0.5 * theta), std::sin(0.5 * theta) * std::cos(phi);
    p << 0.0, std::sin(0.5 * theta) * std::sin(phi);
    return KahlerVector(q, p);
}

}  // namespace kqm
