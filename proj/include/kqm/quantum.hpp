#pragma once

#include "kqm/spectral.hpp"
#include "kqm/tensor.hpp"

#include <variant>
#include <vector>

namespace kqm {

struct MeasurementOutcome {
    double eigenvalue;
    double probability;
    int projector_rank; // even, >= 2
};

/// Born rule: for each distinct eigenvalue lambda_i of L with projector E_i,
/// probability g(eta, E_i eta). Requires g(eta, eta) = 1 within tolerance.
/// With rank_divisor set, returns g(eta, E_i eta) / rank(E_i) instead, for
/// inspection; those values do not sum to 1 whenever any rank exceeds 2.
std::vector<MeasurementOutcome> born_probabilities(const KahlerVector& eta,
                                                   const KahlerOperator& L,
                                                   bool rank_divisor = false,
                                                   const EigenOptions& opts = {});

/// Composite-system state: tensor_K of the parts. Normalized inputs give a
/// normalized composite.
KahlerVector compose_systems(const KahlerVector& eta1, const KahlerVector& eta2);

/// gamma^{-1}((|00> + |11>)/sqrt(2)) in K^8.
KahlerVector bell_state();

using AnyOperator = std::variant<ComplexOperator, KahlerOperator>;
using AnyState = std::variant<ComplexState, KahlerVector>;

/// Ordered operator chain (applied right-to-left) with bra/ket states in
/// either representation; mixed inputs are lifted/lowered internally.
struct CorrelationQuery {
    std::vector<AnyOperator> operators;
    AnyState psi;
    AnyState phi;
};

struct CorrelationResult {
    Complex value;   // g + i*omega of the Kahler-side chain
    double residual; // |value - complex-side chain|
};

/// Computes <L_1 ... L_k psi, phi> on both sides of the gamma correspondence
/// and returns the real-side value with its differential residual.
CorrelationResult correlation(const CorrelationQuery& query);

struct BlochAngles {
    double theta; // [0, pi]
    double phi;   // [0, 2*pi), 0 by convention at the poles
};

/// Bloch-sphere coordinates of a normalized qubit state (n == 2); the global
/// phase is fixed so the |0> coefficient is real nonnegative.
BlochAngles bloch_coordinates(const KahlerVector& eta);

/// Inverse construction: gamma^{-1}(cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>).
KahlerVector bloch_state(double theta, double phi);

}  // namespace kqm
