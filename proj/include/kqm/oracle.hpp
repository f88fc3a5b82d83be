#pragma once

#include "kqm/kahler.hpp"

#include <vector>

namespace kqm::oracle {

// Complex-Hilbert-space reference backend. Everything here is computed by
// direct definition (plain summation loops, dense solves, explicit Kronecker
// products) with no structure exploitation, so results are independent
// evidence against the structured Kahler-side implementations.

/// Conjugate-linear in the first argument: sum conj(a_k) b_k.
Complex inner(const CVec& psi1, const CVec& psi2);

struct HermitianEigen {
    Vec eigenvalues;   // ascending
    CMat eigenvectors; // orthonormal columns
};

/// Dense Hermitian eigendecomposition; throws on non-Hermitian input.
HermitianEigen eigen_hermitian(const CMat& H, double tol = 1e-10);

/// Born probabilities per distinct-eigenvalue cluster: squared magnitudes of
/// eigenspace projections of psi. Paired with the cluster eigenvalues.
struct BornResult {
    std::vector<double> eigenvalues;
    std::vector<double> probabilities;
    std::vector<int> ranks; // complex eigenspace dimensions
};
BornResult born(const CVec& psi, const CMat& H, double tol = 1e-10);

CVec kron(const CVec& a, const CVec& b);
CMat kron(const CMat& a, const CMat& b);

/// <L_1 ... L_k psi, phi> by direct chain application; rejects k = 0.
Complex correlation(const std::vector<CMat>& ops, const CVec& psi, const CVec& phi);

/// Closed-form spectrum of the general 2x2 Hermitian matrix
/// [[s11, s12 + i a], [s12 - i a, s22]]; requires a != 0.
struct ClosedForm2 {
    double lambda1; // (-kappa + s11 + s22) / 2
    double lambda2; // (+kappa + s11 + s22) / 2
    double kappa;
    CVec v1; // unit eigenvector for lambda1
    CVec v2; // unit eigenvector for lambda2
};
ClosedForm2 eigen2_closed_form(double s11, double s12, double s22, double a);

}  // namespace kqm::oracle
