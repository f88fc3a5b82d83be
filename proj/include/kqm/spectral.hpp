#pragma once

#include "kqm/correspondence.hpp"

#include <utility>
#include <vector>

namespace kqm {

/// Clustering rule for floating-point eigenvalues: values within
/// max(abs_floor, rel * scale) of their neighbor share a cluster.
struct ClusterRule {
    double rel = 1e-9;
    double abs_floor = 1e-12;

    double threshold(double scale) const { return std::max(abs_floor, rel * scale); }
};

/// Half-open [start, end) index ranges over an ascending eigenvalue list.
std::vector<std::pair<Index, Index>> cluster_sorted(const Vec& values, double threshold);

/// One orthonormal eigenvector together with its J-partner.
struct JPair {
    KahlerVector v;
    KahlerVector jv;
};

/// E_i = sum over pairs of (v v^T + (Jv)(Jv)^T): symmetric, idempotent,
/// J-commuting, rank 2 * pairs.
Mat projector_from_pairs(const std::vector<JPair>& pairs);

/// Spectral decomposition of a K-Hermitian operator: distinct eigenvalues
/// (ascending) with even multiplicities, rank-2k projectors and J-paired
/// eigenbases satisfying sum E_i = I and sum lambda_i E_i = L.
class SpectralDecomposition {
  public:
    struct Cluster {
        double eigenvalue;
        int multiplicity; // real multiplicity, 2x the complex one
        Mat projector;    // 2n x 2n
        std::vector<JPair> pairs;
    };

    SpectralDecomposition(Index n, std::vector<Cluster> clusters);

    Index dim() const { return n_; }
    const std::vector<Cluster>& clusters() const { return clusters_; }
    std::vector<double> eigenvalues() const;
    std::vector<int> multiplicities() const;

    /// sum lambda_i E_i.
    Mat reconstruct() const;
    /// sum E_i (identity up to roundoff).
    Mat completeness() const;

    /// Columns v_1..v_n, Jv_1..Jv_n across all clusters; orthogonal, and the
    /// frame in which J regains its canonical [[0,-I],[I,0]] layout.
    Mat eigenbasis_matrix() const;
    /// The block-diagonal projector split (P_1i, P_2i) of cluster i, expressed
    /// in the eigenbasis frame. P_1i acts on the v-coordinates, P_2i on the
    /// Jv-coordinates; P_1i + P_2i equals E_i rotated to that frame.
    std::pair<Mat, Mat> block_projectors(Index cluster) const;

  private:
    Index n_;
    std::vector<Cluster> clusters_;
};

struct EigenOptions {
    Tolerance input_tol{};
    ClusterRule cluster{};
};

/// Structure-exploiting eigensolver: reduces the 2n x 2n problem to the n x n
/// complex Hermitian problem for S + iA, then emits each complex eigenvector
/// w as the real pair (gamma^{-1} w, J gamma^{-1} w).
SpectralDecomposition eigen_structured(const KahlerOperator& L, const EigenOptions& opts = {});

/// Naive route: dense solve of the expanded 2n x 2n symmetric matrix, then
/// clustering (with one threshold-doubling retry if a cluster comes out odd)
/// and J-pairing of each cluster's eigenvectors.
SpectralDecomposition eigen_dense(const KahlerOperator& L, const EigenOptions& opts = {});

/// Closed-form K^4 spectrum via kappa / lambda_{1,2} / w_{+-}; falls back to
/// eigen_structured when |a| is too small for the w formulas or when the two
/// eigenvalues merge under the clustering rule.
SpectralDecomposition eigen_closed_form_n2(const KahlerOperator& L, const EigenOptions& opts = {});

/// Orthonormalizes eigenvectors of one eigenvalue into J-pairs: pick v, adjoin
/// Jv, project the rest off span{v, Jv}, repeat. Inputs must be eigenvectors
/// of L for lambda (within eig_tol, relative to ||L||) and must span a
/// J-invariant subspace; otherwise a StructuralViolation is thrown.
std::vector<JPair> orthonormalize_J_paired(const std::vector<KahlerVector>& vectors,
                                           const KahlerOperator& L, double lambda,
                                           double eig_tol = 1e-8);

}  // namespace kqm
