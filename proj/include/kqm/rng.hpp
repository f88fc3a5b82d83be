#pragma once

#include "kqm/correspondence.hpp"

#include <cstdint>
#include <random>

namespace kqm {

/// SplitMix64 mixing step; the seed-derivation primitive.
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic per-trial sub-seed: chained SplitMix64 over
/// (master, stream, index), so parallel trial order never changes results.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

/// Seedable, portable generator: std::mt19937_64 raw output with explicit
/// uniform and Box-Muller transforms (no std::*_distribution, whose results
/// vary across standard libraries).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1): (x >> 11) * 2^-53.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi].
    double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Inclusive integer range via rejection-free scaling of uniform().
    int uniform_int(int lo, int hi);

    /// Standard normal via Box-Muller on uniform(); pairs are cached.
    double normal();

  private:
    std::mt19937_64 engine_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

Vec random_vec(Rng& rng, Index n);
Mat random_mat(Rng& rng, Index rows, Index cols);
CVec random_cvec(Rng& rng, Index n);
CMat random_cmat(Rng& rng, Index n);

/// Gaussian pair (q, p), g-normalized.
KahlerVector random_state(Rng& rng, Index n);
/// S = sym(Gaussian), A = antisym(Gaussian).
KahlerOperator random_k_hermitian(Rng& rng, Index n);
/// QR of a complex Gaussian matrix with the R-diagonal phases absorbed.
CMat random_unitary(Rng& rng, Index n);
CMat random_hermitian(Rng& rng, Index n);
/// Rank drawn uniformly in [1, n].
CMat random_projector(Rng& rng, Index n);
CVec random_complex_state(Rng& rng, Index n);

}  // namespace kqm
