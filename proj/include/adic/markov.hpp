#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "adic/linalg.hpp"
#include "adic/tower.hpp"

namespace adic {

/// Supplies roof-measure vectors per level, either exactly (generator
/// structure) or from tower frequencies at a fixed depth and tolerance.
class MeasureProvider {
public:
    virtual ~MeasureProvider() = default;
    virtual ScalarVec roof_measure(int n) const = 0;
    virtual bool exact() const = 0;
    virtual BigRational tolerance() const { return BigRational(0); }
};

std::shared_ptr<MeasureProvider> exact_measures(const TowerSystem& sys);
std::shared_ptr<MeasureProvider> frequency_measures(const TowerSystem& sys, int depth,
                                                    BigRational tol);

/// Row-stochastic step matrix of the tower-index chain: rows are towers of
/// level n-1, columns towers of level n.
struct TransitionMatrix {
    int level = 0;
    Mat<Scalar> q;
};

TransitionMatrix transition_matrix(const TowerSystem& sys, const MeasureProvider& mp, int n);

// Law of the tower index at level n: h_t(n) * mu(B_t(n)).
ScalarVec marginal(const TowerSystem& sys, const MeasureProvider& mp, int n);

// One path tau_0..tau_N of the chain; tau_0 = 1. Bit-reproducible for a
// fixed seed.
std::vector<int> chain_sample(const TowerSystem& sys, const MeasureProvider& mp, uint64_t seed,
                              int N);

// `paths` independent samples with per-path seeds derived from (seed, index).
std::vector<std::vector<int>> sample_paths(const TowerSystem& sys, const MeasureProvider& mp,
                                           uint64_t seed, int N, int paths);

struct MixingEstimate {
    std::vector<std::pair<int, Scalar>> sup_differences;  // (k, sup-diff)
    ScalarVec dobrushin_products;                         // aligned with k
    double c = 0;
    double beta = 0;
    double fit_residual = 0;
};

// For k = 1..K, the sup over (t, tbar) of |Q(n-k+1)...Q(n) - marginal(n)|,
// with the product of step-contraction coefficients as certificate, and a
// least-squares fit log(diff) ~ log c + k log beta over the positive rows.
MixingEstimate mixing_estimate(const TowerSystem& sys, const MeasureProvider& mp, int n, int K);

// Half the largest L1 distance between rows.
Scalar dobrushin(const TransitionMatrix& q);

}  // namespace adic
