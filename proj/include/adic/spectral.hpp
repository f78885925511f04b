#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adic/coding.hpp"
#include "adic/linalg.hpp"
#include "adic/scalar.hpp"
#include "adic/tower.hpp"

namespace adic {

/// A candidate eigenvalue exp(2*pi*i*alpha), represented by alpha alone.
/// Adaptive candidates may carry a refinement callback that re-supplies the
/// enclosure at higher precision; without one, precision failures throw.
struct EigenCandidate {
    Scalar alpha;
    std::string description;
    std::function<AdaptiveReal(long bits)> refine;
};

enum class Verdict {
    ContinuousLikely,
    MeasurableNotContinuousLikely,
    NonEigenvalueLikely,
    Inconclusive,
};

std::string verdict_name(Verdict v);

/// Heuristic thresholds for the finite-sum diagnostics; every value is
/// recorded into the report. The (1-sum) Cauchy test uses eps1, the
/// (2-sum) test eps2, and divergence is flagged when the tail of the 1-sum
/// grows at least log_slope * log10(window).
struct ClassifyPolicy {
    int min_terms = 8;
    double window_fraction = 0.5;
    double eps1 = 1e-6;
    double eps2 = 1e-2;
    double log_slope = 0.05;
};

struct SeriesDiagnostics {
    int window = 0;
    double s1_tail = 0;
    double s2_tail = 0;
    double max_tail_term = 0;
};

struct SpectralReport {
    int N = 0;
    std::string alpha_text;
    long precision_bits = 0;         // 0 for exact candidates
    std::vector<Scalar> terms;       // index i holds the level n = i + 2 term
    std::vector<double> cum1, cum2;  // running sums (numeric view)
    Scalar S1, S2;
    std::optional<ScalarVec> kappa;  // ||P(n, m) v|| when a decomposition is attached
    Verdict verdict = Verdict::Inconclusive;
    bool classified = false;
    ClassifyPolicy policy;
    SeriesDiagnostics diagnostics;
};

// Term at level n is the distance of alpha * H(n) = alpha * P(n) H(1) to
// the integer lattice, in the componentwise-max sense; partial sums for
// exponents 1 and 2 accumulate in level order. No verdict is set.
SpectralReport norm_series(const TowerSystem& sys, const EigenCandidate& cand, int N);

Verdict classify(SpectralReport& report, const ClassifyPolicy& policy = {});

/// Integer/shrinking split of alpha * H(m): alpha * H(m) = w + v with w an
/// integer vector and the images of v under the level products shrinking.
/// The decay list samples ||P(n, m) v|| at the levels where it reaches a
/// new minimum; acceptance additionally requires the tail quarter of the
/// examined window to stay below tol.
struct Decomposition {
    int m = 0;
    std::vector<BigInt> w;
    ScalarVec v;
    std::vector<std::pair<int, Scalar>> decay;  // (level, norm) at new minima
    Scalar alpha;
};

// Searches m = 2..max_m; integer candidates are the componentwise nearest
// vector plus offsets up to search_radius in each coordinate (the nearest
// rounding alone can miss the shrinking residual when it exceeds 1/2).
Decomposition tendto0_decompose(const TowerSystem& sys, const EigenCandidate& cand, int max_m,
                                int decay_window, const Scalar& tol, int search_radius = 2);

// Exact change of base level to m = 1: solves P(m) x = v and verifies
// alpha * H(1) - x is an integer vector; throws NotRebasedError otherwise.
Decomposition rebase_to_level1(const TowerSystem& sys, const Decomposition& d);

// Sufficient continuity sum: sum over m of (sup H(m+1) / inf H(m)) *
// sup_k |lambda^{h_k(m)} - 1|, the last factor evaluated as
// 2 sin(pi |||alpha h|||) through enclosures. Returns the Cauchy verdict of
// the partial sums and the final sum.
std::pair<bool, Scalar> contgen_sufficient(const TowerSystem& sys, const EigenCandidate& cand,
                                           int N);

struct OscillationReport {
    int N = 0;
    int window = 0;
    std::vector<double> per_code;  // circle-metric oscillation per sampled code
    double sup = 0;
};

// Convergence probe for alpha * r_n modulo 1 along sampled codes: large
// oscillation late in the range falsifies uniform convergence at this scale.
OscillationReport uniform_probe(const TowerSystem& sys, const EigenCandidate& cand,
                                const std::vector<PointCode>& codes, int N);

// Eigenfunction approximant g_n = sum_{j=1}^{n-1} <s_j(code), P(j) v> for a
// decomposition in level-1 form on a unit-base-height system. Satisfies
// g_n - alpha * r_n in Z exactly for exact scalars.
Scalar eigenfunction_g(const TowerSystem& sys, const Decomposition& level1,
                       const PointCode& code, int n);

// kappa_n = ||P(n, d.m) v|| for n = d.m+1 .. N, attached to the report.
void attach_kappa(SpectralReport& report, const TowerSystem& sys, const Decomposition& d, int N);

}  // namespace adic
