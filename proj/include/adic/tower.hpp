#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "adic/linalg.hpp"
#include "adic/numbers.hpp"
#include "adic/scalar.hpp"

namespace adic {

/// One level of an ordered tower system: the crossing words of its towers,
/// read bottom to top, over the alphabet {1..C} of the previous level.
/// Every word ends in 1 and mentions every previous-level tower.
struct LevelWords {
    std::vector<std::vector<int>> words;

    int tower_count() const { return static_cast<int>(words.size()); }
};

/// Supplies level data on demand. Implementations may be finite lists,
/// periodic repetitions, or programmatic recursions.
class LevelSource {
public:
    virtual ~LevelSource() = default;

    // 1-based level index; throws LevelOutOfRangeError beyond max_level().
    virtual LevelWords level(int n) const = 0;

    // nullopt means unbounded.
    virtual std::optional<int> max_level() const { return std::nullopt; }

    // Whether the set of distinct transition matrices is known to be finite
    // over the whole (possibly infinite) level range. This certifies linear
    // recurrence beyond any computed prefix.
    virtual bool finite_matrix_set() const = 0;

    // Exact roof-measure vector at a level, when the generator knows one.
    virtual std::optional<ScalarVec> exact_roof_measure(int) const { return std::nullopt; }

    virtual std::string describe() const = 0;
};

struct LrEstimate {
    BigRational constant;        // max over 2<=n<=N, l, k of h_l(n)/h_k(n-1)
    bool matrix_set_finite;      // generator metadata
};

struct MeasureVector {
    int level = 0;
    ScalarVec values;  // (mu(B_t(level)))_t
    bool exact = false;
    BigRational tolerance;  // spread bound in approximate mode
};

/// Ordered tower system with memoized derived data: transition matrices
/// M(n), height vectors H(n) (H(1) = M(1)), and cumulative products. Levels
/// are validated on first access: letters in range, every letter present
/// (strictly positive matrix), last letter 1.
class TowerSystem {
public:
    explicit TowerSystem(std::shared_ptr<const LevelSource> src);

    LevelWords level(int n) const;
    int tower_count(int n) const;  // C(n); C(0) = 1
    Mat<BigInt> matrix(int n) const;
    std::vector<BigInt> heights(int n) const;

    // P(n, m) = M(n) M(n-1) ... M(m+1), for n > m >= 1.
    Mat<BigInt> product(int n, int m) const;
    // P(n) = P(n, 1), cached cumulatively.
    Mat<BigInt> product_from_base(int n) const;

    LrEstimate lr_constant(int N) const;

    bool kr5prime_holds(int upto) const;  // entries >= 2 for 2 <= n <= upto

    std::optional<int> max_level() const { return src_->max_level(); }
    bool finite_matrix_set() const { return src_->finite_matrix_set(); }
    std::optional<ScalarVec> exact_roof_measure(int n) const;
    std::string describe() const { return src_->describe(); }
    const std::shared_ptr<const LevelSource>& source() const { return src_; }

    bool unit_base_heights() const;  // H(1) = (1,...,1)?

private:
    void ensure_level_locked(int n) const;
    void check_range(int n) const;

    std::shared_ptr<const LevelSource> src_;
    mutable std::mutex mu_;
    mutable std::vector<LevelWords> levels_;      // [n-1] -> level n
    mutable std::vector<Mat<BigInt>> matrices_;   // [n-1] -> M(n)
    mutable std::vector<std::vector<BigInt>> heights_;  // [n-1] -> H(n)
    mutable std::vector<Mat<BigInt>> prod_;       // [n-2] -> P(n), n >= 2
};

// ---- sources ----

std::shared_ptr<const LevelSource> explicit_source(std::vector<LevelWords> levels);
// First `levels.size() - period` entries are a fixed prefix; the trailing
// `period` entries repeat forever.
std::shared_ptr<const LevelSource> periodic_source(std::vector<LevelWords> levels, int period);
std::shared_ptr<const LevelSource> odometer_source();

TowerSystem make_odometer();

// System whose level n >= 2 merges levels 2n-1 and 2n-2 of the base system:
// each letter of a level-(2n-1) word is expanded by the matching level-(2n-2)
// word. The merged matrices are the pair products, and entries reach >= 2.
TowerSystem telescope(const TowerSystem& sys);

// ---- invariant measure ----

// Exact mode: requires generator-supplied exact structure.
MeasureVector invariant_measure_exact(const TowerSystem& sys, int n);

// Approximate mode: tower frequencies P_{l,k}(N, n) / h_l(N), cross-checked
// over l; the spread over l must be <= tol per component.
MeasureVector invariant_measure_approx(const TowerSystem& sys, int n, int depth,
                                       const BigRational& tol);

// Validation helper used by sources and tests; level index only for messages.
void validate_level_words(const LevelWords& w, int prev_towers, int n);

}  // namespace adic
