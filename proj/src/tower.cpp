#include "adic/tower.hpp"

#include <algorithm>

namespace adic {

void validate_level_words(const LevelWords& w, int prev_towers, int n) {
    if (w.words.empty())
        throw InvalidWordError("level " + std::to_string(n) + " has no towers");
    for (int t = 0; t < w.tower_count(); ++t) {
        const auto& word = w.words[t];
        if (word.empty())
            throw InvalidWordError("level " + std::to_string(n) + " tower " +
                                   std::to_string(t + 1) + " has an empty word");
        std::vector<bool> seen(static_cast<size_t>(prev_towers), false);
        for (int letter : word) {
            if (letter < 1 || letter > prev_towers)
                throw InvalidWordError("level " + std::to_string(n) + " tower " +
                                       std::to_string(t + 1) + ": letter " +
                                       std::to_string(letter) + " outside 1.." +
                                       std::to_string(prev_towers));
            seen[static_cast<size_t>(letter - 1)] = true;
        }
        if (word.back() != 1)
            throw Kr6ViolationError("level " + std::to_string(n) + " tower " +
                                    std::to_string(t + 1) + " does not end in tower 1");
        for (int k = 0; k < prev_towers; ++k)
            if (!seen[static_cast<size_t>(k)])
                throw Kr5ViolationError("level " + std::to_string(n) + " tower " +
                                        std::to_string(t + 1) + " never crosses tower " +
                                        std::to_string(k + 1));
    }
}

TowerSystem::TowerSystem(std::shared_ptr<const LevelSource> src) : src_(std::move(src)) {
    if (!src_) throw Error("null level source");
    level(1);  // fail fast on an unusable base level
}

void TowerSystem::check_range(int n) const {
    if (n < 1) throw LevelOutOfRangeError("level index must be >= 1, got " + std::to_string(n));
    auto mx = src_->max_level();
    if (mx && n > *mx)
        throw LevelOutOfRangeError("level " + std::to_string(n) + " beyond available depth " +
                                   std::to_string(*mx));
}

void TowerSystem::ensure_level_locked(int n) const {
    while (static_cast<int>(levels_.size()) < n) {
        int k = static_cast<int>(levels_.size()) + 1;
        LevelWords w = src_->level(k);
        int prev = (k == 1) ? 1 : levels_[static_cast<size_t>(k - 2)].tower_count();
        validate_level_words(w, prev, k);

        Mat<BigInt> m(w.tower_count(), prev);
        for (int t = 0; t < w.tower_count(); ++t)
            for (int letter : w.words[static_cast<size_t>(t)]) m.at(t, letter - 1) += 1;

        std::vector<BigInt> h;
        if (k == 1) {
            h.resize(static_cast<size_t>(w.tower_count()));
            for (int t = 0; t < w.tower_count(); ++t)
                h[static_cast<size_t>(t)] = BigInt(w.words[static_cast<size_t>(t)].size());
        } else {
            h = m * heights_[static_cast<size_t>(k - 2)];
        }

        if (k >= 2) {
            if (k == 2)
                prod_.push_back(m);
            else
                prod_.push_back(m * prod_[static_cast<size_t>(k - 3)]);
        }
        levels_.push_back(std::move(w));
        matrices_.push_back(std::move(m));
        heights_.push_back(std::move(h));
    }
}

LevelWords TowerSystem::level(int n) const {
    check_range(n);
    std::lock_guard<std::mutex> lock(mu_);
    ensure_level_locked(n);
    return levels_[static_cast<size_t>(n - 1)];
}

int TowerSystem::tower_count(int n) const {
    if (n == 0) return 1;
    return level(n).tower_count();
}

Mat<BigInt> TowerSystem::matrix(int n) const {
    check_range(n);
    std::lock_guard<std::mutex> lock(mu_);
    ensure_level_locked(n);
    return matrices_[static_cast<size_t>(n - 1)];
}

std::vector<BigInt> TowerSystem::heights(int n) const {
    check_range(n);
    std::lock_guard<std::mutex> lock(mu_);
    ensure_level_locked(n);
    return heights_[static_cast<size_t>(n - 1)];
}

Mat<BigInt> TowerSystem::product(int n, int m) const {
    if (n <= m) throw BadRangeError("product requires n > m, got n=" + std::to_string(n) +
                                    " m=" + std::to_string(m));
    if (m < 1) throw LevelOutOfRangeError("product lower level must be >= 1");
    check_range(n);
    std::lock_guard<std::mutex> lock(mu_);
    ensure_level_locked(n);
    if (m == 1) return prod_[static_cast<size_t>(n - 2)];
    Mat<BigInt> p = matrices_[static_cast<size_t>(m)];  // M(m+1)
    for (int k = m + 2; k <= n; ++k) p = matrices_[static_cast<size_t>(k - 1)] * p;
    return p;
}

Mat<BigInt> TowerSystem::product_from_base(int n) const {
    if (n < 2) throw BadRangeError("cumulative product starts at level 2");
    check_range(n);
    std::lock_guard<std::mutex> lock(mu_);
    ensure_level_locked(n);
    return prod_[static_cast<size_t>(n - 2)];
}

LrEstimate TowerSystem::lr_constant(int N) const {
    if (N < 2) throw BadRangeError("recurrence constant needs depth >= 2");
    check_range(N);
    std::lock_guard<std::mutex> lock(mu_);
    ensure_level_locked(N);
    BigRational best(0);
    for (int n = 2; n <= N; ++n) {
        const auto& hn = heights_[static_cast<size_t>(n - 1)];
        const auto& hp = heights_[static_cast<size_t>(n - 2)];
        BigInt hmax = *std::max_element(hn.begin(), hn.end());
        BigInt hmin = *std::min_element(hp.begin(), hp.end());
        BigRational ratio(hmax, hmin);
        if (ratio > best) best = ratio;
    }
    return {best, src_->finite_matrix_set()};
}

bool TowerSystem::kr5prime_holds(int upto) const {
    check_range(upto);
    std::lock_guard<std::mutex> lock(mu_);
    ensure_level_locked(upto);
    for (int n = 2; n <= upto; ++n) {
        const auto& m = matrices_[static_cast<size_t>(n - 1)];
        for (const auto& e : m.a)
            if (e < 2) return false;
    }
    return true;
}

std::optional<ScalarVec> TowerSystem::exact_roof_measure(int n) const {
    check_range(n);
    return src_->exact_roof_measure(n);
}

bool TowerSystem::unit_base_heights() const {
    for (const auto& h : heights(1))
        if (h != 1) return false;
    return true;
}

// ---- sources ----

namespace {

class ExplicitSource final : public LevelSource {
public:
    explicit ExplicitSource(std::vector<LevelWords> levels) : levels_(std::move(levels)) {
        if (levels_.empty()) throw Error("explicit source needs at least one level");
    }

    LevelWords level(int n) const override {
        if (n < 1 || n > static_cast<int>(levels_.size()))
            throw LevelOutOfRangeError("explicit source has " + std::to_string(levels_.size()) +
                                       " levels, asked for " + std::to_string(n));
        return levels_[static_cast<size_t>(n - 1)];
    }

    std::optional<int> max_level() const override { return static_cast<int>(levels_.size()); }
    bool finite_matrix_set() const override { return true; }
    std::string describe() const override {
        return "explicit[" + std::to_string(levels_.size()) + "]";
    }

private:
    std::vector<LevelWords> levels_;
};

class PeriodicSource final : public LevelSource {
public:
    PeriodicSource(std::vector<LevelWords> levels, int period)
        : levels_(std::move(levels)), period_(period) {
        if (period_ < 1 || period_ > static_cast<int>(levels_.size()))
            throw Error("period must be within the provided level list");
    }

    LevelWords level(int n) const override {
        if (n < 1) throw LevelOutOfRangeError("level must be >= 1");
        int count = static_cast<int>(levels_.size());
        if (n <= count) return levels_[static_cast<size_t>(n - 1)];
        int idx = count - period_ + (n - count - 1) % period_;
        return levels_[static_cast<size_t>(idx)];
    }

    bool finite_matrix_set() const override { return true; }
    std::string describe() const override {
        return "periodic[" + std::to_string(levels_.size()) + ",p=" + std::to_string(period_) + "]";
    }

private:
    std::vector<LevelWords> levels_;
    int period_;
};

class OdometerSource final : public LevelSource {
public:
    LevelWords level(int n) const override {
        if (n < 1) throw LevelOutOfRangeError("level must be >= 1");
        if (n == 1) return LevelWords{{{1}}};
        return LevelWords{{{1, 1}}};
    }

    bool finite_matrix_set() const override { return true; }

    std::optional<ScalarVec> exact_roof_measure(int n) const override {
        // single tower of height 2^(n-1); normalization forces 2^(1-n)
        return ScalarVec{Scalar(BigRational(1, pow2(n - 1)))};
    }

    std::string describe() const override { return "odometer"; }
};

class TelescopeSource final : public LevelSource {
public:
    explicit TelescopeSource(std::shared_ptr<const LevelSource> base) : base_(std::move(base)) {}

    LevelWords level(int n) const override {
        if (n < 1) throw LevelOutOfRangeError("level must be >= 1");
        if (n == 1) return base_->level(1);
        LevelWords outer = base_->level(2 * n - 1);
        LevelWords inner = base_->level(2 * n - 2);
        LevelWords out;
        out.words.reserve(outer.words.size());
        for (const auto& word : outer.words) {
            std::vector<int> merged;
            for (int letter : word) {
                if (letter < 1 || letter > inner.tower_count())
                    throw InvalidWordError("telescope: letter out of range at level " +
                                           std::to_string(2 * n - 1));
                const auto& expansion = inner.words[static_cast<size_t>(letter - 1)];
                merged.insert(merged.end(), expansion.begin(), expansion.end());
            }
            out.words.push_back(std::move(merged));
        }
        return out;
    }

    std::optional<int> max_level() const override {
        auto mx = base_->max_level();
        if (!mx) return std::nullopt;
        return (*mx + 1) / 2;
    }

    bool finite_matrix_set() const override { return base_->finite_matrix_set(); }

    std::optional<ScalarVec> exact_roof_measure(int n) const override {
        return base_->exact_roof_measure(2 * n - 1);
    }

    std::string describe() const override { return "telescope(" + base_->describe() + ")"; }

private:
    std::shared_ptr<const LevelSource> base_;
};

}  // namespace

std::shared_ptr<const LevelSource> explicit_source(std::vector<LevelWords> levels) {
    return std::make_shared<ExplicitSource>(std::move(levels));
}

std::shared_ptr<const LevelSource> periodic_source(std::vector<LevelWords> levels, int period) {
    return std::make_shared<PeriodicSource>(std::move(levels), period);
}

std::shared_ptr<const LevelSource> odometer_source() { return std::make_shared<OdometerSource>(); }

TowerSystem make_odometer() { return TowerSystem(odometer_source()); }

TowerSystem telescope(const TowerSystem& sys) {
    auto mx = sys.max_level();
    if (mx && *mx < 3) throw LevelOutOfRangeError("telescoping needs at least 3 levels");
    return TowerSystem(std::make_shared<TelescopeSource>(sys.source()));
}

// ---- invariant measure ----

MeasureVector invariant_measure_exact(const TowerSystem& sys, int n) {
    auto mu = sys.exact_roof_measure(n);
    if (!mu)
        throw NoExactStructureError("generator '" + sys.describe() +
                                    "' supplies no exact measure structure");
    MeasureVector out;
    out.level = n;
    out.values = std::move(*mu);
    out.exact = true;
    return out;
}

MeasureVector invariant_measure_approx(const TowerSystem& sys, int n, int depth,
                                       const BigRational& tol) {
    if (depth <= n) throw BadRangeError("measure depth must exceed the target level");
    if (tol <= 0) throw BadRangeError("tolerance must be positive");
    Mat<BigInt> p = sys.product(depth, n);
    const auto hN = sys.heights(depth);
    int rows = p.rows, cols = p.cols;

    // Per-tower frequency columns P_{l,k}(depth, n) / h_l(depth). Row l = 1
    // is reported: P(depth,n) H(n) = H(depth) makes it exactly normalized
    // and exactly compatible with the measure recursion. The spread across
    // the other rows bounds the distance to the true measure.
    for (int k = 0; k < cols; ++k) {
        BigRational lo, hi;
        for (int l = 0; l < rows; ++l) {
            BigRational est(p.at(l, k), hN[static_cast<size_t>(l)]);
            if (l == 0) {
                lo = hi = est;
            } else {
                lo = std::min(lo, est);
                hi = std::max(hi, est);
            }
        }
        if (hi - lo > tol)
            throw DepthInsufficientError("frequency spread " + rational_to_decimal(hi - lo, 12) +
                                         " exceeds tolerance at component " + std::to_string(k + 1));
    }

    MeasureVector out;
    out.level = n;
    out.exact = false;
    out.tolerance = tol;
    out.values.reserve(static_cast<size_t>(cols));
    for (int k = 0; k < cols; ++k)
        out.values.emplace_back(BigRational(p.at(0, k), hN[0]));
    return out;
}

}  // namespace adic
