#include "adic/markov.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <random>

namespace adic {

namespace {

class ExactProvider final : public MeasureProvider {
public:
    explicit ExactProvider(const TowerSystem& sys) : sys_(sys) {
        if (!sys_.exact_roof_measure(1))
            throw MeasureUnavailableError("generator '" + sys.describe() +
                                          "' supplies no exact measures");
    }

    ScalarVec roof_measure(int n) const override {
        auto mu = sys_.exact_roof_measure(n);
        if (!mu) throw MeasureUnavailableError("no exact measure at level " + std::to_string(n));
        return *mu;
    }

    bool exact() const override { return true; }

private:
    const TowerSystem& sys_;
};

class FrequencyProvider final : public MeasureProvider {
public:
    FrequencyProvider(const TowerSystem& sys, int depth, BigRational tol)
        : sys_(sys), depth_(depth), tol_(std::move(tol)) {}

    ScalarVec roof_measure(int n) const override {
        if (n >= depth_)
            throw MeasureUnavailableError("frequency depth " + std::to_string(depth_) +
                                          " cannot estimate level " + std::to_string(n));
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(n);
        if (it == cache_.end())
            it = cache_.emplace(n, invariant_measure_approx(sys_, n, depth_, tol_).values).first;
        return it->second;
    }

    bool exact() const override { return false; }
    BigRational tolerance() const override { return tol_; }

private:
    const TowerSystem& sys_;
    int depth_;
    BigRational tol_;
    mutable std::mutex mu_;
    mutable std::map<int, ScalarVec> cache_;
};

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::shared_ptr<MeasureProvider> exact_measures(const TowerSystem& sys) {
    return std::make_shared<ExactProvider>(sys);
}

std::shared_ptr<MeasureProvider> frequency_measures(const TowerSystem& sys, int depth,
                                                    BigRational tol) {
    return std::make_shared<FrequencyProvider>(sys, depth, std::move(tol));
}

TransitionMatrix transition_matrix(const TowerSystem& sys, const MeasureProvider& mp, int n) {
    if (n < 1) throw LevelOutOfRangeError("transition level must be >= 1");
    ScalarVec mu_n = mp.roof_measure(n);
    ScalarVec mu_prev;
    if (n == 1)
        mu_prev = {Scalar(1L)};  // trivial level 0: the whole space
    else
        mu_prev = mp.roof_measure(n - 1);

    Mat<BigInt> m = sys.matrix(n);
    TransitionMatrix out;
    out.level = n;
    out.q = Mat<Scalar>(m.cols, m.rows);
    for (int t = 0; t < m.cols; ++t)
        for (int tb = 0; tb < m.rows; ++tb)
            out.q.at(t, tb) = Scalar(m.at(tb, t)) * mu_n[static_cast<size_t>(tb)] /
                              mu_prev[static_cast<size_t>(t)];

    // row-sum invariant: exact stochasticity in exact mode, bounded drift in
    // frequency mode
    Scalar bound = mp.exact() ? Scalar(0L) : Scalar(BigRational(m.rows) * mp.tolerance());
    for (int t = 0; t < m.cols; ++t) {
        Scalar row(0L);
        for (int tb = 0; tb < m.rows; ++tb) row += out.q.at(t, tb);
        Scalar drift = (row - Scalar(1L)).abs();
        if (drift > bound)
            throw RowSumViolationError("row " + std::to_string(t + 1) + " at level " +
                                       std::to_string(n) + " sums to " + row.decimal(10));
    }
    return out;
}

ScalarVec marginal(const TowerSystem& sys, const MeasureProvider& mp, int n) {
    ScalarVec mu = mp.roof_measure(n);
    auto h = sys.heights(n);
    ScalarVec out(mu.size());
    for (size_t t = 0; t < mu.size(); ++t) out[t] = Scalar(h[t]) * mu[t];
    return out;
}

std::vector<int> chain_sample(const TowerSystem& sys, const MeasureProvider& mp, uint64_t seed,
                              int N) {
    std::vector<int> path(static_cast<size_t>(N) + 1);
    path[0] = 1;
    std::mt19937_64 rng(seed);
    for (int n = 1; n <= N; ++n) {
        TransitionMatrix q = transition_matrix(sys, mp, n);
        int t = path[static_cast<size_t>(n - 1)] - 1;
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        double acc = 0;
        int pick = q.q.cols - 1;
        for (int tb = 0; tb < q.q.cols; ++tb) {
            acc += q.q.at(t, tb).to_double();
            if (u < acc) {
                pick = tb;
                break;
            }
        }
        path[static_cast<size_t>(n)] = pick + 1;
    }
    return path;
}

std::vector<std::vector<int>> sample_paths(const TowerSystem& sys, const MeasureProvider& mp,
                                           uint64_t seed, int N, int paths) {
    // precompute the rows as doubles once
    std::vector<std::vector<std::vector<double>>> rows(static_cast<size_t>(N) + 1);
    for (int n = 1; n <= N; ++n) {
        TransitionMatrix q = transition_matrix(sys, mp, n);
        rows[static_cast<size_t>(n)].assign(static_cast<size_t>(q.q.rows), {});
        for (int t = 0; t < q.q.rows; ++t) {
            auto& row = rows[static_cast<size_t>(n)][static_cast<size_t>(t)];
            row.resize(static_cast<size_t>(q.q.cols));
            for (int tb = 0; tb < q.q.cols; ++tb) row[static_cast<size_t>(tb)] = q.q.at(t, tb).to_double();
        }
    }
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<size_t>(paths));
    for (int p = 0; p < paths; ++p) {
        uint64_t s = seed + static_cast<uint64_t>(p);
        std::mt19937_64 rng(splitmix64(s));
        std::vector<int> path(static_cast<size_t>(N) + 1);
        path[0] = 1;
        for (int n = 1; n <= N; ++n) {
            const auto& row = rows[static_cast<size_t>(n)][static_cast<size_t>(path[static_cast<size_t>(n - 1)] - 1)];
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            double acc = 0;
            int pick = static_cast<int>(row.size()) - 1;
            for (size_t tb = 0; tb < row.size(); ++tb) {
                acc += row[tb];
                if (u < acc) {
                    pick = static_cast<int>(tb);
                    break;
                }
            }
            path[static_cast<size_t>(n)] = pick + 1;
        }
        out.push_back(std::move(path));
    }
    return out;
}

MixingEstimate mixing_estimate(const TowerSystem& sys, const MeasureProvider& mp, int n, int K) {
    if (K < 1 || K >= n) throw BadRangeError("mixing needs 1 <= K < n");
    ScalarVec pi = marginal(sys, mp, n);

    MixingEstimate out;
    Mat<Scalar> r;  // Q(n-k+1) ... Q(n)
    Scalar dob_prod(1L);
    for (int k = 1; k <= K; ++k) {
        TransitionMatrix step = transition_matrix(sys, mp, n - k + 1);
        r = (k == 1) ? step.q : step.q * r;
        dob_prod = dob_prod * dobrushin(step);
        Scalar sup(0L);
        for (int t = 0; t < r.rows; ++t)
            for (int tb = 0; tb < r.cols; ++tb) {
                Scalar d = (r.at(t, tb) - pi[static_cast<size_t>(tb)]).abs();
                if (d > sup) sup = d;
            }
        out.sup_differences.emplace_back(k, sup);
        out.dobrushin_products.push_back(dob_prod);
    }

    // least squares on log(diff) over the strictly positive entries
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (const auto& [k, d] : out.sup_differences) {
        double dv = d.to_double();
        if (dv <= 0) continue;
        double x = k, y = std::log(dv);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++cnt;
    }
    if (cnt >= 2) {
        double denom = cnt * sxx - sx * sx;
        double slope = (cnt * sxy - sx * sy) / denom;
        double inter = (sy - slope * sx) / cnt;
        out.beta = std::exp(slope);
        out.c = std::exp(inter);
        double ss = 0;
        for (const auto& [k, d] : out.sup_differences) {
            double dv = d.to_double();
            if (dv <= 0) continue;
            double e = std::log(dv) - (inter + slope * k);
            ss += e * e;
        }
        out.fit_residual = std::sqrt(ss / cnt);
    } else {
        out.beta = 0;
        out.c = 0;
        out.fit_residual = 0;
    }
    return out;
}

Scalar dobrushin(const TransitionMatrix& q) {
    Scalar best(0L);
    for (int r = 0; r < q.q.rows; ++r)
        for (int s = r + 1; s < q.q.rows; ++s) {
            Scalar l1(0L);
            for (int c = 0; c < q.q.cols; ++c) l1 += (q.q.at(r, c) - q.q.at(s, c)).abs();
            if (l1 > best) best = l1;
        }
    return best * Scalar(BigRational(1, 2));
}

}  // namespace adic
