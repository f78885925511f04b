#include "adic/example_ab.hpp"

#include <mutex>

namespace adic {
namespace example_ab {

namespace {

const std::vector<std::vector<int>> kWordsA = {{2, 2, 1, 1, 1, 1, 1}, {2, 2, 2, 1, 1}};
const std::vector<std::vector<int>> kWordsB = {{2, 1, 1}, {2, 1}};

Mat<BigInt> int_matrix2(long a, long b, long c, long d) {
    Mat<BigInt> m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

// Memoized driving recursion shared by the level source and the free
// functions. Exact comparisons only.
class ScaleTable {
public:
    static ScaleTable& instance() {
        static ScaleTable table;
        return table;
    }

    ScaleState state(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<int>(states_.size()) < n) {
            const ScaleState& prev = states_.back();
            QuadraticReal next =
                (prev.choice == 'A') ? beta_a() * prev.scale : beta_b() * prev.scale;
            int k = prev.n + 1;
            QuadraticReal nv = next.scaled(BigRational(k));
            char choice = (nv <= QuadraticReal(1L)) ? 'A' : 'B';
            states_.push_back({k, next, choice});
        }
        return states_[static_cast<size_t>(n - 1)];
    }

private:
    ScaleTable() {
        QuadraticReal one(1L);
        // boundary case 1*1 <= 1 takes the 'A' branch
        states_.push_back({1, one, 'A'});
    }

    std::mutex mu_;
    std::vector<ScaleState> states_;
};

class ExampleSource final : public LevelSource {
public:
    explicit ExampleSource(int max_depth) : max_depth_(max_depth) {}

    LevelWords level(int n) const override {
        if (n < 1) throw LevelOutOfRangeError("level must be >= 1");
        if (n == 1) return LevelWords{{{1}, {1}}};
        char choice = ScaleTable::instance().state(n - 1).choice;
        return LevelWords{choice == 'A' ? kWordsA : kWordsB};
    }

    std::optional<int> max_level() const override {
        if (max_depth_ <= 0) return std::nullopt;
        return max_depth_;
    }

    bool finite_matrix_set() const override { return true; }

    std::optional<ScalarVec> exact_roof_measure(int n) const override {
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<int>(measures_.size()) < n) {
            if (measures_.empty()) {
                measures_.push_back(base_measure());
                continue;
            }
            int k = static_cast<int>(measures_.size()) + 1;
            // mu(k) = M(k)^{-1} mu(k-1); A and B are symmetric, so this is
            // the transpose relation from the measure recursion.
            char choice = ScaleTable::instance().state(k - 1).choice;
            const ScalarVec& prev = measures_.back();
            ScalarVec next(2);
            if (choice == 'A') {
                // A^{-1} = (1/11) [[3,-2],[-2,5]]
                next[0] = (prev[0] * Scalar(3L) - prev[1] * Scalar(2L)) / Scalar(11L);
                next[1] = (prev[1] * Scalar(5L) - prev[0] * Scalar(2L)) / Scalar(11L);
            } else {
                // B^{-1} = [[1,-1],[-1,2]]
                next[0] = prev[0] - prev[1];
                next[1] = prev[1] * Scalar(2L) - prev[0];
            }
            measures_.push_back(std::move(next));
        }
        return measures_[static_cast<size_t>(n - 1)];
    }

    std::string describe() const override { return "example-ab"; }

private:
    int max_depth_;
    mutable std::mutex mu_;
    mutable std::vector<ScalarVec> measures_;
};

}  // namespace

Mat<BigInt> matrix_a() { return int_matrix2(5, 2, 2, 3); }
Mat<BigInt> matrix_b() { return int_matrix2(2, 1, 1, 1); }

QuadraticReal golden() { return QuadraticReal(BigRational(1, 2), BigRational(1, 2), 5); }

QuadraticReal golden_minus_one() {
    return QuadraticReal(BigRational(-1, 2), BigRational(1, 2), 5);
}

QuadraticReal beta_a() { return QuadraticReal(BigRational(4), BigRational(-1), 5); }

QuadraticReal beta_b() { return QuadraticReal(BigRational(3, 2), BigRational(-1, 2), 5); }

ScalarVec small_eigenvector() {
    // (golden - 2, golden - 1)
    return {Scalar(QuadraticReal(BigRational(-3, 2), BigRational(1, 2), 5)),
            Scalar(golden_minus_one())};
}

ScalarVec base_measure() {
    // (golden - 1, 2 - golden), orthogonal to the small eigenvector and
    // normalized against H(1) = (1,1).
    return {Scalar(golden_minus_one()),
            Scalar(QuadraticReal(BigRational(3, 2), BigRational(-1, 2), 5))};
}

std::vector<ScaleState> vn_sequence(int N) {
    if (N < 1) throw BadRangeError("sequence length must be >= 1");
    std::vector<ScaleState> out;
    out.reserve(static_cast<size_t>(N));
    for (int n = 1; n <= N; ++n) out.push_back(ScaleTable::instance().state(n));
    return out;
}

TowerSystem build_example(int max_depth) {
    return TowerSystem(std::make_shared<ExampleSource>(max_depth));
}

void verify_pnv(int N) {
    if (N < 2) throw BadRangeError("verification depth must be >= 2");
    ScalarVec v = small_eigenvector();
    ScalarVec cur = v;
    for (int n = 2; n <= N; ++n) {
        char choice = ScaleTable::instance().state(n - 1).choice;
        Mat<Scalar> m = to_scalar(choice == 'A' ? matrix_a() : matrix_b());
        cur = m * cur;
        Scalar expected_scale = Scalar(ScaleTable::instance().state(n).scale);
        for (int t = 0; t < 2; ++t)
            if (!(cur[static_cast<size_t>(t)] == expected_scale * v[static_cast<size_t>(t)]))
                throw IdentityViolationError("matrix product drifted off the eigenline", n);
    }
}

std::pair<QuadraticReal, QuadraticReal> nvn_bounds(int N) {
    if (N < 2) throw BadRangeError("bound depth must be >= 2");
    QuadraticReal lo, hi;
    bool first = true;
    for (int n = 2; n <= N; ++n) {
        QuadraticReal nv =
            ScaleTable::instance().state(n).scale.scaled(BigRational(n));
        if (first) {
            lo = hi = nv;
            first = false;
        } else if (nv < lo) {
            lo = nv;
        } else if (nv > hi) {
            hi = nv;
        }
    }
    return {lo, hi};
}

QuadraticReal emu_alpha(long l, const std::array<BigInt, 2>& w) {
    if (l < 0) throw BadRangeError("lattice exponent must be >= 0");
    // row = (golden-1, 2-golden) A^{-l}, accumulated exactly; det A = 11.
    QuadraticReal r0 = golden_minus_one();
    QuadraticReal r1 = QuadraticReal(BigRational(3, 2), BigRational(-1, 2), 5);
    for (long i = 0; i < l; ++i) {
        QuadraticReal n0 = (r0.scaled(BigRational(3)) - r1.scaled(BigRational(2)))
                               .scaled(BigRational(1, 11));
        QuadraticReal n1 = (r1.scaled(BigRational(5)) - r0.scaled(BigRational(2)))
                               .scaled(BigRational(1, 11));
        r0 = n0;
        r1 = n1;
    }
    return r0.scaled(BigRational(w[0])) + r1.scaled(BigRational(w[1]));
}

std::optional<EmuWitness> emu_member(const QuadraticReal& alpha, long l_max, const BigInt& w_box) {
    if (l_max < 0 || w_box <= 0) throw BadRangeError("search bounds must be positive");
    // The candidate alphas at each l span a rank-2 rational lattice in the
    // (rational, sqrt-coefficient) plane, so membership is a 2x2 exact solve
    // rather than a box enumeration; integer shifts of alpha are absorbed
    // into w, sign is checked explicitly.
    for (int s = 0; s < 2; ++s) {
        QuadraticReal cand = (s == 0) ? alpha : -alpha;
        cand = cand.frac();
        QuadraticReal r0 = golden_minus_one();
        QuadraticReal r1 = QuadraticReal(BigRational(3, 2), BigRational(-1, 2), 5);
        for (long l = 0; l <= l_max; ++l) {
            // w0 * r0 + w1 * r1 = cand, split into rational and sqrt parts
            BigRational p1 = r0.a(), q1 = r0.b();
            BigRational p2 = r1.a(), q2 = r1.b();
            BigRational det = p1 * q2 - p2 * q1;
            if (det != 0) {
                BigRational w0 = (cand.a() * q2 - cand.b() * p2) / det;
                BigRational w1 = (cand.b() * p1 - cand.a() * q1) / det;
                if (denominator(w0) == 1 && denominator(w1) == 1) {
                    BigInt i0 = numerator(w0), i1 = numerator(w1);
                    if (boost::multiprecision::abs(i0) <= w_box &&
                        boost::multiprecision::abs(i1) <= w_box)
                        return EmuWitness{l, {i0, i1}};
                }
            }
            QuadraticReal n0 = (r0.scaled(BigRational(3)) - r1.scaled(BigRational(2)))
                                   .scaled(BigRational(1, 11));
            QuadraticReal n1 = (r1.scaled(BigRational(5)) - r0.scaled(BigRational(2)))
                                   .scaled(BigRational(1, 11));
            r0 = n0;
            r1 = n1;
        }
    }
    return std::nullopt;
}

}  // namespace example_ab
}  // namespace adic
