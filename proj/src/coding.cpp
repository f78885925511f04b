#include "adic/coding.hpp"

#include <algorithm>

namespace adic {

void validate_code(const TowerSystem& sys, const PointCode& code) {
    if (code.depth() == 0) throw IncompatibleCodeError("empty code", 0);
    for (int n = 1; n <= code.depth(); ++n) {
        int tau = code.tower(n), pos = code.position(n);
        LevelWords lvl = sys.level(n);
        if (tau < 1 || tau > lvl.tower_count())
            throw IncompatibleCodeError("tower index out of range", n);
        const auto& word = lvl.words[static_cast<size_t>(tau - 1)];
        if (pos < 1 || pos > static_cast<int>(word.size()))
            throw IncompatibleCodeError("position out of range", n);
        if (n >= 2 && word[static_cast<size_t>(pos - 1)] != code.tower(n - 1))
            throw IncompatibleCodeError("crossing letter does not match tower below", n);
    }
}

std::vector<int> remaining_visits(const TowerSystem& sys, const PointCode& code, int n) {
    if (n < 2 || n > code.depth())
        throw LevelOutOfRangeError("remaining_visits needs 2 <= n <= depth, got " +
                                   std::to_string(n));
    const auto word = sys.level(n).words[static_cast<size_t>(code.tower(n) - 1)];
    std::vector<int> counts(static_cast<size_t>(sys.tower_count(n - 1)), 0);
    for (size_t j = static_cast<size_t>(code.position(n)); j < word.size(); ++j)
        counts[static_cast<size_t>(word[j] - 1)] += 1;
    return counts;
}

BigInt entrance_time(const TowerSystem& sys, const PointCode& code, int n) {
    if (n < 1 || n > code.depth())
        throw LevelOutOfRangeError("entrance_time needs 1 <= n <= depth");
    // r_1 counts the level-1 letters above the current position, each a
    // single stage.
    const auto word1 = sys.level(1).words[static_cast<size_t>(code.tower(1) - 1)];
    BigInt r = BigInt(static_cast<long>(word1.size()) - code.position(1));
    for (int k = 2; k <= n; ++k) {
        auto s = remaining_visits(sys, code, k);
        const auto h = sys.heights(k - 1);
        for (size_t t = 0; t < s.size(); ++t)
            if (s[t]) r += BigInt(s[t]) * h[t];
    }
    return r;
}

std::vector<BigInt> entrance_times(const TowerSystem& sys, const PointCode& code) {
    std::vector<BigInt> rs;
    rs.reserve(static_cast<size_t>(code.depth()));
    const auto word1 = sys.level(1).words[static_cast<size_t>(code.tower(1) - 1)];
    BigInt r = BigInt(static_cast<long>(word1.size()) - code.position(1));
    rs.push_back(r);
    for (int k = 2; k <= code.depth(); ++k) {
        auto s = remaining_visits(sys, code, k);
        const auto h = sys.heights(k - 1);
        for (size_t t = 0; t < s.size(); ++t)
            if (s[t]) r += BigInt(s[t]) * h[t];
        rs.push_back(r);
    }
    return rs;
}

PointCode successor(const TowerSystem& sys, const PointCode& code) {
    int carry_to = 0;
    for (int n = 1; n <= code.depth(); ++n) {
        const auto word = sys.level(n).words[static_cast<size_t>(code.tower(n) - 1)];
        if (code.position(n) < static_cast<int>(word.size())) {
            carry_to = n;
            break;
        }
    }
    if (carry_to == 0)
        throw CarryOverflowError("code is maximal at this truncation; deeper levels needed");

    PointCode out = code;
    out.pairs[static_cast<size_t>(carry_to - 1)].second += 1;
    for (int k = carry_to - 1; k >= 1; --k) {
        int tau_above = out.tower(k + 1), pos_above = out.position(k + 1);
        const auto word = sys.level(k + 1).words[static_cast<size_t>(tau_above - 1)];
        out.pairs[static_cast<size_t>(k - 1)] = {word[static_cast<size_t>(pos_above - 1)], 1};
    }
    return out;
}

PointCode canonical_code(const TowerSystem& sys, int depth, int top, Fill fill) {
    if (depth < 1) throw LevelOutOfRangeError("code depth must be >= 1");
    if (top < 1 || top > sys.tower_count(depth))
        throw LevelOutOfRangeError("top tower out of range at level " + std::to_string(depth));
    PointCode code;
    code.pairs.assign(static_cast<size_t>(depth), {0, 0});
    int tau = top;
    for (int n = depth; n >= 1; --n) {
        const auto word = sys.level(n).words[static_cast<size_t>(tau - 1)];
        int pos = (fill == Fill::Min) ? 1 : static_cast<int>(word.size());
        code.pairs[static_cast<size_t>(n - 1)] = {tau, pos};
        if (n > 1) tau = word[static_cast<size_t>(pos - 1)];
    }
    return code;
}

std::vector<int> orbit_labels(const TowerSystem& sys, const PointCode& code, long K) {
    if (!sys.unit_base_heights())
        throw HeightNotUnitError("orbit labels need all level-1 heights equal to 1");
    if (K < 1) throw BadRangeError("orbit length must be >= 1");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(K));
    PointCode cur = code;
    out.push_back(cur.tower(1));
    for (long i = 1; i < K; ++i) {
        cur = successor(sys, cur);
        out.push_back(cur.tower(1));
    }
    return out;
}

std::pair<PointCode, PointCode> witness_pair(const TowerSystem& sys,
                                             const std::vector<std::pair<int, int>>& selected,
                                             int depth) {
    int need = 1;
    for (auto [n, i] : selected) {
        if (n < 2 || n % 2 != 0)
            throw BadRangeError("selected levels must be even and >= 2, got " + std::to_string(n));
        (void)i;
        need = std::max(need, n + 1);
    }
    if (depth < need) throw BadRangeError("witness depth must cover every selected level + 1");
    if (!sys.kr5prime_holds(depth))
        throw Kr5PrimeViolationError("witness construction needs all entries >= 2; telescope first");

    // Base point: tower 1 with top positions at every level. The last-letter
    // rule makes this self-consistent.
    PointCode x;
    x.pairs.reserve(static_cast<size_t>(depth));
    for (int n = 1; n <= depth; ++n) {
        int m1 = static_cast<int>(sys.level(n).words[0].size());
        x.pairs.emplace_back(1, m1);
    }
    PointCode y = x;

    for (auto [n, i] : selected) {
        if (i < 1 || i > sys.tower_count(n))
            throw BadRangeError("selected tower index out of range at level " + std::to_string(n));
        // In tower 1 of level n+1, find adjacent crossings: position k+1
        // visits tower i. Entries >= 2 guarantee i occurs past position 1.
        const auto word = sys.level(n + 1).words[0];
        int k = 0;
        for (size_t j = 1; j < word.size(); ++j)
            if (word[j] == i) {
                k = static_cast<int>(j);  // 1-based position of the letter before
                break;
            }
        if (k == 0)
            throw NoAdjacentOccurrenceError("tower " + std::to_string(i) +
                                            " has no occurrence past position 1 at level " +
                                            std::to_string(n) + "; validation bug");
        int tx = word[static_cast<size_t>(k - 1)];
        int mx = static_cast<int>(sys.level(n).words[static_cast<size_t>(tx - 1)].size());
        int my = static_cast<int>(sys.level(n).words[static_cast<size_t>(i - 1)].size());
        x.pairs[static_cast<size_t>(n - 1)] = {tx, mx};
        y.pairs[static_cast<size_t>(n - 1)] = {i, my};
        x.pairs[static_cast<size_t>(n)] = {1, k};
        y.pairs[static_cast<size_t>(n)] = {1, k + 1};
    }

    validate_code(sys, x);
    validate_code(sys, y);
    return {x, y};
}

}  // namespace adic
