#include "adic/substitution.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace adic {

Substitution Substitution::identity(int n) {
    Substitution s;
    s.source_size = s.target_size = n;
    s.images.reserve(static_cast<size_t>(n));
    for (int t = 1; t <= n; ++t) s.images.push_back({t});
    return s;
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
    if (inner.target_size != outer.source_size)
        throw AlphabetMismatchError("inner target alphabet " + std::to_string(inner.target_size) +
                                    " != outer source alphabet " +
                                    std::to_string(outer.source_size));
    Substitution out;
    out.source_size = inner.source_size;
    out.target_size = outer.target_size;
    out.images.reserve(inner.images.size());
    for (const auto& word : inner.images) {
        std::vector<int> img;
        for (int letter : word) {
            const auto& exp = outer.images[static_cast<size_t>(letter - 1)];
            img.insert(img.end(), exp.begin(), exp.end());
        }
        out.images.push_back(std::move(img));
    }
    return out;
}

Mat<BigInt> incidence(const Substitution& s) {
    Mat<BigInt> m(s.source_size, s.target_size);
    for (int t = 0; t < s.source_size; ++t)
        for (int letter : s.images[static_cast<size_t>(t)]) m.at(t, letter - 1) += 1;
    return m;
}

Substitution level_substitution(const TowerSystem& sys, int n) {
    if (n < 1) throw LevelOutOfRangeError("level must be >= 1");
    LevelWords lvl = sys.level(n);
    Substitution s;
    s.source_size = lvl.tower_count();
    s.target_size = sys.tower_count(n - 1);
    s.images = lvl.words;
    return s;
}

std::vector<std::vector<int>> expansion_words(const TowerSystem& sys, int n) {
    if (n < 1) throw LevelOutOfRangeError("level must be >= 1");
    int c1 = sys.tower_count(1);
    std::vector<std::vector<int>> w;
    for (int t = 1; t <= c1; ++t) w.push_back({t});
    for (int k = 2; k <= n; ++k) {
        LevelWords lvl = sys.level(k);
        std::vector<std::vector<int>> next;
        next.reserve(lvl.words.size());
        for (const auto& word : lvl.words) {
            std::vector<int> exp;
            for (int letter : word) {
                const auto& sub = w[static_cast<size_t>(letter - 1)];
                exp.insert(exp.end(), sub.begin(), sub.end());
            }
            next.push_back(std::move(exp));
        }
        w = std::move(next);
    }
    return w;
}

std::vector<int> generate_prefix(const TowerSystem& sys, long K) {
    if (K < 1) throw BadRangeError("prefix length must be >= 1");
    if (!sys.unit_base_heights())
        throw HeightNotUnitError("prefix generation needs all level-1 heights equal to 1");

    int lead = sys.level(2).words[0][0];
    int c1 = sys.tower_count(1);
    std::vector<std::vector<int>> w;
    for (int t = 1; t <= c1; ++t) w.push_back({t});

    for (int level = 2;; ++level) {
        LevelWords lvl = sys.level(level);
        for (const auto& word : lvl.words)
            if (word[0] != lead)
                throw PrefixNotNestedError("level " + std::to_string(level) +
                                           " words do not share the first letter " +
                                           std::to_string(lead));
        std::vector<std::vector<int>> next;
        next.reserve(lvl.words.size());
        for (const auto& word : lvl.words) {
            std::vector<int> exp;
            for (int letter : word) {
                const auto& sub = w[static_cast<size_t>(letter - 1)];
                exp.insert(exp.end(), sub.begin(), sub.end());
            }
            next.push_back(std::move(exp));
        }
        w = std::move(next);
        auto& chain = w[static_cast<size_t>(lead - 1)];
        if (static_cast<long>(chain.size()) >= K) {
            chain.resize(static_cast<size_t>(K));
            return chain;
        }
    }
}

std::vector<RecurrenceRow> recurrence_table(const std::vector<int>& word, int max_len) {
    if (max_len < 1) throw BadRangeError("factor length bound must be >= 1");
    if (static_cast<long>(word.size()) < 2L * max_len)
        throw WordTooShortError("word of length " + std::to_string(word.size()) +
                                " too short for factors up to " + std::to_string(max_len));
    std::vector<RecurrenceRow> rows;
    rows.reserve(static_cast<size_t>(max_len));
    for (int ell = 1; ell <= max_len; ++ell) {
        std::unordered_map<std::string, long> last_start;
        long max_gap = 0;
        std::string key(static_cast<size_t>(ell), '\0');
        for (long i = 0; i + ell <= static_cast<long>(word.size()); ++i) {
            for (int j = 0; j < ell; ++j)
                key[static_cast<size_t>(j)] = static_cast<char>(word[static_cast<size_t>(i + j)]);
            auto it = last_start.find(key);
            if (it != last_start.end()) {
                max_gap = std::max(max_gap, i - it->second);
                it->second = i;
            } else {
                last_start.emplace(key, i);
            }
        }
        rows.push_back({ell, max_gap, static_cast<double>(max_gap) / ell});
    }
    return rows;
}

double max_recurrence_ratio(const std::vector<RecurrenceRow>& rows) {
    double best = 0;
    for (const auto& r : rows) best = std::max(best, r.ratio);
    return best;
}

}  // namespace adic
