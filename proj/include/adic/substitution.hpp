#pragma once

#include <vector>

#include "adic/linalg.hpp"
#include "adic/tower.hpp"

namespace adic {

/// Map from source letters {1..source_size} to non-empty words over
/// {1..target_size}. Row t of the incidence matrix counts the letters of
/// the image of t.
struct Substitution {
    int source_size = 0;
    int target_size = 0;
    std::vector<std::vector<int>> images;  // images[t-1]

    static Substitution identity(int n);
};

// (outer o inner)(t) applies outer letterwise to inner(t); inner's target
// alphabet must equal outer's source alphabet.
Substitution compose(const Substitution& outer, const Substitution& inner);

Mat<BigInt> incidence(const Substitution& s);

// The level-n crossing words viewed as a substitution {1..C(n)} -> {1..C(n-1)}*.
Substitution level_substitution(const TowerSystem& sys, int n);

// First K symbols of the one-sided limit word: nested expansions
// W_t(1) = t, W_t(n+1) = concatenation of W_s(n) over the letters s of the
// level-(n+1) word of tower t. Requires unit level-1 heights and a common
// first letter across every level's words so the expansions nest.
std::vector<int> generate_prefix(const TowerSystem& sys, long K);

// Expansion words W_t(n) for all towers t at level n (full, untruncated).
std::vector<std::vector<int>> expansion_words(const TowerSystem& sys, int n);

struct RecurrenceRow {
    int length;     // factor length
    long max_gap;   // largest gap between consecutive occurrences
    double ratio;   // max_gap / length
};

// Empirical linear-recurrence table: for each factor length up to max_len,
// the worst gap between consecutive occurrences of any factor, over the
// given word. Factors seen only once contribute nothing.
std::vector<RecurrenceRow> recurrence_table(const std::vector<int>& word, int max_len);

double max_recurrence_ratio(const std::vector<RecurrenceRow>& rows);

}  // namespace adic
