#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "adic/quadratic.hpp"
#include "adic/tower.hpp"

namespace adic {
namespace example_ab {

// The two commuting integer matrices driving the construction and their
// golden-ratio eigendata.
Mat<BigInt> matrix_a();  // [[5,2],[2,3]]
Mat<BigInt> matrix_b();  // [[2,1],[1,1]]

QuadraticReal golden();            // (1+sqrt(5))/2
QuadraticReal golden_minus_one();  // 1/golden
QuadraticReal beta_a();            // small eigenvalue of A: 5 - 2*golden
QuadraticReal beta_b();            // small eigenvalue of B: 2 - golden

// Common small eigenvector (golden-2, golden-1) of A and B.
ScalarVec small_eigenvector();
// Exact roof measure at level 1: (golden-1, 2-golden).
ScalarVec base_measure();

/// One step of the driving recursion: scale[1] = 1 and
/// scale[n+1] = beta_a * scale[n] when n*scale[n] <= 1 (choice 'A'),
/// beta_b * scale[n] otherwise (choice 'B'). The choice picks the level
/// (n+1) matrix.
struct ScaleState {
    int n;
    QuadraticReal scale;  // exact product of the betas chosen so far
    char choice;          // matrix selected for level n+1
};

std::vector<ScaleState> vn_sequence(int N);

// Tower system with level-1 words ("1","1") and level n >= 2 words taken
// from the matrix the recursion selects. max_depth = 0 leaves it unbounded.
TowerSystem build_example(int max_depth = 0);

// Checks the exact eigen-identity P(n) v = scale_n * v for 2 <= n <= N;
// throws IdentityViolationError on the first failure.
void verify_pnv(int N);

// Exact (min, max) of n*scale_n over 2 <= n <= N.
std::pair<QuadraticReal, QuadraticReal> nvn_bounds(int N);

// Lattice eigenvalue candidates: alpha = (golden-1, 2-golden) A^-l w.
QuadraticReal emu_alpha(long l, const std::array<BigInt, 2>& w);

struct EmuWitness {
    long l;
    std::array<BigInt, 2> w;
};

// Search for an exact lattice representation of alpha (up to integer shift
// and sign); per level the linear system is solved exactly, so the search
// is over l only. Returns the smallest-l witness inside the box, if any.
std::optional<EmuWitness> emu_member(const QuadraticReal& alpha, long l_max, const BigInt& w_box);

}  // namespace example_ab
}  // namespace adic
