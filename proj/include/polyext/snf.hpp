#pragma once

#include <vector>

#include "polyext/matrix.hpp"

namespace polyext {

// Result of a Smith normal form computation with transforms: U * M * V = S,
// U and V unimodular, S diagonal with s_1 | s_2 | ... | s_r, all s_i > 0.
struct SmithTriple {
    IntegerMatrix S;
    IntegerMatrix U;  // rows(M) x rows(M)
    IntegerMatrix V;  // cols(M) x cols(M)
};

// Full Smith normal form with transform matrices. Pivots are chosen by
// minimal absolute value among remaining nonzero entries. Dense algorithm:
// intended for matrices small enough that U and V are worth materializing.
SmithTriple smith_normal_form(const IntegerMatrix& m);

// The nonzero diagonal of the Smith form, without transforms. Two-phase
// sparse reduction: Markowitz-selected +-1 pivots split off invariant factor
// 1 with bounded fill, then a dense Smith reduction finishes the (typically
// tiny) residual. This is the workhorse behind rank and homology on the
// large bar-resolution differentials.
std::vector<Int> smith_invariant_factors(const IntegerMatrix& m);

// Rank over Q (= number of invariant factors).
int matrix_rank(const IntegerMatrix& m);

}  // namespace polyext
