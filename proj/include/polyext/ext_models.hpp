#pragma once

#include <string>
#include <vector>

#include "polyext/abelian.hpp"
#include "polyext/complexes.hpp"

namespace polyext {

// Affine bijection of integer degrees: ext_degree = scale * internal + offset
// with scale in {+1, -1}.
struct GradingMap {
    int scale = 1;
    int offset = 0;
};

// A finite complex together with the rule that converts its internal grading
// into Ext degrees. `dual` marks models whose cells are homological but whose
// Ext value is the cohomology of the dual complex.
struct ChainLevelModel {
    BoundedComplex complex;
    GradingMap grading;
    bool dual = false;
    std::string description;
};

// Homology of the model's complex (of its dual when so marked), regraded by
// the grading map. Throws InvalidParameter for a degree-reversing grading of
// a truncated complex: a one-sided truncation cannot be flipped.
GradedAbGroup ext_value(const ChainLevelModel& model);

// Cochain complex whose cohomology is Ext^*(ab, S^n∘ab). Degree-k basis:
// strictly increasing chains 1 <= n_0 < ... < n_k = n; the coboundary takes
// a chain to the signed sum of its one-step refinements, the insertion of v
// at position j carrying (-1)^j * C(n_j - n_{j-1}, v - n_{j-1}).
BoundedComplex symmetric_power_complex(int n);

// Homological complex of surjections out of an n-element set onto k letters,
// 1 <= k <= min(m, n), with boundary the alternating sum of value merges.
// Its homology in degree n - * is Ext^*(Pa_m, T^n∘ab).
ChainLevelModel surjection_complex(int n, int m);

// Reduced cellular chain complex with one cell in each dimension 0..n-1 and
// attaching degree 1 out of odd dimensions; cohomology of the dual computes
// Ext^*(ab, Pa_n).
ChainLevelModel rbar_complex(int n);

// One tensor product of symmetric-power complexes per composition of n into
// m positive parts; Ext^*(T^m∘ab, S^n∘ab) is the direct sum of their
// cohomologies (returned by tensor_symmetric_ext).
std::vector<BoundedComplex> tensor_symmetric_complex(int m, int n);
GradedAbGroup tensor_symmetric_ext(int m, int n);

// Homotopy pullback computing Ext^*(Λ^2∘ab, Λ^n∘ab) through degree
// max_degree: the fixed-point complex of the two-element group permuting
// two-part compositions of n maps by augmentation into the classifying-space
// cochains, which also receive the unit from Z. Ext degree = internal + n-2.
ChainLevelModel lambda2_pullback_complex(int n, int max_degree);

}  // namespace polyext
