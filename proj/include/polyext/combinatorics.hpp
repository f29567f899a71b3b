#pragma once

#include <vector>

#include "polyext/ints.hpp"

namespace polyext {

// A surjection {1..n} ->> {1..k} stored as its value list (a_1, ..., a_n).
using Surjection = std::vector<int>;
// An ordered composition (n_1, ..., n_m) of n into positive parts.
using Composition = std::vector<int>;
// A partition of n: weakly decreasing positive parts.
using Partition = std::vector<int>;

// All surjections {1..n} ->> {1..k} in lexicographic order. Served from a
// read-only memo table keyed by (n, k); population is internally
// synchronized, so concurrent callers are fine.
const std::vector<Surjection>& surjections(int n, int k);

// Identify the values i and i+1 of a surjection onto {1..k} (1 <= i <= k-1)
// and renumber downward: the result is a surjection onto {1..k-1}.
Surjection merge_values(const Surjection& a, int i);

// All compositions of n into exactly m positive parts, lexicographic.
std::vector<Composition> compositions(int n, int m);

// All partitions of n into exactly m parts, parts weakly decreasing,
// lexicographically decreasing order of part vectors.
std::vector<Partition> partitions_into(int n, int m);

Int binomial(int n, int k);
Int stirling2(int n, int k);  // set partitions of {1..n} into k blocks
Int bell(int n);              // all set partitions of {1..n}

// |sur(n, k)| = k! * stirling2(n, k), without enumerating.
Int count_surjections(int n, int k);
// |Comp(n, m)| = binomial(n-1, m-1).
Int count_compositions(int n, int m);
// partitions of n into exactly m parts / into any number of parts
Int count_partitions_into(int n, int m);
Int count_partitions(int n);

}  // namespace polyext
