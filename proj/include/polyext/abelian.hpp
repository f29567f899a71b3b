#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyext/matrix.hpp"

namespace polyext {

// Finitely generated abelian group in canonical form: Z^rank plus cyclic
// factors Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... and every d_i >= 2.
// Construction normalizes any list of moduli into that shape, so two values
// compare equal iff the groups are isomorphic.
class FgAbGroup {
public:
    FgAbGroup() : rank_(0) {}
    explicit FgAbGroup(int rank, std::vector<Int> torsion = {});

    int rank() const { return rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }

    bool operator==(const FgAbGroup& rhs) const {
        return rank_ == rhs.rank_ && torsion_ == rhs.torsion_;
    }
    bool operator!=(const FgAbGroup& rhs) const { return !(*this == rhs); }

    FgAbGroup direct_sum(const FgAbGroup& rhs) const;

    // "Z^2 + Z/2 + Z/6", "Z", "Z/3", "0"; with rational=true, "Q^r" / "0".
    std::string to_string(bool rational = false) const;
    // Display-only primary form, e.g. Z/6 shown as "Z/2 + Z/3".
    std::string to_string_primary() const;

private:
    int rank_;
    std::vector<Int> torsion_;
};

// Normalizes arbitrary cyclic moduli (order irrelevant, 1s dropped) into a
// divisibility chain. Exposed because oracles in the tests want it too.
std::vector<Int> normalize_invariant_factors(std::vector<Int> factors);

// Z-graded abelian group with finite support. Only nontrivial components are
// stored. `truncated_above = D` means degrees <= D are exact and nothing is
// claimed above D; absent means the value is complete.
struct GradedAbGroup {
    std::map<int, FgAbGroup> components;
    std::optional<int> truncated_above;

    const FgAbGroup& at(int degree) const;  // trivial group if absent
    bool is_trivial() const { return components.empty(); }

    bool operator==(const GradedAbGroup& rhs) const {
        return components == rhs.components && truncated_above == rhs.truncated_above;
    }
    bool operator!=(const GradedAbGroup& rhs) const { return !(*this == rhs); }

    std::string to_string(bool rational = false) const;
};

// Degreewise direct sum. Truncation of the result is the most restrictive of
// the inputs' truncations, and components above it are dropped.
GradedAbGroup direct_sum(const std::vector<GradedAbGroup>& parts);

// Shift: the component at degree d moves to degree d + k.
GradedAbGroup shift(const GradedAbGroup& g, int k);

// Keep only degrees <= max_degree and mark the result TruncatedAbove there.
GradedAbGroup truncate(const GradedAbGroup& g, int max_degree);

// Rank-only view: torsion dropped (what rationalization does to the value).
GradedAbGroup rationalize(const GradedAbGroup& g);

// ker(Z) / im(B) for integer matrices with Z * B = 0 (else
// CompositionNotZero). Z may have zero rows (full kernel) and B zero columns
// (zero image). Since Z*B = 0 forces im(B) into the saturated subgroup
// ker(Z), the subquotient is Z^(cols(Z) - rank Z - rank B) plus the invariant
// factors of B that exceed 1.
FgAbGroup subquotient_group(const IntegerMatrix& z, const IntegerMatrix& b);

}  // namespace polyext
