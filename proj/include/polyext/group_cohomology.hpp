#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyext/abelian.hpp"
#include "polyext/complexes.hpp"
#include "polyext/matrix.hpp"

namespace polyext {

// Finite group given by its multiplication table. Element 0 is the identity.
// Construction validates identity, inverses and associativity, so a value of
// this type is always an actual group.
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table);

    // The symmetric group on {1..n} (n <= 4), elements in lexicographic
    // one-line order (identity first), labeled by cycle notation. The
    // composition convention is (g*h)(x) = g(h(x)).
    static FiniteGroup symmetric(int n);

    int size() const { return static_cast<int>(table_.size()); }
    int mult(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inverse(int a) const;
    const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
    // Index of the element with the given label; throws if absent.
    int element(const std::string& label) const;
    // One-line permutation images (only for groups built by symmetric()).
    const std::vector<std::vector<int>>& permutations() const { return perms_; }

    bool operator==(const FiniteGroup& rhs) const {
        return labels_ == rhs.labels_ && table_ == rhs.table_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> table_;
    std::vector<std::vector<int>> perms_;  // empty unless built by symmetric()
};

// Free Z-module of finite rank with a G-action by invertible integer
// matrices. Construction checks the identity acts as the identity and that
// the table is respected (throws NotAnAction otherwise).
struct GModule {
    FiniteGroup group;
    int rank;
    std::vector<IntegerMatrix> action;  // one matrix per group element
    std::vector<std::string> labels;    // basis labels, size == rank

    GModule(FiniteGroup g, int rank, std::vector<IntegerMatrix> action,
            std::vector<std::string> labels = {});

    static GModule trivial(const FiniteGroup& g, int rank = 1);
    // Rank-1 module where each permutation acts by its parity (symmetric
    // groups only).
    static GModule sign(const FiniteGroup& sym);
    // Permutation module: perm_of[g] sends basis index i to basis index
    // perm_of[g][i].
    static GModule permutation(const FiniteGroup& g, const std::vector<std::vector<int>>& perm_of,
                               std::vector<std::string> labels = {});
};

// Cohomological complex 0 -> C^lo -> ... with a degreewise G-action that is a
// chain automorphism (validated: identity, composition, commutation with d).
struct EquivariantComplex {
    FiniteGroup group;
    BoundedComplex complex;
    // action[g][degree]: rank x rank block; missing degrees act as identity-
    // shaped zero (only legal when the degree has rank 0).
    std::vector<std::map<int, IntegerMatrix>> action;

    EquivariantComplex(FiniteGroup g, BoundedComplex c,
                       std::vector<std::map<int, IntegerMatrix>> action);
    IntegerMatrix action_at(int element, int degree) const;
};

// Total complex of the equivariant maps from the normalized bar resolution
// of G into C: degree t gathers the functions on k-tuples of non-identity
// elements valued in C^{t-k}. Truncated above max_degree (marked). For the
// trivial group this returns C itself (up to truncation). The homology of
// the result computes the homotopy-fixed-point (hyper)cohomology of C.
BoundedComplex homotopy_fixed_points(const EquivariantComplex& ec, int max_degree);

// Normalized bar cochain complex of a module, degrees 0..max_degree (marked
// truncated there): the homotopy fixed points of the module in degree 0.
// Its homology below the top degree is H^*(G; M).
BoundedComplex bar_cochain_complex(const GModule& m, int max_degree);

// H^*(G; M) for degrees <= max_degree (builds the bar complex one degree
// higher so every reported degree is exact).
GradedAbGroup group_cohomology(const GModule& m, int max_degree);

// Reduced bar cochain complex (degrees 1..max_degree). Requires a trivial
// action: then the degree-0 differential vanishes and dropping degree 0
// computes reduced classifying-space cohomology.
BoundedComplex reduced_bar_cochain_complex(const GModule& m, int max_degree);

// The chain map induced on homotopy fixed points / bar complexes by an
// equivariant module map f : M -> N (f * g_M = g_N * f, validated): the
// degreewise block is id_{tuples} (x) f.
ChainMap bar_induced_map(const GModule& src, const GModule& tgt, const IntegerMatrix& f,
                         int max_degree);

// Reduced integral cohomology of the infinite real projective space:
// Z/2 in even degrees 2, 4, ..., <= max_degree. Closed form (fast path).
GradedAbGroup rp_infinity_reduced_cohomology(int max_degree);
// The same value from the bar resolution of the two-element group; the two
// must agree (property-tested and exercised by `check`).
GradedAbGroup rp_infinity_reduced_cohomology_via_bar(int max_degree);

// Reduced integral cohomology of the cofiber of the classifying-space map
// induced by the order-2 subgroup generated by the transposition (1 2)
// inside the symmetric group on three letters: computed as the homotopy
// fiber of the restriction map of reduced bar complexes.
GradedAbGroup bsigma3_mod_bsigma2(int max_degree);
// The same value in closed form: Z/3 in positive degrees divisible by 4
// (the order-3 classes of the big group that die on the subgroup). Cheap at
// any degree, where the bar computation above grows exponentially.
GradedAbGroup bsigma3_mod_bsigma2_closed_form(int max_degree);

}  // namespace polyext
