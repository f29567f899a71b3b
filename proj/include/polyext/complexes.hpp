#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "polyext/abelian.hpp"
#include "polyext/matrix.hpp"

namespace polyext {

enum class Orientation {
    Homological,    // differential lowers degree: d_k : C_k -> C_{k-1}
    Cohomological,  // differential raises degree: d^k : C^k -> C^{k+1}
};

// Bounded complex of finitely generated free abelian groups with explicit
// bases. Degrees with no stored basis are zero. `differentials[d]` is the
// matrix out of degree d (to d-1 or d+1 per orientation), rows indexed by the
// target basis and columns by the source basis. Construction validates all
// shapes and that consecutive differentials compose to zero, so a value of
// this type is always an actual complex.
//
// `truncated_above`: set when the complex is a finite stage of an unbounded
// construction (bar resolutions); degrees above the marker are missing, not
// zero, and homology propagates the marker honestly.
class BoundedComplex {
public:
    BoundedComplex(Orientation orientation, std::map<int, std::vector<std::string>> basis,
                   std::map<int, IntegerMatrix> differentials,
                   std::optional<int> truncated_above = std::nullopt);

    Orientation orientation() const { return orientation_; }
    int min_deg() const { return min_deg_; }
    int max_deg() const { return max_deg_; }
    std::optional<int> truncated_above() const { return truncated_above_; }

    bool operator==(const BoundedComplex& rhs) const;
    bool operator!=(const BoundedComplex& rhs) const { return !(*this == rhs); }

    int rank_at(int degree) const;
    const std::vector<std::string>& basis_at(int degree) const;
    // Matrix out of `degree`; identity-shaped zero matrix if absent.
    IntegerMatrix differential_from(int degree) const;
    bool has_degree(int degree) const { return basis_.count(degree) > 0; }
    const std::map<int, std::vector<std::string>>& basis() const { return basis_; }

    std::string to_string() const;

private:
    int target_degree(int source_degree) const {
        return orientation_ == Orientation::Homological ? source_degree - 1 : source_degree + 1;
    }

    Orientation orientation_;
    int min_deg_, max_deg_;
    std::map<int, std::vector<std::string>> basis_;
    std::map<int, IntegerMatrix> differentials_;
    std::optional<int> truncated_above_;
};

// Degreewise map of complexes f : C -> D (same orientation, same degree
// direction). Construction checks commutation with the differentials and
// throws NotAChainMap otherwise.
class ChainMap {
public:
    ChainMap(const BoundedComplex& source, const BoundedComplex& target,
             std::map<int, IntegerMatrix> blocks);

    const BoundedComplex& source() const { return source_; }
    const BoundedComplex& target() const { return target_; }
    // Block at `degree`: rank_target(degree) x rank_source(degree).
    IntegerMatrix block_at(int degree) const;

private:
    BoundedComplex source_, target_;
    std::map<int, IntegerMatrix> blocks_;
};

// Homology (or cohomology, per orientation) in canonical form. For complete
// complexes every degree in [min_deg, max_deg] is exact and the result is
// complete; for a complex marked TruncatedAbove(D) the top degree lacks its
// outgoing differential, so it is dropped and the result is truncated one
// degree lower (cohomological; symmetrically one higher for homological).
GradedAbGroup homology(const BoundedComplex& c);

// Hom(-, Z): transpose every differential, flip the orientation, keep the
// degree of every basis element.
BoundedComplex dualize(const BoundedComplex& c);

// Graded tensor product over Z with the Koszul sign on the second factor:
// d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy. Requires equal orientations.
BoundedComplex tensor_product(const BoundedComplex& c, const BoundedComplex& d);

// Mapping cone: for cohomological f : C -> D, cone(f)^n = C^{n+1} (+) D^n
// with differential (x, y) |-> (-d_C x, d_D y - f x); homologically,
// cone(f)_n = C_{n-1} (+) D_n with the same block formula. cone(id) is
// acyclic and cone(0 -> D) = D.
BoundedComplex mapping_cone(const ChainMap& f);

// Degree shift: the component at degree d moves to degree d + k; every
// differential picks up the sign (-1)^k.
BoundedComplex shift_complex(const BoundedComplex& c, int k);

// Keep degrees <= max_degree (cutting differentials out of the top degree)
// and mark the result TruncatedAbove(max_degree). Cohomological complexes
// only, which is the only place truncation arises.
BoundedComplex truncate_complex(const BoundedComplex& c, int max_degree);

// Reindex between the two orientations: cohomological degree k becomes
// homological degree -k and vice versa. Bases and matrices are untouched.
BoundedComplex reindex(const BoundedComplex& c);

// Direct sum, degreewise.
BoundedComplex direct_sum_complex(const BoundedComplex& a, const BoundedComplex& b);

// Homotopy pullback corner of A -> C <- B: the fiber of (a - b) : A (+) B -> C,
// realized as the mapping cone shifted one degree (cohomological LES:
// ... -> H^k(P) -> H^k(A) (+) H^k(B) -> H^k(C) -> H^{k+1}(P) -> ...).
BoundedComplex homotopy_pullback(const ChainMap& a, const ChainMap& b);

// JSON round-trip for complexes (debugging / golden files). Matrix entries
// are JSON numbers when they fit in 53 bits, decimal strings otherwise.
nlohmann::json complex_to_json(const BoundedComplex& c);
BoundedComplex complex_from_json(const nlohmann::json& j);

}  // namespace polyext
