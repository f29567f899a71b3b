#include "polyext/group_cohomology.hpp"

#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "polyext/abelian.hpp"
#include "polyext/complexes.hpp"
#include "polyext/errors.hpp"
#include "polyext/matrix.hpp"

using namespace polyext;

namespace {

GradedAbGroup graded(std::map<int, FgAbGroup> components, int truncated_above) {
    GradedAbGroup g;
    g.components = std::move(components);
    g.truncated_above = truncated_above;
    return g;
}

const FgAbGroup Z1(1, {});
const FgAbGroup Z2(0, {Int(2)});
const FgAbGroup Z3(0, {Int(3)});
const FgAbGroup Z6(0, {Int(6)});

// Augmented cube complex used as a generic three-degree cohomological
// complex: Z -> Z^2 -> Z with cohomology Z/3 in degree 1 and Z/2 in degree 2.
BoundedComplex cubic_complex() {
    std::map<int, std::vector<std::string>> basis{
        {0, {"(3)"}}, {1, {"(1,3)", "(2,3)"}}, {2, {"(1,2,3)"}}};
    std::map<int, IntegerMatrix> diffs{
        {0, IntegerMatrix::from_rows({{Int(3)}, {Int(3)}})},
        {1, IntegerMatrix::from_rows({{Int(-2), Int(2)}})}};
    return BoundedComplex(Orientation::Cohomological, std::move(basis), std::move(diffs));
}

}  // namespace

TEST_CASE("finite groups: multiplication tables and symmetric groups") {
    const FiniteGroup s3 = FiniteGroup::symmetric(3);
    CHECK(s3.size() == 6);
    CHECK(s3.label(0) == "e");
    CHECK(s3.element("(1 2 3)") == s3.mult(s3.element("(1 3)"), s3.element("(1 2)")));
    // Composition applies the right factor first: (1 2) after (1 3) is (1 3 2).
    CHECK(s3.mult(s3.element("(1 2)"), s3.element("(1 3)")) == s3.element("(1 3 2)"));
    CHECK(s3.inverse(s3.element("(1 2 3)")) == s3.element("(1 3 2)"));
    CHECK(s3.inverse(s3.element("(2 3)")) == s3.element("(2 3)"));
    CHECK_THROWS_AS(s3.element("(1 5)"), InvalidParameter);

    CHECK(FiniteGroup::symmetric(1).size() == 1);
    CHECK(FiniteGroup::symmetric(2).size() == 2);
    const FiniteGroup s4 = FiniteGroup::symmetric(4);
    CHECK(s4.size() == 24);
    CHECK(s4.inverse(s4.element("(1 2 3 4)")) == s4.element("(1 4 3 2)"));
    CHECK(s4.mult(s4.element("(1 2)"), s4.element("(3 4)")) == s4.element("(1 2)(3 4)"));
    CHECK_THROWS_AS(FiniteGroup::symmetric(5), InvalidParameter);

    // A corrupted Z/4 table: identity and inverses survive, associativity not.
    std::vector<std::vector<int>> bad{{0, 1, 2, 3}, {1, 2, 1, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
    CHECK_THROWS_AS(FiniteGroup({"0", "1", "2", "3"}, bad), InvalidParameter);
    CHECK_THROWS_AS(FiniteGroup({"e", "x"}, {{0, 1}, {1, 1}}), InvalidParameter);
}

TEST_CASE("modules over a group: constructors and validation") {
    const FiniteGroup s2 = FiniteGroup::symmetric(2);
    const FiniteGroup s3 = FiniteGroup::symmetric(3);

    const GModule triv = GModule::trivial(s3, 2);
    CHECK(triv.rank == 2);
    CHECK(triv.action[3] == IntegerMatrix::identity(2));

    const GModule sgn = GModule::sign(s3);
    CHECK(sgn.action[s3.element("(1 2)")].entry(0, 0) == -1);
    CHECK(sgn.action[s3.element("(1 2 3)")].entry(0, 0) == 1);
    CHECK(sgn.action[s3.element("(2 3)")].entry(0, 0) == -1);

    const GModule reg = GModule::permutation(s2, {{0, 1}, {1, 0}}, {"e", "t"});
    CHECK(reg.rank == 2);
    CHECK(reg.action[1].entry(1, 0) == 1);
    CHECK(reg.action[1].entry(0, 0) == 0);

    // An order-2 element cannot act by multiplication by 2.
    CHECK_THROWS_AS(
        GModule(s2, 1, {IntegerMatrix::identity(1), IntegerMatrix::from_rows({{Int(2)}})}),
        NotAnAction);
    // Sign needs the permutation data only symmetric() provides.
    CHECK_THROWS_AS(GModule::sign(FiniteGroup({"e", "t"}, {{0, 1}, {1, 0}})), InvalidParameter);
}

TEST_CASE("bar complex of the two-element group: pinned differentials") {
    const FiniteGroup s2 = FiniteGroup::symmetric(2);
    const BoundedComplex bar = bar_cochain_complex(GModule::trivial(s2), 4);
    CHECK(bar.truncated_above() == 4);
    for (int d = 0; d <= 4; ++d) CHECK(bar.rank_at(d) == 1);
    CHECK(bar.basis_at(2) == std::vector<std::string>{"[(1 2)|(1 2)].m0"});
    // Alternating 0, 2, 0, 2: multiplication by the group order in odd degrees.
    CHECK(bar.differential_from(0).entry(0, 0) == 0);
    CHECK(bar.differential_from(1).entry(0, 0) == 2);
    CHECK(bar.differential_from(2).entry(0, 0) == 0);
    CHECK(bar.differential_from(3).entry(0, 0) == 2);

    const BoundedComplex sbar = bar_cochain_complex(GModule::sign(s2), 3);
    CHECK(sbar.differential_from(0).entry(0, 0) == -2);
    CHECK(sbar.differential_from(1).entry(0, 0) == 0);
    CHECK(sbar.differential_from(2).entry(0, 0) == -2);
}

TEST_CASE("cohomology of the two-element group, both coefficient signs") {
    const FiniteGroup s2 = FiniteGroup::symmetric(2);
    CHECK(group_cohomology(GModule::trivial(s2), 8) ==
          graded({{0, Z1}, {2, Z2}, {4, Z2}, {6, Z2}, {8, Z2}}, 8));
    CHECK(group_cohomology(GModule::sign(s2), 7) ==
          graded({{1, Z2}, {3, Z2}, {5, Z2}, {7, Z2}}, 7));
}

TEST_CASE("regular representation has the cohomology of the trivial group") {
    const FiniteGroup s2 = FiniteGroup::symmetric(2);
    const GModule reg = GModule::permutation(s2, {{0, 1}, {1, 0}}, {"e", "t"});
    CHECK(group_cohomology(reg, 4) == graded({{0, Z1}}, 4));

    // The augmentation induces a chain map of bar complexes; an arbitrary
    // projection is not equivariant and must be rejected.
    const ChainMap aug = bar_induced_map(reg, GModule::trivial(s2),
                                         IntegerMatrix::from_rows({{Int(1), Int(1)}}), 5);
    CHECK(aug.block_at(2) == IntegerMatrix::from_rows({{Int(1), Int(1)}}));
    CHECK_THROWS_AS(bar_induced_map(reg, GModule::trivial(s2),
                                    IntegerMatrix::from_rows({{Int(1), Int(0)}}), 3),
                    NotAnAction);
}

TEST_CASE("homotopy fixed points of a two-term equivariant complex") {
    // Z[G] -> Z for the two-element group, augmentation in degree 0 -> 1. The
    // complex is quasi-isomorphic to the sign module in degree 0, so its
    // homotopy-fixed-point cohomology matches the sign coefficients above.
    const FiniteGroup s2 = FiniteGroup::symmetric(2);
    std::map<int, std::vector<std::string>> basis{{0, {"e", "t"}}, {1, {"z"}}};
    std::map<int, IntegerMatrix> diffs{{0, IntegerMatrix::from_rows({{Int(1), Int(1)}})}};
    BoundedComplex two_term(Orientation::Cohomological, std::move(basis), std::move(diffs));
    const IntegerMatrix swap = IntegerMatrix::from_rows({{Int(0), Int(1)}, {Int(1), Int(0)}});
    EquivariantComplex ec(s2, two_term, {{}, {{0, swap}, {1, IntegerMatrix::identity(1)}}});
    CHECK(homology(homotopy_fixed_points(ec, 6)) == graded({{1, Z2}, {3, Z2}, {5, Z2}}, 5));

    // Negating one end of the multiplication-by-2 complex is not a chain map.
    std::map<int, std::vector<std::string>> mb{{0, {"x"}}, {1, {"y"}}};
    std::map<int, IntegerMatrix> md{{0, IntegerMatrix::from_rows({{Int(2)}})}};
    BoundedComplex mult2(Orientation::Cohomological, std::move(mb), std::move(md));
    const IntegerMatrix minus = IntegerMatrix::from_rows({{Int(-1)}});
    CHECK_THROWS_AS(
        EquivariantComplex(s2, mult2, {{}, {{0, minus}, {1, IntegerMatrix::identity(1)}}}),
        NotAnAction);
}

TEST_CASE("homotopy fixed points over the trivial group return the complex") {
    const FiniteGroup one = FiniteGroup::symmetric(1);
    const BoundedComplex c = cubic_complex();
    const BoundedComplex fixed = homotopy_fixed_points(
        EquivariantComplex(one, c, {{}}), 5);
    CHECK(fixed.truncated_above() == 5);
    for (int d = 0; d <= 2; ++d) {
        CHECK(fixed.rank_at(d) == c.rank_at(d));
        CHECK(fixed.differential_from(d) == c.differential_from(d));
    }
    CHECK(fixed.rank_at(3) == 0);
    CHECK(homology(fixed).components == homology(c).components);

    CHECK(group_cohomology(GModule::trivial(one), 4) == graded({{0, Z1}}, 4));
}

TEST_CASE("cohomology of the three-letter symmetric group") {
    const FiniteGroup s3 = FiniteGroup::symmetric(3);
    const GradedAbGroup trivial_coeffs = group_cohomology(GModule::trivial(s3), 5);
    CHECK(trivial_coeffs == graded({{0, Z1}, {2, Z2}, {4, Z6}}, 5));

    // Known through degree 3: Z/2 in odd degrees (stable classes of the
    // order-2 subgroup) and Z/3 in degree 2 (invariant classes of the Sylow
    // 3-subgroup under the twisted inversion action).
    const GradedAbGroup sign_coeffs = group_cohomology(GModule::sign(s3), 3);
    CHECK(sign_coeffs == graded({{1, Z2}, {2, Z3}, {3, Z2}}, 3));

    // Positive-degree classes are killed by the group order.
    for (const auto* h : {&trivial_coeffs, &sign_coeffs})
        for (const auto& [degree, group] : h->components) {
            if (degree == 0) continue;
            CHECK(group.rank() == 0);
            for (const auto& factor : group.torsion()) CHECK(Int(6) % factor == 0);
        }
}

TEST_CASE("projective space and the cofiber of classifying spaces") {
    CHECK(rp_infinity_reduced_cohomology(9) ==
          graded({{2, Z2}, {4, Z2}, {6, Z2}, {8, Z2}}, 9));
    CHECK(rp_infinity_reduced_cohomology_via_bar(8) == rp_infinity_reduced_cohomology(8));

    CHECK(bsigma3_mod_bsigma2(4) == graded({{4, Z3}}, 4));
    CHECK(bsigma3_mod_bsigma2_closed_form(4) == bsigma3_mod_bsigma2(4));
    CHECK(bsigma3_mod_bsigma2_closed_form(13) ==
          graded({{4, Z3}, {8, Z3}, {12, Z3}}, 13));
}
