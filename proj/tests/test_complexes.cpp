#include <doctest.h>

#include <nlohmann/json.hpp>

#include "polyext/complexes.hpp"
#include "polyext/errors.hpp"
#include "test_helpers.hpp"

using namespace polyext;
using namespace polyext::testing;

namespace {

// Two-term complex Z --m--> Z in cohomological degrees 0, 1.
BoundedComplex mult_complex(Int m) {
    std::map<int, std::vector<std::string>> basis{{0, {"x"}}, {1, {"y"}}};
    std::map<int, IntegerMatrix> diffs;
    IntegerMatrix d(1, 1);
    d.set_entry(0, 0, m);
    diffs.emplace(0, d);
    return BoundedComplex(Orientation::Cohomological, basis, diffs);
}

// The coinvariant cochain complex for the cubic case:
// Z --(3 3)^T--> Z^2 --(-2 2)--> Z in degrees 0, 1, 2.
BoundedComplex cubic_complex() {
    std::map<int, std::vector<std::string>> basis{{0, {"(3)"}}, {1, {"(1,3)", "(2,3)"}},
                                                  {2, {"(1,2,3)"}}};
    std::map<int, IntegerMatrix> diffs;
    diffs.emplace(0, IntegerMatrix::from_rows({{3}, {3}}));
    diffs.emplace(1, IntegerMatrix::from_rows({{-2, 2}}));
    return BoundedComplex(Orientation::Cohomological, basis, diffs);
}

GradedAbGroup graded(std::map<int, FgAbGroup> comps) {
    GradedAbGroup g;
    for (auto& [d, c] : comps)
        if (!c.is_trivial()) g.components.emplace(d, c);
    return g;
}

}  // namespace

TEST_CASE("complex construction validates shapes and d∘d = 0") {
    std::map<int, std::vector<std::string>> basis{{0, {"a"}}, {1, {"b"}}, {2, {"c"}}};
    std::map<int, IntegerMatrix> bad;
    bad.emplace(0, IntegerMatrix::from_rows({{1}}));
    bad.emplace(1, IntegerMatrix::from_rows({{1}}));
    CHECK_THROWS_AS(BoundedComplex(Orientation::Cohomological, basis, bad), InvalidParameter);

    std::map<int, IntegerMatrix> wrong_shape;
    wrong_shape.emplace(0, IntegerMatrix(2, 1));
    CHECK_THROWS_AS(BoundedComplex(Orientation::Cohomological, basis, wrong_shape),
                    IndexOutOfRange);

    // composite zero passes
    std::map<int, IntegerMatrix> ok;
    ok.emplace(0, IntegerMatrix::from_rows({{2}}));
    ok.emplace(1, IntegerMatrix(1, 1));
    BoundedComplex c(Orientation::Cohomological, basis, ok);
    CHECK(c.min_deg() == 0);
    CHECK(c.max_deg() == 2);
    CHECK(c.rank_at(1) == 1);
    CHECK(c.rank_at(5) == 0);
}

TEST_CASE("homology of pinned complexes") {
    CHECK(homology(mult_complex(2)) == graded({{1, FgAbGroup(0, {2})}}));
    CHECK(homology(mult_complex(0)) == graded({{0, FgAbGroup(1)}, {1, FgAbGroup(1)}}));
    CHECK(homology(cubic_complex()) ==
          graded({{1, FgAbGroup(0, {3})}, {2, FgAbGroup(0, {2})}}));
}

TEST_CASE("homology of random complexes matches the construction") {
    Rng rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        auto rc = random_complex(rng, trial % 2 ? Orientation::Homological
                                                : Orientation::Cohomological);
        CHECK(homology(rc.complex) == rc.expected_homology);
    }
}

TEST_CASE("tensor product: pinned example") {
    auto c2 = mult_complex(2);
    auto t = tensor_product(c2, c2);
    CHECK(homology(t) == graded({{1, FgAbGroup(0, {2})}, {2, FgAbGroup(0, {2})}}));
    CHECK_THROWS_AS(tensor_product(c2, reindex(c2)), OrientationMismatch);
}

TEST_CASE("tensor product satisfies the Künneth formula") {
    Rng rng(910);
    for (int trial = 0; trial < 200; ++trial) {
        Orientation o = trial % 2 ? Orientation::Homological : Orientation::Cohomological;
        auto a = random_complex(rng, o, 2, 2);
        auto b = random_complex(rng, o, 2, 2);
        auto t = tensor_product(a.complex, b.complex);
        GradedAbGroup actual = homology(t);
        // free part in degree n from p+q = n; the torsion interaction sits
        // one step against the differential: Tor(H_p, H_q) lands in degree
        // p+q+1 homologically and p+q-1 cohomologically
        int tor_shift = o == Orientation::Homological ? 1 : -1;
        GradedAbGroup expected;
        for (const auto& [p, hp] : a.expected_homology.components)
            for (const auto& [q, hq] : b.expected_homology.components) {
                FgAbGroup tens = tensor_groups(hp, hq);
                if (!tens.is_trivial()) {
                    auto it = expected.components.find(p + q);
                    if (it == expected.components.end())
                        expected.components.emplace(p + q, tens);
                    else
                        it->second = it->second.direct_sum(tens);
                }
                FgAbGroup tor = tor_groups(hp, hq);
                if (!tor.is_trivial()) {
                    auto it = expected.components.find(p + q + tor_shift);
                    if (it == expected.components.end())
                        expected.components.emplace(p + q + tor_shift, tor);
                    else
                        it->second = it->second.direct_sum(tor);
                }
            }
        CHECK(actual == expected);
    }
}

TEST_CASE("dualize: universal coefficients") {
    Rng rng(1337);
    for (int trial = 0; trial < 200; ++trial) {
        auto rc = random_complex(rng, Orientation::Homological);
        auto dual = dualize(rc.complex);
        CHECK(dual.orientation() == Orientation::Cohomological);
        GradedAbGroup h_dual = homology(dual);
        GradedAbGroup expected;
        for (const auto& [k, hk] : rc.expected_homology.components) {
            if (hk.rank() > 0) {
                auto it = expected.components.find(k);
                if (it == expected.components.end())
                    expected.components.emplace(k, FgAbGroup(hk.rank()));
                else
                    it->second = it->second.direct_sum(FgAbGroup(hk.rank()));
            }
            if (!hk.torsion().empty()) {
                FgAbGroup t(0, hk.torsion());
                auto it = expected.components.find(k + 1);
                if (it == expected.components.end())
                    expected.components.emplace(k + 1, t);
                else
                    it->second = it->second.direct_sum(t);
            }
        }
        CHECK(h_dual == expected);
        // double dual is the identity on the nose
        CHECK(dualize(dual) == rc.complex);
    }
}

TEST_CASE("mapping cone") {
    auto c2 = mult_complex(2);

    // cone of the identity is acyclic
    std::map<int, IntegerMatrix> id_blocks;
    id_blocks.emplace(0, IntegerMatrix::identity(1));
    id_blocks.emplace(1, IntegerMatrix::identity(1));
    ChainMap id_map(c2, c2, id_blocks);
    CHECK(homology(mapping_cone(id_map)).is_trivial());

    // cone of 0 -> D recovers D
    std::map<int, std::vector<std::string>> empty_basis;
    BoundedComplex zero(Orientation::Cohomological, empty_basis, {});
    ChainMap from_zero(zero, c2, {});
    CHECK(homology(mapping_cone(from_zero)) == homology(c2));

    // cone of multiplication by 2 on Z in degree 0
    std::map<int, std::vector<std::string>> pt{{0, {"x"}}};
    BoundedComplex z_point(Orientation::Cohomological, pt, {});
    std::map<int, IntegerMatrix> two;
    two.emplace(0, IntegerMatrix::from_rows({{2}}));
    ChainMap mult2(z_point, z_point, two);
    CHECK(homology(mapping_cone(mult2)) == graded({{0, FgAbGroup(0, {2})}}));

    // non-commuting blocks are rejected
    std::map<int, IntegerMatrix> bad;
    bad.emplace(0, IntegerMatrix::from_rows({{1}}));
    bad.emplace(1, IntegerMatrix::from_rows({{2}}));
    CHECK_THROWS_AS(ChainMap(c2, c2, bad), NotAChainMap);
}

TEST_CASE("shift and reindex") {
    auto c = cubic_complex();
    auto sh = shift_complex(c, 3);
    CHECK(homology(sh) == shift(homology(c), 3));
    auto sh_neg = shift_complex(c, -1);
    CHECK(homology(sh_neg) == shift(homology(c), -1));

    auto re = reindex(c);
    CHECK(re.orientation() == Orientation::Homological);
    GradedAbGroup h = homology(re);
    CHECK(h.at(-1) == FgAbGroup(0, {3}));
    CHECK(h.at(-2) == FgAbGroup(0, {2}));
    CHECK(reindex(re) == c);
}

TEST_CASE("truncation semantics") {
    auto c = cubic_complex();
    auto t = truncate_complex(c, 1);
    CHECK(t.max_deg() == 1);
    CHECK(t.truncated_above() == 1);
    GradedAbGroup h = homology(t);
    // degree 1 is unreliable (outgoing differential missing) and is dropped;
    // degree 0 survives and is trivial here
    CHECK(h.is_trivial());
    CHECK(h.truncated_above == 0);

    // constructing directly with a marker cuts degrees above it
    std::map<int, std::vector<std::string>> basis{{0, {"a"}}, {5, {"b"}}};
    BoundedComplex marked(Orientation::Cohomological, basis, {}, 3);
    CHECK(marked.max_deg() == 0);
    CHECK_FALSE(marked.has_degree(5));

    CHECK_THROWS_AS(reindex(t), InvalidParameter);
}

TEST_CASE("direct sum of complexes") {
    auto a = mult_complex(2);
    auto b = cubic_complex();
    auto s = direct_sum_complex(a, b);
    CHECK(homology(s) == direct_sum({homology(a), homology(b)}));
}

TEST_CASE("homotopy pullback of an identity corner is the corner") {
    auto c2 = mult_complex(2);
    std::map<int, IntegerMatrix> id_blocks;
    id_blocks.emplace(0, IntegerMatrix::identity(1));
    id_blocks.emplace(1, IntegerMatrix::identity(1));
    ChainMap a(c2, c2, id_blocks);
    ChainMap b(c2, c2, id_blocks);
    auto p = homotopy_pullback(a, b);
    CHECK(homology(p) == homology(c2));
}

TEST_CASE("json round trip") {
    auto c = cubic_complex();
    auto j = complex_to_json(c);
    CHECK(complex_from_json(j) == c);

    auto t = truncate_complex(c, 1);
    CHECK(complex_from_json(complex_to_json(t)) == t);

    Rng rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        auto rc = random_complex(rng, Orientation::Homological);
        CHECK(complex_from_json(complex_to_json(rc.complex)) == rc.complex);
    }
}
