#pragma once

// Shared helpers for the test suites: deterministic RNG, random matrices,
// random unimodular transforms (with tracked inverses), an independent
// determinantal-divisors oracle for Smith forms, random complexes with
// known homology, and group-arithmetic oracles for Künneth / universal
// coefficients comparisons.

#include <random>
#include <vector>

#include "polyext/abelian.hpp"
#include "polyext/complexes.hpp"
#include "polyext/matrix.hpp"

namespace polyext::testing {

using Rng = std::mt19937;

inline IntegerMatrix random_matrix(Rng& rng, int rows, int cols, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntegerMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set_entry(i, j, dist(rng));
    return m;
}

// Random unimodular P together with its exact inverse, built as a product of
// elementary row operations applied to the identity.
inline std::pair<IntegerMatrix, IntegerMatrix> random_unimodular_pair(Rng& rng, int n,
                                                                      int ops = 12) {
    IntegerMatrix p = IntegerMatrix::identity(n);
    IntegerMatrix pinv = IntegerMatrix::identity(n);
    if (n < 2) return {p, pinv};
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int k = 0; k < ops; ++k) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        Int c = coef(rng);
        // P <- E * P where E adds c * row j to row i; Pinv <- Pinv * E^{-1}.
        for (int t = 0; t < n; ++t) p.add_to_entry(i, t, c * p.entry(j, t));
        for (int t = 0; t < n; ++t) pinv.add_to_entry(t, j, -c * pinv.entry(t, i));
    }
    return {p, pinv};
}

// Determinantal-divisors oracle: the k-th invariant factor equals
// gcd(k-minors) / gcd((k-1)-minors). Completely independent of the Smith
// reduction (uses only cofactor/Bareiss determinants of submatrices).
inline std::vector<Int> invariant_factors_via_minors(const IntegerMatrix& m) {
    int r = m.rows(), c = m.cols();
    int n = std::min(r, c);
    std::vector<Int> d(static_cast<std::size_t>(n) + 1, 0);
    d[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Int g = 0;
        std::vector<int> rsel(static_cast<std::size_t>(k)), csel(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) rsel[static_cast<std::size_t>(i)] = i;
        while (true) {
            for (int i = 0; i < k; ++i) csel[static_cast<std::size_t>(i)] = i;
            while (true) {
                IntegerMatrix sub(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        sub.set_entry(i, j, m.entry(rsel[static_cast<std::size_t>(i)],
                                                    csel[static_cast<std::size_t>(j)]));
                g = gcd_int(g, sub.determinant());
                int t = k - 1;
                while (t >= 0 && csel[static_cast<std::size_t>(t)] == c - k + t) --t;
                if (t < 0) break;
                ++csel[static_cast<std::size_t>(t)];
                for (int u = t + 1; u < k; ++u)
                    csel[static_cast<std::size_t>(u)] = csel[static_cast<std::size_t>(u - 1)] + 1;
            }
            int t = k - 1;
            while (t >= 0 && rsel[static_cast<std::size_t>(t)] == r - k + t) --t;
            if (t < 0) break;
            ++rsel[static_cast<std::size_t>(t)];
            for (int u = t + 1; u < k; ++u)
                rsel[static_cast<std::size_t>(u)] = rsel[static_cast<std::size_t>(u - 1)] + 1;
        }
        d[static_cast<std::size_t>(k)] = g;
        if (g == 0) break;
    }
    std::vector<Int> factors;
    for (int k = 1; k <= n; ++k) {
        if (d[static_cast<std::size_t>(k)] == 0) break;
        factors.push_back(d[static_cast<std::size_t>(k)] / d[static_cast<std::size_t>(k) - 1]);
    }
    return factors;
}

// ---- abelian-group arithmetic oracles (independent of the library's
// ---- homology machinery: only gcds of the canonical invariants) ----

inline FgAbGroup tensor_groups(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> torsion;
    for (const auto& t : a.torsion())
        for (int k = 0; k < b.rank(); ++k) torsion.push_back(t);
    for (const auto& t : b.torsion())
        for (int k = 0; k < a.rank(); ++k) torsion.push_back(t);
    for (const auto& s : a.torsion())
        for (const auto& t : b.torsion()) {
            Int g = gcd_int(s, t);
            if (g > 1) torsion.push_back(g);
        }
    return FgAbGroup(a.rank() * b.rank(), torsion);
}

inline FgAbGroup tor_groups(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> torsion;
    for (const auto& s : a.torsion())
        for (const auto& t : b.torsion()) {
            Int g = gcd_int(s, t);
            if (g > 1) torsion.push_back(g);
        }
    return FgAbGroup(0, torsion);
}

// Random bounded complex assembled from elementary pieces -- free summands
// and two-term multiplication complexes -- conjugated by random unimodular
// basis changes in every degree. The homology is known by construction.
struct RandomComplex {
    BoundedComplex complex;
    GradedAbGroup expected_homology;
};

inline RandomComplex random_complex(Rng& rng, Orientation orientation, int max_len = 3,
                                    int max_pieces = 3) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> piece_dist(0, max_pieces);
    std::uniform_int_distribution<int> mult_dist(-6, 6);
    int top = len_dist(rng);
    bool coh = orientation == Orientation::Cohomological;

    // ranks and diagonal differentials, built degreewise
    std::map<int, int> rank;
    for (int d = 0; d <= top; ++d) rank[d] = 0;
    struct Piece {
        int lower_deg;  // degree of the "target" side for homological
        Int mult;
        int lower_idx, upper_idx;
    };
    std::vector<Piece> pieces;
    GradedAbGroup expected;
    auto add_component = [&expected](int d, const FgAbGroup& g) {
        if (g.is_trivial()) return;
        auto it = expected.components.find(d);
        if (it == expected.components.end())
            expected.components.emplace(d, g);
        else
            it->second = it->second.direct_sum(g);
    };
    for (int d = 0; d <= top; ++d) {
        int free_count = piece_dist(rng);
        for (int k = 0; k < free_count; ++k) {
            rank[d] += 1;
            add_component(d, FgAbGroup(1));
        }
        if (d < top) {
            int pair_count = piece_dist(rng);
            for (int k = 0; k < pair_count; ++k) {
                Int m = mult_dist(rng);
                Piece p;
                p.lower_deg = d;
                p.mult = m;
                p.lower_idx = rank[d]++;
                p.upper_idx = rank[d + 1]++;
                pieces.push_back(p);
                if (m == 0) {
                    add_component(d, FgAbGroup(1));
                    add_component(d + 1, FgAbGroup(1));
                } else if (abs_int(m) > 1) {
                    // homological: H_d gets Z/m; cohomological: upper degree
                    // d+1 is the target... orientation decides which side the
                    // cokernel lives on.
                    add_component(coh ? d + 1 : d, FgAbGroup(0, {abs_int(m)}));
                }
            }
        }
    }

    std::map<int, std::vector<std::string>> basis;
    for (int d = 0; d <= top; ++d) {
        std::vector<std::string> labels;
        for (int i = 0; i < rank[d]; ++i) labels.push_back("e" + std::to_string(d) + "_" + std::to_string(i));
        if (!labels.empty()) basis.emplace(d, std::move(labels));
    }
    // diagonal differentials: homological from d+1 -> d; cohomological d -> d+1
    std::map<int, IntegerMatrix> diffs;
    for (int d = 0; d < top; ++d) {
        IntegerMatrix m = coh ? IntegerMatrix(rank[d + 1], rank[d])
                              : IntegerMatrix(rank[d], rank[d + 1]);
        bool any = false;
        for (const auto& p : pieces) {
            if (p.lower_deg != d || p.mult == 0) continue;
            if (coh)
                m.set_entry(p.upper_idx, p.lower_idx, p.mult);
            else
                m.set_entry(p.lower_idx, p.upper_idx, p.mult);
            any = true;
        }
        if (any) diffs.emplace(coh ? d : d + 1, std::move(m));
    }
    // conjugate by unimodular changes of basis in each degree:
    // new differential out of degree d = U_target * M * U_source^{-1}
    std::map<int, std::pair<IntegerMatrix, IntegerMatrix>> u;
    for (int d = 0; d <= top; ++d) u[d] = random_unimodular_pair(rng, rank[d]);
    std::map<int, IntegerMatrix> conj;
    for (const auto& [d, m] : diffs) {
        int tgt = coh ? d + 1 : d - 1;
        conj.emplace(d, u[tgt].first * m * u[d].second);
    }
    return RandomComplex{BoundedComplex(orientation, std::move(basis), std::move(conj)),
                         expected};
}

}  // namespace polyext::testing
