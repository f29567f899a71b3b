#include "polyext/group_cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "polyext/errors.hpp"

namespace polyext {

namespace {

// Cycle notation for a permutation given in one-line form (1-based images).
std::string cycle_label(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::ostringstream os;
    bool any = false;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        int x = start;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            cycle.push_back(x);
            x = perm[static_cast<std::size_t>(x - 1)];
        }
        if (cycle.size() < 2) continue;
        any = true;
        os << '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) os << (i ? " " : "") << cycle[i];
        os << ')';
    }
    return any ? os.str() : "e";
}

int parity(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    int transpositions = 0;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        int len = 0, x = start;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            ++len;
            x = perm[static_cast<std::size_t>(x - 1)];
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
    const int n = static_cast<int>(table_.size());
    if (n == 0) throw InvalidParameter("group must be nonempty");
    if (static_cast<int>(labels_.size()) != n)
        throw InvalidParameter("group needs one label per element");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n)
            throw InvalidParameter("multiplication table must be square");
        for (int v : row)
            if (v < 0 || v >= n) throw InvalidParameter("multiplication table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (mult(0, a) != a || mult(a, 0) != a)
            throw InvalidParameter("element 0 must be the identity");
    for (int a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (int b = 0; b < n; ++b) has_inverse |= (mult(a, b) == 0 && mult(b, a) == 0);
        if (!has_inverse) throw InvalidParameter("element without inverse: " + label(a));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mult(mult(a, b), c) != mult(a, mult(b, c)))
                    throw InvalidParameter("multiplication table is not associative");
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 4) throw InvalidParameter("symmetric group supported for 1 <= n <= 4");
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    // Lexicographic one-line order puts the identity first.
    const int m = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& p) {
        auto it = std::find(perms.begin(), perms.end(), p);
        return static_cast<int>(it - perms.begin());
    };
    std::vector<std::vector<int>> table(static_cast<std::size_t>(m),
                                        std::vector<int>(static_cast<std::size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::vector<int> comp(static_cast<std::size_t>(n));
            // (a*b)(x) = a(b(x))
            for (int x = 0; x < n; ++x) {
                const auto& pa = perms[static_cast<std::size_t>(a)];
                const auto& pb = perms[static_cast<std::size_t>(b)];
                comp[static_cast<std::size_t>(x)] =
                    pa[static_cast<std::size_t>(pb[static_cast<std::size_t>(x)] - 1)];
            }
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index_of(comp);
        }
    std::vector<std::string> labels;
    labels.reserve(perms.size());
    for (const auto& p : perms) labels.push_back(cycle_label(p));
    FiniteGroup g(std::move(labels), std::move(table));
    g.perms_ = std::move(perms);
    return g;
}

int FiniteGroup::inverse(int a) const {
    for (int b = 0; b < size(); ++b)
        if (mult(a, b) == 0) return b;
    throw InvalidParameter("element without inverse");  // unreachable after validation
}

int FiniteGroup::element(const std::string& label) const {
    for (int a = 0; a < size(); ++a)
        if (labels_[static_cast<std::size_t>(a)] == label) return a;
    throw InvalidParameter("no group element labeled " + label);
}

GModule::GModule(FiniteGroup g, int rank_in, std::vector<IntegerMatrix> action_in,
                 std::vector<std::string> labels_in)
    : group(std::move(g)), rank(rank_in), action(std::move(action_in)), labels(std::move(labels_in)) {
    if (rank < 0) throw InvalidParameter("module rank must be nonnegative");
    if (static_cast<int>(action.size()) != group.size())
        throw NotAnAction("need one action matrix per group element");
    for (const auto& a : action)
        if (a.rows() != rank || a.cols() != rank)
            throw NotAnAction("action matrices must be rank x rank");
    if (!(action[0] == IntegerMatrix::identity(rank)))
        throw NotAnAction("identity element must act as the identity matrix");
    for (int a = 0; a < group.size(); ++a)
        for (int b = 0; b < group.size(); ++b)
            if (!(action[static_cast<std::size_t>(a)] * action[static_cast<std::size_t>(b)] ==
                  action[static_cast<std::size_t>(group.mult(a, b))]))
                throw NotAnAction("action does not respect the multiplication table");
    if (labels.empty()) {
        for (int i = 0; i < rank; ++i) labels.push_back("m" + std::to_string(i));
    }
    if (static_cast<int>(labels.size()) != rank)
        throw InvalidParameter("module needs one basis label per generator");
}

GModule GModule::trivial(const FiniteGroup& g, int rank) {
    std::vector<IntegerMatrix> action(static_cast<std::size_t>(g.size()),
                                      IntegerMatrix::identity(rank));
    return GModule(g, rank, std::move(action));
}

GModule GModule::sign(const FiniteGroup& sym) {
    if (sym.permutations().empty())
        throw InvalidParameter("sign module needs a symmetric group");
    std::vector<IntegerMatrix> action;
    action.reserve(static_cast<std::size_t>(sym.size()));
    for (const auto& p : sym.permutations())
        action.push_back(IntegerMatrix::from_rows({{Int(parity(p))}}));
    return GModule(sym, 1, std::move(action));
}

GModule GModule::permutation(const FiniteGroup& g, const std::vector<std::vector<int>>& perm_of,
                             std::vector<std::string> labels) {
    if (static_cast<int>(perm_of.size()) != g.size())
        throw NotAnAction("need one basis permutation per group element");
    const int r = perm_of.empty() ? 0 : static_cast<int>(perm_of[0].size());
    std::vector<IntegerMatrix> action;
    action.reserve(perm_of.size());
    for (const auto& p : perm_of) {
        IntegerMatrix a(r, r);
        if (static_cast<int>(p.size()) != r)
            throw NotAnAction("basis permutations must all have the same length");
        for (int i = 0; i < r; ++i) a.set_entry(p[static_cast<std::size_t>(i)], i, Int(1));
        action.push_back(std::move(a));
    }
    return GModule(g, r, std::move(action), std::move(labels));
}

EquivariantComplex::EquivariantComplex(FiniteGroup g, BoundedComplex c,
                                       std::vector<std::map<int, IntegerMatrix>> action_in)
    : group(std::move(g)), complex(std::move(c)), action(std::move(action_in)) {
    if (static_cast<int>(action.size()) != group.size())
        throw NotAnAction("need one action per group element");
    if (complex.orientation() != Orientation::Cohomological)
        throw OrientationMismatch("equivariant complexes are cohomological here");
    auto blocks_of = [&](int g_idx) {
        std::map<int, IntegerMatrix> blocks;
        for (int d = complex.min_deg(); d <= complex.max_deg(); ++d)
            if (complex.rank_at(d) > 0) blocks.emplace(d, action_at(g_idx, d));
        return blocks;
    };
    for (int a = 0; a < group.size(); ++a) {
        // Each element must act by a chain map; ChainMap validates shapes and
        // commutation with the differential.
        try {
            ChainMap(complex, complex, blocks_of(a));
        } catch (const Error& e) {
            throw NotAnAction(std::string("group element does not act by a chain map: ") +
                              e.what());
        }
        for (int d = complex.min_deg(); d <= complex.max_deg(); ++d) {
            if (complex.rank_at(d) == 0) continue;
            if (a == 0 && !(action_at(0, d) == IntegerMatrix::identity(complex.rank_at(d))))
                throw NotAnAction("identity element must act as the identity");
            for (int b = 0; b < group.size(); ++b)
                if (!(action_at(a, d) * action_at(b, d) == action_at(group.mult(a, b), d)))
                    throw NotAnAction("action does not respect the multiplication table");
        }
    }
}

IntegerMatrix EquivariantComplex::action_at(int element, int degree) const {
    const auto& per_degree = action[static_cast<std::size_t>(element)];
    auto it = per_degree.find(degree);
    if (it != per_degree.end()) return it->second;
    const int r = complex.rank_at(degree);
    if (element == 0 || r == 0) return IntegerMatrix::identity(r);
    throw NotAnAction("missing action block in degree " + std::to_string(degree));
}

namespace {

// Layout bookkeeping for one total degree of the homotopy-fixed-point
// complex: the components (k, s) with k + s = t, ordered by ascending k,
// each of size (#non-identity elements)^k * rank C^s.
struct HfpDegree {
    struct Component {
        int k;           // bar tuple length
        int s;           // complex degree
        long long base;  // first index of this component
        long long tuples;
        int rank;
    };
    std::vector<Component> parts;
    long long total = 0;
};

long long pow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

HfpDegree hfp_layout(const BoundedComplex& c, int h, int t) {
    HfpDegree out;
    for (int k = std::max(0, t - c.max_deg()); t - k >= c.min_deg(); ++k) {
        const int s = t - k;
        const int r = c.rank_at(s);
        if (r == 0 || pow_ll(h, k) == 0) continue;
        HfpDegree::Component comp{k, s, out.total, pow_ll(h, k), r};
        out.total += comp.tuples * r;
        out.parts.push_back(comp);
    }
    return out;
}

// Index of a tuple of non-identity elements (entries in 1..h) among all
// tuples of its length, lexicographically.
long long tuple_index(const std::vector<int>& tuple, int h) {
    long long idx = 0;
    for (int g : tuple) idx = idx * h + (g - 1);
    return idx;
}

// Advances a tuple odometer; returns false after the last tuple.
bool next_tuple(std::vector<int>& tuple, int h) {
    for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) {
        if (*it < h) {
            ++*it;
            return true;
        }
        *it = 1;
    }
    return false;
}

std::string tuple_label(const std::vector<int>& tuple, const FiniteGroup& g) {
    std::string out = "[";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += "|";
        out += g.label(tuple[static_cast<std::size_t>(i)]);
    }
    return out + "]";
}

}  // namespace

BoundedComplex homotopy_fixed_points(const EquivariantComplex& ec, int max_degree) {
    const BoundedComplex& c = ec.complex;
    const FiniteGroup& grp = ec.group;
    const int h = grp.size() - 1;  // non-identity elements
    int top = max_degree;
    if (c.truncated_above()) top = std::min(top, *c.truncated_above());
    if (top < c.min_deg())
        throw InvalidParameter("homotopy fixed points truncated below the complex");

    // Pairs (a, b) of non-identity elements with a*b = g, per g.
    std::vector<std::vector<std::pair<int, int>>> pair_factorizations(
        static_cast<std::size_t>(grp.size()));
    for (int a = 1; a <= h; ++a)
        for (int b = 1; b <= h; ++b)
            pair_factorizations[static_cast<std::size_t>(grp.mult(a, b))].emplace_back(a, b);

    std::map<int, std::vector<std::string>> basis;
    std::map<int, HfpDegree> layouts;
    for (int t = c.min_deg(); t <= top; ++t) {
        HfpDegree layout = hfp_layout(c, h, t);
        if (layout.total == 0) {
            layouts.emplace(t, std::move(layout));
            continue;
        }
        std::vector<std::string> labels;
        labels.reserve(static_cast<std::size_t>(layout.total));
        for (const auto& comp : layout.parts) {
            std::vector<int> tuple(static_cast<std::size_t>(comp.k), 1);
            const auto& complex_labels = c.basis_at(comp.s);
            do {
                for (int m = 0; m < comp.rank; ++m)
                    labels.push_back(tuple_label(tuple, grp) + "." +
                                     complex_labels[static_cast<std::size_t>(m)]);
            } while (next_tuple(tuple, h));
        }
        basis.emplace(t, std::move(labels));
        layouts.emplace(t, std::move(layout));
    }

    std::map<int, IntegerMatrix> differentials;
    for (int t = c.min_deg(); t < top; ++t) {
        const HfpDegree& src = layouts.at(t);
        const HfpDegree& tgt = layouts.at(t + 1);
        if (src.total == 0 || tgt.total == 0) continue;
        IntegerMatrix d(static_cast<int>(tgt.total), static_cast<int>(src.total));

        // Target component bases, found by (k, s).
        auto target_base = [&](int k, int s) -> const HfpDegree::Component* {
            for (const auto& comp : tgt.parts)
                if (comp.k == k && comp.s == s) return &comp;
            return nullptr;
        };

        for (const auto& comp : src.parts) {
            const int k = comp.k;
            const int s = comp.s;
            const int sign_k = k % 2 == 0 ? 1 : -1;
            const HfpDegree::Component* bar_tgt = target_base(k + 1, s);
            const HfpDegree::Component* dc_tgt = target_base(k, s + 1);
            const IntegerMatrix dc = c.differential_from(s);

            std::vector<int> tuple(static_cast<std::size_t>(k), 1);
            long long tidx = 0;
            do {
                const long long col_base = comp.base + tidx * comp.rank;
                if (bar_tgt != nullptr) {
                    // g * f(...): prepend g, acting on the value.
                    for (int g = 1; g <= h; ++g) {
                        const IntegerMatrix act = ec.action_at(g, s);
                        const long long row_tuple = (g - 1) * pow_ll(h, k) + tidx;
                        for (int m = 0; m < comp.rank; ++m)
                            for (const auto& [r, v] : act.column(m))
                                d.add_to_entry(
                                    static_cast<int>(bar_tgt->base + row_tuple * comp.rank + r),
                                    static_cast<int>(col_base + m), v);
                    }
                    // (-1)^i f(..., g_i g_{i+1}, ...): split entry i into a
                    // product of two non-identity elements.
                    std::vector<int> split(static_cast<std::size_t>(k) + 1);
                    for (int i = 1; i <= k; ++i) {
                        for (int j = 0; j < i - 1; ++j)
                            split[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(j)];
                        for (int j = i; j < k; ++j)
                            split[static_cast<std::size_t>(j) + 1] =
                                tuple[static_cast<std::size_t>(j)];
                        const Int coeff(i % 2 == 0 ? 1 : -1);
                        for (const auto& [a, b] :
                             pair_factorizations[static_cast<std::size_t>(
                                 tuple[static_cast<std::size_t>(i - 1)])]) {
                            split[static_cast<std::size_t>(i - 1)] = a;
                            split[static_cast<std::size_t>(i)] = b;
                            const long long row_tuple = tuple_index(split, h);
                            for (int m = 0; m < comp.rank; ++m)
                                d.add_to_entry(
                                    static_cast<int>(bar_tgt->base + row_tuple * comp.rank + m),
                                    static_cast<int>(col_base + m), coeff);
                        }
                    }
                    // (-1)^{k+1} f(g_1, ..., g_k): append any g.
                    const Int last(k % 2 == 0 ? -1 : 1);
                    for (int g = 1; g <= h; ++g) {
                        const long long row_tuple = tidx * h + (g - 1);
                        for (int m = 0; m < comp.rank; ++m)
                            d.add_to_entry(
                                static_cast<int>(bar_tgt->base + row_tuple * comp.rank + m),
                                static_cast<int>(col_base + m), last);
                    }
                }
                if (dc_tgt != nullptr) {
                    // (-1)^k d_C applied to the value.
                    for (int m = 0; m < comp.rank; ++m)
                        for (const auto& [r, v] : dc.column(m))
                            d.add_to_entry(
                                static_cast<int>(dc_tgt->base + tidx * dc_tgt->rank + r),
                                static_cast<int>(col_base + m), sign_k * v);
                }
                ++tidx;
            } while (next_tuple(tuple, h));
        }
        differentials.emplace(t, std::move(d));
    }
    return BoundedComplex(Orientation::Cohomological, std::move(basis), std::move(differentials),
                          top);
}

BoundedComplex bar_cochain_complex(const GModule& m, int max_degree) {
    std::map<int, std::vector<std::string>> basis;
    basis.emplace(0, m.labels);
    std::map<int, IntegerMatrix> diffs;
    std::vector<std::map<int, IntegerMatrix>> action;
    action.reserve(m.action.size());
    for (const auto& a : m.action) action.push_back({{0, a}});
    EquivariantComplex ec(m.group,
                          BoundedComplex(Orientation::Cohomological, std::move(basis),
                                         std::move(diffs)),
                          std::move(action));
    return homotopy_fixed_points(ec, max_degree);
}

GradedAbGroup group_cohomology(const GModule& m, int max_degree) {
    if (max_degree < 0) throw InvalidParameter("cohomology degree must be nonnegative");
    return homology(bar_cochain_complex(m, max_degree + 1));
}

BoundedComplex reduced_bar_cochain_complex(const GModule& m, int max_degree) {
    for (const auto& a : m.action)
        if (!(a == IntegerMatrix::identity(m.rank)))
            throw InvalidParameter("reduced bar complex needs trivial coefficients");
    if (max_degree < 1) throw InvalidParameter("reduced bar complex starts in degree 1");
    BoundedComplex bar = bar_cochain_complex(m, max_degree);
    // With trivial coefficients the degree-0 differential vanishes, so
    // degrees >= 1 form a quotient complex with the same cohomology there.
    std::map<int, std::vector<std::string>> basis;
    std::map<int, IntegerMatrix> diffs;
    for (int d = 1; d <= bar.max_deg(); ++d) {
        basis.emplace(d, bar.basis_at(d));
        if (d < bar.max_deg()) diffs.emplace(d, bar.differential_from(d));
    }
    return BoundedComplex(Orientation::Cohomological, std::move(basis), std::move(diffs),
                          max_degree);
}

ChainMap bar_induced_map(const GModule& src, const GModule& tgt, const IntegerMatrix& f,
                         int max_degree) {
    if (!(src.group == tgt.group))
        throw InvalidParameter("induced map needs modules over the same group");
    if (f.rows() != tgt.rank || f.cols() != src.rank)
        throw InvalidParameter("induced map block has the wrong shape");
    for (int g = 0; g < src.group.size(); ++g)
        if (!(f * src.action[static_cast<std::size_t>(g)] ==
              tgt.action[static_cast<std::size_t>(g)] * f))
            throw NotAnAction("module map is not equivariant");
    BoundedComplex bar_src = bar_cochain_complex(src, max_degree);
    BoundedComplex bar_tgt = bar_cochain_complex(tgt, max_degree);
    const int h = src.group.size() - 1;
    std::map<int, IntegerMatrix> blocks;
    for (int t = 0; t <= max_degree; ++t) {
        const long long tuples = pow_ll(h, t);
        if (tuples * src.rank == 0 && tuples * tgt.rank == 0) continue;
        blocks.emplace(t, IntegerMatrix::kronecker(
                              IntegerMatrix::identity(static_cast<int>(tuples)), f));
    }
    return ChainMap(bar_src, bar_tgt, std::move(blocks));
}

GradedAbGroup rp_infinity_reduced_cohomology(int max_degree) {
    GradedAbGroup out;
    for (int d = 2; d <= max_degree; d += 2)
        out.components.emplace(d, FgAbGroup(0, {Int(2)}));
    out.truncated_above = max_degree;
    return out;
}

GradedAbGroup rp_infinity_reduced_cohomology_via_bar(int max_degree) {
    const GModule m = GModule::trivial(FiniteGroup::symmetric(2));
    return homology(reduced_bar_cochain_complex(m, max_degree + 1));
}

GradedAbGroup bsigma3_mod_bsigma2(int max_degree) {
    if (max_degree < 1) throw InvalidParameter("cofiber cohomology starts in degree 1");
    const FiniteGroup s3 = FiniteGroup::symmetric(3);
    const FiniteGroup s2 = FiniteGroup::symmetric(2);
    const int top = max_degree + 1;
    BoundedComplex red3 = reduced_bar_cochain_complex(GModule::trivial(s3), top);
    BoundedComplex red2 = reduced_bar_cochain_complex(GModule::trivial(s2), top);

    // Restriction along the order-2 subgroup generated by (1 2): a cochain on
    // the big group pulls back to its values on tuples from the subgroup.
    const int t12 = s3.element("(1 2)");
    const int h = s3.size() - 1;
    std::map<int, IntegerMatrix> blocks;
    for (int d = 1; d <= top; ++d) {
        IntegerMatrix block(red2.rank_at(d), red3.rank_at(d));
        long long idx = 0;
        for (int i = 0; i < d; ++i) idx = idx * h + (t12 - 1);
        block.set_entry(0, static_cast<int>(idx), Int(1));
        blocks.emplace(d, std::move(block));
    }
    ChainMap restriction(red3, red2, std::move(blocks));

    // The restriction is degreewise surjective, so the homotopy fiber of the
    // map of reduced cochain complexes computes the reduced cohomology of the
    // cofiber of the classifying-space map.
    BoundedComplex fiber = shift_complex(mapping_cone(restriction), 1);
    return homology(fiber);
}

GradedAbGroup bsigma3_mod_bsigma2_closed_form(int max_degree) {
    GradedAbGroup out;
    for (int d = 4; d <= max_degree; d += 4)
        out.components.emplace(d, FgAbGroup(0, {Int(3)}));
    out.truncated_above = max_degree;
    return out;
}

}  // namespace polyext
