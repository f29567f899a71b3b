#include "polyext/ext_models.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "polyext/combinatorics.hpp"
#include "polyext/errors.hpp"
#include "polyext/group_cohomology.hpp"

namespace polyext {

namespace {

std::string tuple_to_label(const std::vector<int>& values) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
    os << ')';
    return os.str();
}

// All strictly increasing chains in {1..n} of the given length that end at n,
// in lexicographic order.
std::vector<std::vector<int>> chains_ending_at(int n, int length) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int next_min) -> void {
        if (static_cast<int>(current.size()) == length - 1) {
            current.push_back(n);
            out.push_back(current);
            current.pop_back();
            return;
        }
        for (int v = next_min; v < n; ++v) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    if (length >= 1) recurse(recurse, 1);
    return out;
}

}  // namespace

GradedAbGroup ext_value(const ChainLevelModel& model) {
    if (model.grading.scale != 1 && model.grading.scale != -1)
        throw InvalidParameter("grading scale must be +1 or -1");
    GradedAbGroup h =
        model.dual ? homology(dualize(model.complex)) : homology(model.complex);
    GradedAbGroup out;
    for (const auto& [d, g] : h.components)
        out.components.emplace(model.grading.scale * d + model.grading.offset, g);
    if (h.truncated_above) {
        if (model.grading.scale == -1)
            throw InvalidParameter("cannot reverse the grading of a truncated value");
        out.truncated_above = *h.truncated_above + model.grading.offset;
    }
    return out;
}

BoundedComplex symmetric_power_complex(int n) {
    if (n < 1) throw InvalidParameter("symmetric power complex needs n >= 1");
    // Degree k holds the chains with k+1 entries; ranks are C(n-1, k).
    std::vector<std::vector<std::vector<int>>> chains;
    for (int k = 0; k < n; ++k) chains.push_back(chains_ending_at(n, k + 1));

    std::map<int, std::vector<std::string>> basis;
    std::vector<std::map<std::vector<int>, int>> index(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        std::vector<std::string> labels;
        for (const auto& chain : chains[static_cast<std::size_t>(k)]) {
            index[static_cast<std::size_t>(k)].emplace(chain,
                                                       static_cast<int>(labels.size()));
            labels.push_back(tuple_to_label(chain));
        }
        basis.emplace(k, std::move(labels));
    }

    std::map<int, IntegerMatrix> diffs;
    for (int k = 0; k + 1 < n; ++k) {
        const auto& source = chains[static_cast<std::size_t>(k)];
        IntegerMatrix d(static_cast<int>(chains[static_cast<std::size_t>(k) + 1].size()),
                        static_cast<int>(source.size()));
        for (int col = 0; col < static_cast<int>(source.size()); ++col) {
            const auto& chain = source[static_cast<std::size_t>(col)];
            for (int j = 0; j <= k; ++j) {
                const int lo = j == 0 ? 0 : chain[static_cast<std::size_t>(j) - 1];
                const int hi = chain[static_cast<std::size_t>(j)];
                for (int v = lo + 1; v < hi; ++v) {
                    std::vector<int> refined = chain;
                    refined.insert(refined.begin() + j, v);
                    const Int coeff = (j % 2 == 0 ? Int(1) : Int(-1)) * binomial(hi - lo, v - lo);
                    d.set_entry(index[static_cast<std::size_t>(k) + 1].at(refined), col, coeff);
                }
            }
        }
        diffs.emplace(k, std::move(d));
    }
    return BoundedComplex(Orientation::Cohomological, std::move(basis), std::move(diffs));
}

ChainLevelModel surjection_complex(int n, int m) {
    if (n < 1 || m < 0) throw InvalidParameter("surjection complex needs n >= 1, m >= 0");
    const int top = std::min(m, n);
    std::map<int, std::vector<std::string>> basis;
    std::vector<std::map<Surjection, int>> index(static_cast<std::size_t>(top) + 1);
    for (int k = 1; k <= top; ++k) {
        std::vector<std::string> labels;
        for (const auto& s : surjections(n, k)) {
            index[static_cast<std::size_t>(k)].emplace(s, static_cast<int>(labels.size()));
            labels.push_back(tuple_to_label(s));
        }
        basis.emplace(k, std::move(labels));
    }
    std::map<int, IntegerMatrix> diffs;
    for (int k = 2; k <= top; ++k) {
        const auto& source = surjections(n, k);
        IntegerMatrix d(static_cast<int>(surjections(n, k - 1).size()),
                        static_cast<int>(source.size()));
        for (int col = 0; col < static_cast<int>(source.size()); ++col)
            for (int i = 1; i < k; ++i)
                d.add_to_entry(
                    index[static_cast<std::size_t>(k) - 1].at(
                        merge_values(source[static_cast<std::size_t>(col)], i)),
                    col, Int(i % 2 == 0 ? 1 : -1));
        diffs.emplace(k, std::move(d));
    }
    return ChainLevelModel{
        BoundedComplex(Orientation::Homological, std::move(basis), std::move(diffs)),
        GradingMap{-1, n},
        false,
        "surjections onto k letters under value merges; homology in degree n-* gives the maps "
        "out of the degree-m augmentation quotient into the n-fold tensor power"};
}

ChainLevelModel rbar_complex(int n) {
    if (n < 1) throw InvalidParameter("cell complex needs n >= 1");
    std::map<int, std::vector<std::string>> basis;
    std::map<int, IntegerMatrix> diffs;
    for (int j = 0; j < n; ++j) {
        basis.emplace(j, std::vector<std::string>{"cell" + std::to_string(j)});
        if (j >= 1 && j % 2 == 1)
            diffs.emplace(j, IntegerMatrix::from_rows({{Int(1)}}));
    }
    return ChainLevelModel{
        BoundedComplex(Orientation::Homological, std::move(basis), std::move(diffs)),
        GradingMap{1, 0},
        true,
        "reduced cell complex of the ordered-configuration quotient with one cell per dimension "
        "below n; the dual cochain complex computes the maps from abelianization into the "
        "degree-n augmentation quotient"};
}

std::vector<BoundedComplex> tensor_symmetric_complex(int m, int n) {
    if (m < 1 || n < 1) throw InvalidParameter("tensor-symmetric complexes need m, n >= 1");
    std::vector<BoundedComplex> out;
    for (const auto& parts : compositions(n, m)) {
        BoundedComplex acc = symmetric_power_complex(parts[0]);
        for (std::size_t i = 1; i < parts.size(); ++i)
            acc = tensor_product(acc, symmetric_power_complex(parts[i]));
        out.push_back(std::move(acc));
    }
    return out;
}

GradedAbGroup tensor_symmetric_ext(int m, int n) {
    std::vector<GradedAbGroup> parts;
    for (const auto& c : tensor_symmetric_complex(m, n)) parts.push_back(homology(c));
    return direct_sum(parts);
}

ChainLevelModel lambda2_pullback_complex(int n, int max_degree) {
    if (n < 1 || max_degree < 0)
        throw InvalidParameter("pullback model needs n >= 1 and a nonnegative degree bound");
    const FiniteGroup s2 = FiniteGroup::symmetric(2);

    const auto comps = compositions(n, 2);
    const int r = static_cast<int>(comps.size());
    std::vector<std::string> labels;
    std::vector<int> swapped(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        labels.push_back(tuple_to_label(comps[static_cast<std::size_t>(i)]));
        const std::vector<int> rev{comps[static_cast<std::size_t>(i)][1],
                                   comps[static_cast<std::size_t>(i)][0]};
        swapped[static_cast<std::size_t>(i)] =
            static_cast<int>(std::find(comps.begin(), comps.end(), rev) - comps.begin());
    }
    std::vector<int> identity_perm(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) identity_perm[static_cast<std::size_t>(i)] = i;
    const GModule module = GModule::permutation(s2, {identity_perm, swapped}, labels);
    const GModule scalars = GModule::trivial(s2);

    // Build the corners two degrees past the last internal degree feeding the
    // requested Ext range, so the cone and the homology drop land exactly at
    // the requested bound.
    const int internal_top = std::max(2, max_degree - (n - 2) + 2);
    IntegerMatrix augmentation(1, r);
    for (int i = 0; i < r; ++i) augmentation.set_entry(0, i, Int(1));
    const ChainMap a = bar_induced_map(module, scalars, augmentation, internal_top);
    const BoundedComplex middle = bar_cochain_complex(scalars, internal_top);
    std::map<int, std::vector<std::string>> point_basis{{0, {"unit"}}};
    BoundedComplex point(Orientation::Cohomological, std::move(point_basis), {});
    const ChainMap b(point, middle,
                     {{0, IntegerMatrix::from_rows({{Int(1)}})}});

    return ChainLevelModel{
        homotopy_pullback(a, b),
        GradingMap{1, n - 2},
        false,
        "homotopy pullback of the swap-fixed-points of two-part compositions over the "
        "classifying-space cochains of the two-element group, against the unit"};
}

}  // namespace polyext
