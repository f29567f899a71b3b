#include "polyext/abelian.hpp"

#include <algorithm>
#include <sstream>

#include "polyext/errors.hpp"
#include "polyext/snf.hpp"

namespace polyext {

std::vector<Int> normalize_invariant_factors(std::vector<Int> factors) {
    for (auto& f : factors) {
        f = abs_int(f);
        if (f == 0)
            throw InvalidParameter("torsion modulus 0 is not a finite cyclic factor");
    }
    factors.erase(std::remove(factors.begin(), factors.end(), Int(1)), factors.end());
    // Pairwise (gcd, lcm) replacement converges to the divisibility chain.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < factors.size(); ++i)
            for (std::size_t j = i + 1; j < factors.size(); ++j) {
                if (factors[j] % factors[i] == 0) continue;
                Int g = gcd_int(factors[i], factors[j]);
                Int l = lcm_int(factors[i], factors[j]);
                factors[i] = g;
                factors[j] = l;
                changed = true;
            }
        if (changed)
            factors.erase(std::remove(factors.begin(), factors.end(), Int(1)), factors.end());
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

FgAbGroup::FgAbGroup(int rank, std::vector<Int> torsion) : rank_(rank) {
    if (rank < 0) throw InvalidParameter("negative free rank");
    torsion_ = normalize_invariant_factors(std::move(torsion));
}

FgAbGroup FgAbGroup::direct_sum(const FgAbGroup& rhs) const {
    std::vector<Int> t = torsion_;
    t.insert(t.end(), rhs.torsion_.begin(), rhs.torsion_.end());
    return FgAbGroup(rank_ + rhs.rank_, std::move(t));
}

std::string FgAbGroup::to_string(bool rational) const {
    if (rational) {
        if (rank_ == 0) return "0";
        return rank_ == 1 ? "Q" : "Q^" + std::to_string(rank_);
    }
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank_ > 0) {
        os << (rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_));
        first = false;
    }
    for (const auto& d : torsion_) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

std::string FgAbGroup::to_string_primary() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank_ > 0) {
        os << (rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_));
        first = false;
    }
    // Split each cyclic factor into prime-power summands, collect, and print
    // grouped by prime then exponent.
    std::vector<Int> pieces;
    for (const auto& d : torsion_)
        for (const auto& [p, e] : factorize(d)) {
            Int q = 1;
            for (int k = 0; k < e; ++k) q *= p;
            pieces.push_back(q);
        }
    std::sort(pieces.begin(), pieces.end());
    for (const auto& q : pieces) {
        if (!first) os << " + ";
        os << "Z/" << q;
        first = false;
    }
    return os.str();
}

const FgAbGroup& GradedAbGroup::at(int degree) const {
    static const FgAbGroup trivial;
    auto it = components.find(degree);
    return it == components.end() ? trivial : it->second;
}

std::string GradedAbGroup::to_string(bool rational) const {
    std::ostringstream os;
    bool any = false;
    for (const auto& [d, g] : components) {
        if (g.is_trivial()) continue;
        if (any) os << ", ";
        os << d << ": " << g.to_string(rational);
        any = true;
    }
    if (!any) os << "trivial";
    if (truncated_above) os << "  (truncated above degree " << *truncated_above << ")";
    return os.str();
}

GradedAbGroup direct_sum(const std::vector<GradedAbGroup>& parts) {
    GradedAbGroup out;
    for (const auto& p : parts)
        if (p.truncated_above &&
            (!out.truncated_above || *p.truncated_above < *out.truncated_above))
            out.truncated_above = p.truncated_above;
    for (const auto& p : parts)
        for (const auto& [d, g] : p.components) {
            if (out.truncated_above && d > *out.truncated_above) continue;
            if (g.is_trivial()) continue;
            auto it = out.components.find(d);
            if (it == out.components.end())
                out.components.emplace(d, g);
            else
                it->second = it->second.direct_sum(g);
        }
    return out;
}

GradedAbGroup shift(const GradedAbGroup& g, int k) {
    GradedAbGroup out;
    for (const auto& [d, c] : g.components) out.components.emplace(d + k, c);
    if (g.truncated_above) out.truncated_above = *g.truncated_above + k;
    return out;
}

GradedAbGroup truncate(const GradedAbGroup& g, int max_degree) {
    GradedAbGroup out;
    for (const auto& [d, c] : g.components)
        if (d <= max_degree) out.components.emplace(d, c);
    out.truncated_above = max_degree;
    if (g.truncated_above && *g.truncated_above < max_degree)
        out.truncated_above = g.truncated_above;
    return out;
}

GradedAbGroup rationalize(const GradedAbGroup& g) {
    GradedAbGroup out;
    out.truncated_above = g.truncated_above;
    for (const auto& [d, c] : g.components)
        if (c.rank() > 0) out.components.emplace(d, FgAbGroup(c.rank()));
    return out;
}

FgAbGroup subquotient_group(const IntegerMatrix& z, const IntegerMatrix& b) {
    if (z.cols() != b.rows())
        throw IndexOutOfRange("subquotient_group: cols(Z) = " + std::to_string(z.cols()) +
                              " but rows(B) = " + std::to_string(b.rows()));
    if (!(z * b).is_zero())
        throw CompositionNotZero("subquotient_group: Z * B != 0");
    int n = z.cols();
    int rank_z = matrix_rank(z);
    std::vector<Int> inv_b = smith_invariant_factors(b);
    int rank_b = static_cast<int>(inv_b.size());
    std::vector<Int> torsion;
    for (const auto& f : inv_b)
        if (f > 1) torsion.push_back(f);
    return FgAbGroup(n - rank_z - rank_b, std::move(torsion));
}

}  // namespace polyext
