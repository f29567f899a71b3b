#include "polyext/ext_api.hpp"

#include <limits>
#include <map>
#include <sstream>

#include "polyext/combinatorics.hpp"
#include "polyext/errors.hpp"
#include "polyext/ext_models.hpp"

namespace polyext {

namespace {

int to_rank(const Int& r) {
    if (r > Int(std::numeric_limits<int>::max()))
        throw InvalidParameter("rank " + r.str() + " exceeds the representable range");
    return r.convert_to<int>();
}

GradedAbGroup free_in_degree(const Int& rank, int degree) {
    GradedAbGroup out;
    if (rank > 0) out.components.emplace(degree, FgAbGroup(to_rank(rank)));
    return out;
}

// --- closed forms -----------------------------------------------------------

GradedAbGroup closed_tensor_tensor(int m, int n) {
    return free_in_degree(count_surjections(n, m), n - m);
}

GradedAbGroup closed_tensor_exterior(int m, int n) {
    return free_in_degree(count_compositions(n, m), n - m);
}

GradedAbGroup closed_tensor_divided(int m, int n) {
    return m == n ? free_in_degree(1, 0) : GradedAbGroup{};
}

// ab -> Pa_n: one free class in degree n-1 when n is odd, nothing otherwise.
GradedAbGroup closed_ab_passi(int n) {
    return n % 2 == 1 ? free_in_degree(1, n - 1) : GradedAbGroup{};
}

// Pa_m -> T^n: Z in degree 0 once m >= n. For m < n the value is a free
// group concentrated in degree n-m, so its rank is forced by the Euler
// characteristic of the bases sur(n, 1), ..., sur(n, m) -- a counting
// computation independent of any matrix reduction.
GradedAbGroup closed_passi_tensor(int m, int n) {
    if (m >= n) return free_in_degree(1, 0);
    Int chi = 0;
    for (int k = 1; k <= m; ++k) {
        const Int term = count_surjections(n, k);
        chi += k % 2 == 0 ? term : -term;
    }
    if (m % 2 == 1) chi = -chi;
    return free_in_degree(chi, n - m);
}

std::string degree_list(int first, int step) {
    return "degrees " + std::to_string(first) + ", " + std::to_string(first + step) +
           ", ... (period " + std::to_string(step) + ")";
}

// Lambda^2 -> Lambda^n: free part of rank Part(n, 2) in degree n-2, plus for
// odd n a Z/2 in every degree n+1, n+3, ... without end.
GradedAbGroup closed_lambda2_lambda(int n, int max_degree,
                                    std::optional<std::string>& periodicity) {
    GradedAbGroup out = free_in_degree(count_partitions_into(n, 2), n - 2);
    if (n % 2 == 1) {
        for (int d = n + 1; d <= max_degree; d += 2)
            out.components.emplace(d, FgAbGroup(0, {Int(2)}));
        out.truncated_above = max_degree;
        periodicity = "Z/2 at " + degree_list(n + 1, 2);
    }
    return out;
}

// Lambda^3 -> Lambda^n: free part of rank Part(n, 3) in degree n-3, a
// (Z/2)^(floor(n/2)) in every degree n, n+2, ..., and -- only when 3 does not
// divide n -- a Z/3 in every degree n+2, n+6, ... (period 4).
GradedAbGroup closed_lambda3_lambda(int n, int max_degree,
                                    std::optional<std::string>& periodicity) {
    const int two_rank = n / 2;
    std::map<int, std::vector<Int>> torsion;
    std::vector<std::string> clauses;
    if (two_rank > 0) {
        for (int d = n; d <= max_degree; d += 2)
            torsion[d].assign(static_cast<std::size_t>(two_rank), Int(2));
        const std::string group =
            two_rank == 1 ? "Z/2" : "(Z/2)^" + std::to_string(two_rank);
        clauses.push_back(group + " at " + degree_list(n, 2));
    }
    if (n % 3 != 0) {
        for (int d = n + 2; d <= max_degree; d += 4) torsion[d].push_back(Int(3));
        clauses.push_back("Z/3 at " + degree_list(n + 2, 4));
    }

    GradedAbGroup out = free_in_degree(count_partitions_into(n, 3), n - 3);
    for (const auto& [d, moduli] : torsion) {
        const FgAbGroup group(0, moduli);
        if (!group.is_trivial()) out.components.emplace(d, group);
    }
    if (!clauses.empty()) {
        out.truncated_above = max_degree;
        std::string joined = clauses.front();
        for (std::size_t i = 1; i < clauses.size(); ++i) joined += "; " + clauses[i];
        periodicity = joined;
    }
    return out;
}

// --- dispatch helpers -------------------------------------------------------

bool is_constant(const FunctorDescriptor& f) { return f.arity == 0; }

// Every functor here of positive arity vanishes on the trivial group, while
// arity 0 is the constant functor Z. The category splits off the constant
// block, so Ext across the two blocks vanishes and Ext(Z, Z) = Z in degree 0.
GradedAbGroup constant_block_value(const FunctorDescriptor& source,
                                   const FunctorDescriptor& target) {
    return is_constant(source) && is_constant(target) ? free_in_degree(1, 0)
                                                      : GradedAbGroup{};
}

// The exterior-power sources keep exterior targets of arity 1 in their own
// row: the arity-1 corner is precisely the flagged open case of the
// Lambda^2 model, which must stay reachable rather than collapse onto the
// (unsupported) tensor column.
FunctorDescriptor canonical_target(const FunctorDescriptor& source,
                                   const FunctorDescriptor& target) {
    if (source.kind == FunctorKind::Exterior &&
        target.kind == FunctorKind::Exterior && target.arity >= 1)
        return target;
    return target.canonical();
}

const char* lambda2_arity_one_warning =
    "Lambda^2 with an arity-1 exterior target lies outside the range "
    "established for this model; the value is reported as computed but "
    "unverified";

GradedAbGroup compute_closed(const FunctorDescriptor& src, const FunctorDescriptor& tgt,
                             const ExtOptions& opts,
                             std::optional<std::string>& periodicity) {
    const int m = src.arity;
    const int n = tgt.arity;
    if (opts.rational && src.kind == FunctorKind::Exterior) {
        switch (tgt.kind) {
            case FunctorKind::Exterior:
                return free_in_degree(count_partitions_into(n, m), n - m);
            case FunctorKind::Tensor:
                return free_in_degree(stirling2(n, m), n - m);
            case FunctorKind::Symmetric:
            case FunctorKind::Divided:
                return {};  // only the arity <= 1 corner survives rationally
            default:
                break;
        }
    }
    GradedAbGroup value;
    switch (src.kind) {
        case FunctorKind::Tensor:
            switch (tgt.kind) {
                case FunctorKind::Tensor:
                    value = closed_tensor_tensor(m, n);
                    break;
                case FunctorKind::Exterior:
                    value = closed_tensor_exterior(m, n);
                    break;
                case FunctorKind::Divided:
                    value = closed_tensor_divided(m, n);
                    break;
                case FunctorKind::Passi:
                    value = closed_ab_passi(n);
                    break;
                default:
                    break;
            }
            break;
        case FunctorKind::Passi:
            value = closed_passi_tensor(m, n);
            break;
        case FunctorKind::Exterior:
            value = m == 2 ? closed_lambda2_lambda(n, opts.max_degree, periodicity)
                           : closed_lambda3_lambda(n, opts.max_degree, periodicity);
            break;
        default:
            break;
    }
    if (opts.rational) {
        periodicity.reset();  // the repeating families are pure torsion
        return rationalize(value);
    }
    return value;
}

GradedAbGroup compute_chain(const FunctorDescriptor& src, const FunctorDescriptor& tgt,
                            const ExtOptions& opts) {
    GradedAbGroup value;
    if (src.kind == FunctorKind::Tensor && tgt.kind == FunctorKind::Symmetric)
        value = tensor_symmetric_ext(src.arity, tgt.arity);
    else if (src.kind == FunctorKind::Tensor && tgt.kind == FunctorKind::Passi)
        value = ext_value(rbar_complex(tgt.arity));
    else if (src.kind == FunctorKind::Passi && tgt.kind == FunctorKind::Tensor)
        value = ext_value(surjection_complex(tgt.arity, src.arity));
    else  // Lambda^2 -> Lambda^n, the only remaining chain-level route
        value = truncate(ext_value(lambda2_pullback_complex(tgt.arity, opts.max_degree)),
                         opts.max_degree);
    return opts.rational ? rationalize(value) : value;
}

std::string mismatch_line(int degree, const FgAbGroup& closed, const FgAbGroup& chain) {
    return "degree " + std::to_string(degree) + ": closed form = " + closed.to_string() +
           ", chain level = " + chain.to_string();
}

std::vector<std::string> compare_degreewise(const GradedAbGroup& closed,
                                            const GradedAbGroup& chain) {
    std::vector<std::string> mismatches;
    auto it = closed.components.begin();
    auto jt = chain.components.begin();
    while (it != closed.components.end() || jt != chain.components.end()) {
        if (jt == chain.components.end() ||
            (it != closed.components.end() && it->first < jt->first)) {
            mismatches.push_back(mismatch_line(it->first, it->second, FgAbGroup()));
            ++it;
        } else if (it == closed.components.end() || jt->first < it->first) {
            mismatches.push_back(mismatch_line(jt->first, FgAbGroup(), jt->second));
            ++jt;
        } else {
            if (it->second != jt->second)
                mismatches.push_back(mismatch_line(it->first, it->second, jt->second));
            ++it;
            ++jt;
        }
    }
    return mismatches;
}

}  // namespace

FunctorDescriptor::FunctorDescriptor(FunctorKind kind_, int arity_)
    : kind(kind_), arity(arity_) {
    if (arity < 0) throw InvalidParameter("functor arity must be >= 0");
    if (kind == FunctorKind::Passi && arity < 1)
        throw InvalidParameter("Passi functors start at arity 1");
}

FunctorDescriptor FunctorDescriptor::canonical() const {
    if (kind == FunctorKind::Passi) return *this;
    if (arity == 0) return {FunctorKind::Tensor, 0};
    if (arity == 1) return {FunctorKind::Tensor, 1};
    return *this;
}

std::string FunctorDescriptor::name() const {
    if (kind == FunctorKind::Tensor && arity == 1) return "ab";
    const char* prefix = nullptr;
    switch (kind) {
        case FunctorKind::Tensor: prefix = "T"; break;
        case FunctorKind::Exterior: prefix = "Lambda"; break;
        case FunctorKind::Divided: prefix = "Gamma"; break;
        case FunctorKind::Symmetric: prefix = "S"; break;
        case FunctorKind::Passi: prefix = "Pa"; break;
    }
    return std::string(prefix) + "^" + std::to_string(arity);
}

std::string to_string(ExtMethod method) {
    switch (method) {
        case ExtMethod::ClosedForm: return "closed";
        case ExtMethod::ChainLevel: return "chain";
        case ExtMethod::Both: return "both";
    }
    return "";
}

MethodAvailability available_methods(const FunctorDescriptor& source,
                                     const FunctorDescriptor& target, bool rational) {
    const FunctorDescriptor src = source.canonical();
    const FunctorDescriptor tgt = canonical_target(src, target);
    if (is_constant(src) || is_constant(tgt)) return {true, false};

    MethodAvailability out;
    switch (src.kind) {
        case FunctorKind::Tensor:
            if (tgt.kind == FunctorKind::Tensor || tgt.kind == FunctorKind::Exterior ||
                tgt.kind == FunctorKind::Divided)
                out.closed_form = true;
            else if (tgt.kind == FunctorKind::Symmetric)
                out.chain_level = true;
            else if (src.arity == 1)  // ab -> Pa_n
                out = {true, true};
            break;
        case FunctorKind::Passi:
            if (tgt.kind == FunctorKind::Tensor) out = {true, true};
            break;
        case FunctorKind::Exterior:
            if (tgt.kind == FunctorKind::Exterior) {
                if (src.arity == 2)
                    out = {true, true};
                else if (src.arity == 3)
                    out.closed_form = true;
                else if (rational)
                    out.closed_form = true;
            } else if (rational && (tgt.kind == FunctorKind::Tensor ||
                                    tgt.kind == FunctorKind::Symmetric ||
                                    tgt.kind == FunctorKind::Divided)) {
                out.closed_form = true;
            }
            break;
        default:
            break;
    }
    return out;
}

std::string supported_pairs() {
    return "supported Ext pairs (source -> target):\n"
           "  T^m      -> T^n                        closed form\n"
           "  T^m      -> Lambda^n                   closed form\n"
           "  T^m      -> Gamma^n                    closed form\n"
           "  T^m      -> S^n                        chain level\n"
           "  ab       -> Pa^n                       closed form + chain level\n"
           "  Pa^m     -> T^n                        closed form + chain level\n"
           "  Lambda^2 -> Lambda^n                   closed form + chain level\n"
           "  Lambda^3 -> Lambda^n                   closed form\n"
           "  Lambda^m -> T^n | Lambda^n | S^n | Gamma^n   closed form (rational only)\n"
           "  any pair with an arity-0 side          closed form\n";
}

ExtResult ext(const FunctorDescriptor& source, const FunctorDescriptor& target,
              const ExtOptions& opts) {
    if (opts.max_degree < 0) throw InvalidParameter("max_degree must be >= 0");
    const FunctorDescriptor src = source.canonical();
    const FunctorDescriptor tgt = canonical_target(src, target);

    ExtResult result;
    result.rational = opts.rational;

    if (is_constant(src) || is_constant(tgt)) {
        if (opts.method && *opts.method != ExtMethod::ClosedForm)
            throw InvalidParameter("pairs with an arity-0 side only have a closed form");
        result.method = ExtMethod::ClosedForm;
        result.value = constant_block_value(src, tgt);
        if (opts.rational) result.value = rationalize(result.value);
        return result;
    }

    const MethodAvailability avail = available_methods(source, target, opts.rational);
    if (!avail.closed_form && !avail.chain_level)
        throw UnsupportedPair("ext(" + source.name() + ", " + target.name() +
                              ") is not implemented\n" + supported_pairs());

    ExtMethod method = ExtMethod::Both;
    if (opts.method) {
        method = *opts.method;
        if (method == ExtMethod::ClosedForm && !avail.closed_form)
            throw InvalidParameter("ext(" + source.name() + ", " + target.name() +
                                   ") has no closed form; use the chain-level method");
        if (method == ExtMethod::ChainLevel && !avail.chain_level)
            throw InvalidParameter("ext(" + source.name() + ", " + target.name() +
                                   ") has no chain-level model; use the closed form");
        if (method == ExtMethod::Both && !(avail.closed_form && avail.chain_level))
            throw InvalidParameter("ext(" + source.name() + ", " + target.name() +
                                   ") supports only one method");
    } else if (!avail.closed_form || !avail.chain_level) {
        method = avail.closed_form ? ExtMethod::ClosedForm : ExtMethod::ChainLevel;
    }

    if (!opts.rational && src.kind == FunctorKind::Exterior && src.arity == 2 &&
        tgt.kind == FunctorKind::Exterior && tgt.arity == 1)
        result.warnings.push_back(lambda2_arity_one_warning);

    result.method = method;
    if (method == ExtMethod::ClosedForm) {
        result.value = compute_closed(src, tgt, opts, result.periodicity);
    } else if (method == ExtMethod::ChainLevel) {
        result.value = compute_chain(src, tgt, opts);
    } else {
        std::optional<std::string> periodicity;
        const GradedAbGroup closed = compute_closed(src, tgt, opts, periodicity);
        const GradedAbGroup chain = compute_chain(src, tgt, opts);
        const std::vector<std::string> mismatches = compare_degreewise(
            truncate(closed, opts.max_degree), truncate(chain, opts.max_degree));
        if (!mismatches.empty()) {
            std::string msg = "closed-form and chain-level values of ext(" +
                              source.name() + ", " + target.name() + ") disagree";
            for (const auto& line : mismatches) msg += "\n  " + line;
            throw CrossCheckMismatch(msg);
        }
        result.value = closed;
        result.periodicity = periodicity;
    }
    return result;
}

CrossCheckReport cross_check(const FunctorDescriptor& source,
                             const FunctorDescriptor& target, int max_degree) {
    const MethodAvailability avail = available_methods(source, target, false);
    if (!avail.closed_form && !avail.chain_level)
        throw UnsupportedPair("ext(" + source.name() + ", " + target.name() +
                              ") is not implemented\n" + supported_pairs());
    if (!avail.closed_form || !avail.chain_level)
        throw OnlyOneMethod("ext(" + source.name() + ", " + target.name() +
                            ") has a single method; nothing to check it against");

    ExtOptions opts;
    opts.max_degree = max_degree;
    opts.method = ExtMethod::ClosedForm;
    const ExtResult closed = ext(source, target, opts);
    opts.method = ExtMethod::ChainLevel;
    const ExtResult chain = ext(source, target, opts);

    CrossCheckReport report;
    report.pair = "ext(" + source.name() + ", " + target.name() + ")";
    report.max_degree = max_degree;
    report.closed_form = truncate(closed.value, max_degree);
    report.chain_level = truncate(chain.value, max_degree);
    report.mismatches = compare_degreewise(report.closed_form, report.chain_level);
    report.matched = report.mismatches.empty();
    return report;
}

namespace {

// "BSigma_infinity" extended by one BSigma factor per repeated part value.
std::string stabilizer_label(const Partition& parts) {
    std::string label = "BSigma_infinity";
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (j - i >= 2) label += " x BSigma_" + std::to_string(j - i);
        i = j;
    }
    return label;
}

}  // namespace

StableResult stable_cohomology(const FunctorDescriptor& f, StableMode mode,
                               int /*max_degree*/) {
    const FunctorDescriptor g = f.canonical();
    StableResult out;
    out.mode = mode;
    const int n = g.arity;

    switch (g.kind) {
        case FunctorKind::Passi:
            throw UnsupportedFunctor("stable cohomology is not implemented for " +
                                     f.name());
        case FunctorKind::Symmetric:
            if (mode == StableMode::Structural)
                throw UnsupportedFunctor(
                    "S^n has no structural decomposition here; rationally it agrees "
                    "with Gamma^n");
            // Rationally S^n and Gamma^n are isomorphic, and the latter is
            // trivial in positive arity beyond 1 (the arity <= 1 cases were
            // canonicalized onto the tensor column above).
            return out;
        case FunctorKind::Divided:
            if (mode == StableMode::Rational) return out;  // trivial for n >= 2
            out.summands.push_back(
                {n, "BSigma_infinity x BSigma_" + std::to_string(n), "sign"});
            return out;
        case FunctorKind::Tensor:
            if (mode == StableMode::Rational) {
                out.value = free_in_degree(bell(n), n);
                return out;
            }
            out.summands.assign(static_cast<std::size_t>(to_rank(bell(n))),
                                StableSummand{n, "BSigma_infinity", "trivial"});
            return out;
        case FunctorKind::Exterior:
            if (mode == StableMode::Rational) {
                out.value = free_in_degree(count_partitions(n), n);
                return out;
            }
            for (int d = 1; d <= n; ++d)
                for (const Partition& parts : partitions_into(n, d))
                    out.summands.push_back({n, stabilizer_label(parts), "trivial"});
            return out;
    }
    throw UnsupportedFunctor("stable cohomology is not implemented for " + f.name());
}

}  // namespace polyext
