#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyext/abelian.hpp"

namespace polyext {

// The five coefficient functors the evaluator knows about, each precomposed
// with abelianization: tensor powers T^n, exterior powers Lambda^n, divided
// powers Gamma^n, symmetric powers S^n, and the augmentation-ideal quotients
// Pa_n of the group ring. "ab" itself is Tensor with arity 1.
enum class FunctorKind { Tensor, Exterior, Divided, Symmetric, Passi };

struct FunctorDescriptor {
    FunctorKind kind;
    int arity;

    // Validates arity >= 0 and, for Passi, arity >= 1.
    FunctorDescriptor(FunctorKind kind, int arity);

    static FunctorDescriptor ab() { return {FunctorKind::Tensor, 1}; }

    // Arity 0 of every power functor is the constant functor Z, and arity 1
    // is the abelianization itself, so both collapse onto the tensor column
    // and every dispatch path sees one canonical name. Passi functors are
    // deliberately left alone: Pa_1 is isomorphic to ab but is evaluated
    // through its own model, and the agreement of the two code paths is one
    // of the library's standing cross-checks.
    FunctorDescriptor canonical() const;

    // "ab", "T^3", "Lambda^2", "Gamma^2", "S^4", "Pa^2".
    std::string name() const;

    bool operator==(const FunctorDescriptor& rhs) const = default;
};

enum class ExtMethod { ClosedForm, ChainLevel, Both };

// "closed" / "chain" / "both" -- the tokens used by the CLI and JSON output.
std::string to_string(ExtMethod method);

struct ExtOptions {
    bool rational = false;
    // Reporting bound for values with infinite torsion families; finite
    // values are always returned in full.
    int max_degree = 8;
    // Unset means "use every method the pair supports" (and compare them
    // degreewise when there are two).
    std::optional<ExtMethod> method;
};

struct ExtResult {
    GradedAbGroup value;
    ExtMethod method = ExtMethod::ClosedForm;
    bool rational = false;
    // Description of the repeating torsion pattern that continues above the
    // truncation bound, when the value has one.
    std::optional<std::string> periodicity;
    std::vector<std::string> warnings;
};

// Which evaluation routes exist for a pair. Both flags false means the pair
// is not supported at all.
struct MethodAvailability {
    bool closed_form = false;
    bool chain_level = false;
};

MethodAvailability available_methods(const FunctorDescriptor& source,
                                     const FunctorDescriptor& target, bool rational);

// Multi-line listing of the supported (source, target) grid; embedded in
// UnsupportedPair messages so a failed query documents the alternatives.
std::string supported_pairs();

// Ext^*(source, target) in the category of functors from finitely generated
// free groups to abelian groups, graded cohomologically. Values are
// isomorphism types of graded abelian groups. Throws UnsupportedPair when no
// method covers the pair, InvalidParameter when an explicitly requested
// method does not apply to it.
ExtResult ext(const FunctorDescriptor& source, const FunctorDescriptor& target,
              const ExtOptions& opts = {});

struct CrossCheckReport {
    std::string pair;  // "ext(Lambda^2, Lambda^4)"
    int max_degree;
    GradedAbGroup closed_form;
    GradedAbGroup chain_level;
    bool matched;
    // One line per disagreeing degree; empty when matched.
    std::vector<std::string> mismatches;
};

// Evaluates the pair by closed form and by chain-level model independently
// and compares degreewise through max_degree. Throws OnlyOneMethod when the
// pair does not have two routes.
CrossCheckReport cross_check(const FunctorDescriptor& source,
                             const FunctorDescriptor& target, int max_degree);

enum class StableMode { Rational, Structural };

// One symbolic summand H^{*-shift}(space; twist) of a stable value.
struct StableSummand {
    int shift;
    std::string space;  // "BSigma_infinity" or "BSigma_infinity x BSigma_3 x ..."
    std::string twist;  // "trivial" or "sign"

    bool operator==(const StableSummand& rhs) const = default;
};

struct StableResult {
    StableMode mode = StableMode::Rational;
    // Rational mode: ranks are Q-dimensions, concentrated in one degree.
    GradedAbGroup value;
    // Structural mode: the list of summands, in a deterministic order.
    std::vector<StableSummand> summands;
};

// Stable cohomology of the automorphism groups of free groups with
// coefficients in the given functor. Rational mode evaluates the graded
// Q-dimensions; structural mode returns the symbolic summand decomposition
// without evaluating the cohomology of the infinite symmetric group.
// max_degree is accepted for interface uniformity and unused: every
// supported value is concentrated in a single degree.
StableResult stable_cohomology(const FunctorDescriptor& f, StableMode mode,
                               int max_degree = 8);

}  // namespace polyext
