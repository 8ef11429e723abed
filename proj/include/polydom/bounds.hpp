#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "polydom/families.hpp"

namespace polydom {

using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when integral.
std::string to_string(const Rational& r);
std::int64_t ceil(const Rational& r);
std::int64_t floor(const Rational& r);

struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    int vertex_count = 0;
};

/// Validates 1 <= min <= max < vertex_count (an empty graph is accepted as-is).
DegreeProfile make_profile(int min_degree, int max_degree, int vertex_count);
DegreeProfile degree_profile(const PolytopeGraph& g);

enum class BoundKind : std::uint8_t { LowerGeneralSrd, LowerGeneralStrd, UpperGeneralStrd, TheoremLower, TheoremUpper };

struct BoundValue {
    BoundKind kind;
    bool applicable = false;
    std::optional<Rational> value;
    std::string reason;
};

/// General lower bound on the signed Roman domination number of any graph.
/// Exact rational, no rounding.
BoundValue lb_general_srd(const DegreeProfile& p);
/// General lower bound on the signed total Roman domination number, ceiling
/// applied. Only applicable when min degree < max degree.
BoundValue lb_general_strd(const DegreeProfile& p);
/// vertex_count - 1, applicable when min degree >= 3.
BoundValue ub_general_strd(const DegreeProfile& p);

/// Per-family interval proven for the combination.
struct TheoremBounds {
    bool applicable = false;
    std::string theorem;
    std::string reason;
    /// As stated, with integrality already applied where the statement applies it.
    Rational lower{0};
    Rational upper{0};
    /// ceil(lower); always sound because the domination number is an integer.
    std::int64_t lower_sharpened = 0;
    bool exact = false;
};

TheoremBounds theorem_bounds(FamilyKind family, Variant variant, int n);

/// Bound constants quoted per column n alongside the theorems, kept for
/// reporting only. `coefficient * n + offset`, optionally under a ceiling.
struct BoundAnnotation {
    BoundKind kind;
    Rational coefficient;
    std::int64_t offset = 0;
    bool ceiling = false;

    std::string text() const;
};

std::vector<BoundAnnotation> bound_annotations(FamilyKind family, Variant variant);

// ---- multiplier combinations of aggregated inequalities ----

enum class RowKind : std::uint8_t {
    ClassSum,     // sum over class X of the per-vertex sum condition: sum_Y coeff[X][Y] f(Y) >= n
    ClassSize,    // X_{-1} + X_1 + X_2 = n, any sign
    SumUpperCap,  // f(X) <= 2n
    SumLowerCap,  // f(X) >= -n
};

struct RowMultiplier {
    RowKind kind;
    VertexClass klass;
    Rational multiplier;
};

struct CombinationResult {
    /// Lower bound on the total weight per column: f(V) >= coefficient * n.
    Rational coefficient;
    /// Common multiple of f(V) dominated by the combined left side.
    Rational scale;
    /// Left side equals scale * (-1, 1, 2) in every class (plain telescoping).
    bool exact = false;
};

/// Raised when the combined rows do not bound a positive multiple of the total weight.
class CombinationError : public std::runtime_error {
public:
    CombinationError(const std::string& what, std::vector<std::array<Rational, 3>> residual)
        : std::runtime_error(what), residual_(std::move(residual)) {}

    /// Combined coefficients per class on (X_{-1}, X_1, X_2).
    const std::vector<std::array<Rational, 3>>& residual() const noexcept { return residual_; }

private:
    std::vector<std::array<Rational, 3>> residual_;
};

/// Combines class rows (derived from the graph's class_sum_coefficients) with
/// the given multipliers and derives the implied lower bound on f(V)/n.
///
/// Works over the label counts X_{-1}, X_1, X_2 of every class. The combined
/// left side L must satisfy s * (-1, 1, 2) >= L componentwise for a common
/// s > 0; since counts are nonnegative this gives s * f(V) >= L.x >= c * n.
/// When L is exactly s times the weight vector this is the usual telescoping.
CombinationResult verify_multiplier_combination(const PolytopeGraph& g, Variant variant,
                                                std::span<const RowMultiplier> rows);
CombinationResult verify_multiplier_combination(FamilyKind family, Variant variant,
                                                std::span<const RowMultiplier> rows);

struct BoundCombination {
    FamilyKind family;
    Variant variant;
    const char* theorem;
    std::vector<RowMultiplier> rows;
    Rational expected;
};

/// The lower-bound combinations used for each covered (family, variant).
const std::vector<BoundCombination>& lower_bound_combinations();

}  // namespace polydom
