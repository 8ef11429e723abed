#include "polydom/bounds.hpp"

#include <algorithm>

#include "polydom/certificates.hpp"
#include "polydom/errors.hpp"

namespace polydom {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

std::int64_t ceil(const Rational& r) { return -floor(-r); }

DegreeProfile make_profile(int min_degree, int max_degree, int vertex_count) {
    if (vertex_count < 0) throw DomainError("negative vertex count");
    if (vertex_count > 0 && (min_degree < 1 || min_degree > max_degree || max_degree >= vertex_count))
        throw DomainError("degree profile must satisfy 1 <= min <= max < vertex count");
    return {min_degree, max_degree, vertex_count};
}

DegreeProfile degree_profile(const PolytopeGraph& g) {
    int lo = g.vertex_count(), hi = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        lo = std::min(lo, g.degree(v));
        hi = std::max(hi, g.degree(v));
    }
    return make_profile(lo, hi, g.vertex_count());
}

BoundValue lb_general_srd(const DegreeProfile& p) {
    const std::int64_t hi = p.max_degree, lo = p.min_degree;
    Rational factor(-2 * hi * hi + 2 * hi * lo + hi + 2 * lo + 3, (hi + 1) * (2 * hi + lo + 3));
    return {BoundKind::LowerGeneralSrd, true, factor * p.vertex_count, "holds for every graph"};
}

BoundValue lb_general_strd(const DegreeProfile& p) {
    if (p.min_degree >= p.max_degree) return {BoundKind::LowerGeneralStrd, false, std::nullopt, "requires min degree < max degree"};
    const std::int64_t hi = p.max_degree, lo = p.min_degree;
    Rational raw((2 * lo + 3 - 2 * hi) * p.vertex_count, 2 * hi + lo);
    return {BoundKind::LowerGeneralStrd, true, Rational(ceil(raw)), "min degree < max degree"};
}

BoundValue ub_general_strd(const DegreeProfile& p) {
    if (p.min_degree < 3) return {BoundKind::UpperGeneralStrd, false, std::nullopt, "requires min degree >= 3"};
    return {BoundKind::UpperGeneralStrd, true, Rational(p.vertex_count - 1), "min degree >= 3"};
}

namespace {

TheoremBounds make_bounds(const char* theorem, Rational lower, Rational upper) {
    TheoremBounds b;
    b.applicable = true;
    b.theorem = theorem;
    b.lower = lower;
    b.upper = upper;
    b.lower_sharpened = ceil(lower);
    b.exact = lower == upper;
    return b;
}

TheoremBounds not_applicable(std::string reason) {
    TheoremBounds b;
    b.reason = std::move(reason);
    return b;
}

}  // namespace

TheoremBounds theorem_bounds(FamilyKind family, Variant variant, int n) {
    if (n < kMinColumns) return not_applicable("n below " + std::to_string(kMinColumns));
    const std::int64_t m = n;
    if (variant == Variant::SRD) {
        switch (family) {
            case FamilyKind::An:
                return make_bounds("Thm1", 0, 0);
            case FamilyKind::Rn: {
                const std::int64_t k = m / 3;
                return make_bounds("Thm2", Rational(ceil(Rational(2 * m, 3))), m % 3 == 0 ? 2 * k : 2 * k + 2);
            }
            case FamilyKind::Tn:
                return make_bounds("Thm5", Rational(3 * m, 4), m);
            case FamilyKind::Qn:
                if (n < 12) return not_applicable("stated for n >= 12");
                return make_bounds("Thm6", Rational(2 * m, 3), m);
            case FamilyKind::TnDoublePrime:
                return make_bounds("Thm7", Rational(7 * m, 15), tn2p_upper(n));
            case FamilyKind::Sn:
                break;
        }
    } else {
        switch (family) {
            case FamilyKind::Sn:
                return make_bounds("Thm3", m, m);
            case FamilyKind::Tn:
                return m % 2 == 0 ? make_bounds("Thm4", m, m) : make_bounds("Thm4", m, m + 1);
            default:
                break;
        }
    }
    return not_applicable("no theorem covers " + std::string(family_tag(family)) + " " + std::string(variant_tag(variant)));
}

std::string BoundAnnotation::text() const {
    std::string body = to_string(coefficient) + " n";
    if (offset > 0) body += " + " + std::to_string(offset);
    if (offset < 0) body += " - " + std::to_string(-offset);
    return ceiling ? "ceil(" + body + ")" : body;
}

std::vector<BoundAnnotation> bound_annotations(FamilyKind family, Variant variant) {
    using BK = BoundKind;
    if (variant == Variant::SRD) {
        switch (family) {
            case FamilyKind::An: return {{BK::LowerGeneralSrd, Rational(-3, 19)}};
            case FamilyKind::Rn: return {{BK::LowerGeneralSrd, Rational(-3, 16)}};
            case FamilyKind::Tn: return {{BK::LowerGeneralSrd, Rational(4, 17)}};
            case FamilyKind::Qn: return {{BK::LowerGeneralSrd, Rational(-1, 4)}};
            case FamilyKind::TnDoublePrime: return {{BK::LowerGeneralSrd, Rational(-2, 3)}};
            case FamilyKind::Sn: return {};
        }
    }
    switch (family) {
        case FamilyKind::Sn:
            return {{BK::LowerGeneralStrd, Rational(-4, 13), 0, true}, {BK::UpperGeneralStrd, Rational(4), -1}};
        case FamilyKind::Tn:
            return {{BK::LowerGeneralStrd, Rational(2, 7), 0, true}, {BK::UpperGeneralStrd, Rational(4), -1}};
        default:
            return {};
    }
}

CombinationResult verify_multiplier_combination(const PolytopeGraph& g, Variant variant,
                                                std::span<const RowMultiplier> rows) {
    const ClassCoefficients coeff = class_sum_coefficients(g, variant);
    const int classes = g.rows();
    constexpr std::array<int, 3> kWeight{-1, 1, 2};

    std::vector<std::array<Rational, 3>> lhs(classes, {Rational(0), Rational(0), Rational(0)});
    Rational rhs(0);
    for (const RowMultiplier& row : rows) {
        const int x = static_cast<int>(row.klass);
        if (x >= classes) throw DomainError(std::string("class ") + class_letter(row.klass) + " not in this family");
        const Rational lambda = row.multiplier;
        if (row.kind != RowKind::ClassSize && lambda < 0)
            throw DomainError("inequality rows need nonnegative multipliers");
        switch (row.kind) {
            case RowKind::ClassSum:
                for (int y = 0; y < classes; ++y)
                    for (int j = 0; j < 3; ++j) lhs[y][j] += lambda * coeff.entry[x][y] * kWeight[j];
                rhs += lambda;
                break;
            case RowKind::ClassSize:
                for (int j = 0; j < 3; ++j) lhs[x][j] += lambda;
                rhs += lambda;
                break;
            case RowKind::SumUpperCap:
                for (int j = 0; j < 3; ++j) lhs[x][j] -= lambda * kWeight[j];
                rhs -= 2 * lambda;
                break;
            case RowKind::SumLowerCap:
                for (int j = 0; j < 3; ++j) lhs[x][j] += lambda * kWeight[j];
                rhs -= lambda;
                break;
        }
    }

    // s * (-1, 1, 2) >= L  <=>  s <= -L[-1], s >= L[1], s >= L[2] / 2
    std::optional<Rational> lo, hi;
    for (const auto& l : lhs) {
        Rational need = std::max(l[1], l[2] / 2);
        lo = lo ? std::max(*lo, need) : need;
        hi = hi ? std::min(*hi, -l[0]) : -l[0];
    }
    auto fail = [&](const std::string& why) -> CombinationError {
        std::string msg = "combination does not telescope (" + why + "); residual:";
        for (int x = 0; x < classes; ++x)
            msg += std::string(" ") + class_letter(static_cast<VertexClass>(x)) + "=(" + to_string(lhs[x][0]) + "," +
                   to_string(lhs[x][1]) + "," + to_string(lhs[x][2]) + ")";
        return CombinationError(msg, lhs);
    };
    if (!lo || *hi <= 0 || *lo > *hi) throw fail("no common positive scale");
    Rational scale;
    if (rhs > 0) {
        if (*lo <= 0) throw fail("positive bound with vanishing scale");
        scale = *lo;
    } else {
        scale = *hi;
    }
    bool exact = true;
    for (const auto& l : lhs)
        for (int j = 0; j < 3; ++j) exact = exact && l[j] == scale * kWeight[j];
    return {rhs / scale, scale, exact};
}

CombinationResult verify_multiplier_combination(FamilyKind family, Variant variant,
                                                std::span<const RowMultiplier> rows) {
    return verify_multiplier_combination(generate(family, kMinColumns), variant, rows);
}

const std::vector<BoundCombination>& lower_bound_combinations() {
    using K = VertexClass;
    using R = RowKind;
    static const std::vector<BoundCombination> kCombinations{
        {FamilyKind::An, Variant::SRD, "Thm1",
         {{R::ClassSum, K::A, Rational(1, 3)}, {R::ClassSum, K::C, Rational(1, 3)}, {R::SumUpperCap, K::B, Rational(1, 3)}},
         Rational(0)},
        {FamilyKind::Rn, Variant::SRD, "Thm2",
         {{R::ClassSum, K::A, Rational(1, 3)}, {R::ClassSum, K::C, Rational(1, 3)}},
         Rational(2, 3)},
        {FamilyKind::Sn, Variant::STRD, "Thm3",
         {{R::ClassSum, K::B, Rational(1, 2)}, {R::ClassSum, K::D, Rational(1, 2)}},
         Rational(1)},
        {FamilyKind::Tn, Variant::STRD, "Thm4",
         {{R::ClassSum, K::A, Rational(1, 2)}, {R::ClassSum, K::D, Rational(1, 2)}},
         Rational(1)},
        {FamilyKind::Tn, Variant::SRD, "Thm5",
         {{R::ClassSum, K::A, Rational(1, 4)},
          {R::ClassSum, K::B, Rational(1, 8)},
          {R::ClassSum, K::C, Rational(1, 8)},
          {R::ClassSum, K::D, Rational(1, 4)}},
         Rational(3, 4)},
        {FamilyKind::Qn, Variant::SRD, "Thm6",
         {{R::ClassSize, K::C, Rational(-1, 6)},
          {R::ClassSum, K::A, Rational(1, 4)},
          {R::ClassSum, K::B, Rational(1, 4)},
          {R::ClassSum, K::C, Rational(0)},
          {R::ClassSum, K::D, Rational(1, 3)}},
         Rational(2, 3)},
        {FamilyKind::TnDoublePrime, Variant::SRD, "Thm7",
         {{R::ClassSize, K::C, Rational(-4, 15)},
          {R::ClassSum, K::A, Rational(1, 5)},
          {R::ClassSum, K::B, Rational(1, 5)},
          {R::ClassSum, K::C, Rational(0)},
          {R::ClassSum, K::D, Rational(1, 3)}},
         Rational(7, 15)},
    };
    return kCombinations;
}

}  // namespace polydom
