#include "polydom/report.hpp"

#include "polydom/certificates.hpp"
#include "polydom/errors.hpp"

namespace polydom {

namespace {

std::string_view kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::LowerGeneralSrd: return "lower_general_srd";
        case BoundKind::LowerGeneralStrd: return "lower_general_strd";
        case BoundKind::UpperGeneralStrd: return "upper_general_strd";
        case BoundKind::TheoremLower: return "theorem_lower";
        case BoundKind::TheoremUpper: return "theorem_upper";
    }
    return "?";
}

nlohmann::json rational_json(const Rational& r) {
    if (r.denominator() == 1) return r.numerator();
    return to_string(r);
}

}  // namespace

std::string_view status_name(ReportStatus s) {
    switch (s) {
        case ReportStatus::ConfirmsTheorem: return "ConfirmsTheorem";
        case ReportStatus::TightensInterval: return "TightensInterval";
        case ReportStatus::Inconclusive: return "Inconclusive";
        case ReportStatus::Contradiction: return "CONTRADICTION";
    }
    return "?";
}

ReportStatus classify(std::optional<int> gamma, const TheoremBounds& theorem) {
    if (!gamma) return ReportStatus::Inconclusive;
    if (!theorem.applicable) return ReportStatus::TightensInterval;
    if (*gamma < theorem.lower_sharpened || Rational(*gamma) > theorem.upper) return ReportStatus::Contradiction;
    return theorem.exact ? ReportStatus::ConfirmsTheorem : ReportStatus::TightensInterval;
}

ReportRecord make_record(FamilyKind family, int n, Variant variant, std::optional<int> gamma) {
    ReportRecord r{family, n, variant, gamma, std::nullopt, theorem_bounds(family, variant, n), {}, bound_annotations(family, variant),
                   ReportStatus::Inconclusive};
    try {
        if (auto cert = certificate_for(family, variant, n)) r.certificate_weight = cert->claimed_weight;
    } catch (const DomainError&) {
    }
    const DegreeProfile p = degree_profile(generate(family, n));
    if (variant == Variant::SRD) {
        r.general_bounds.push_back(lb_general_srd(p));
    } else {
        r.general_bounds.push_back(lb_general_strd(p));
        r.general_bounds.push_back(ub_general_strd(p));
    }
    r.status = classify(gamma, r.theorem);
    return r;
}

nlohmann::json to_json(const ReportRecord& r) {
    using nlohmann::json;
    json general = json::object();
    for (const BoundValue& b : r.general_bounds) {
        json entry{{"applicable", b.applicable},
                   {"reason", b.reason},
                   {"value", b.value ? rational_json(*b.value) : json(nullptr)},
                   {"quoted", nullptr}};
        for (const BoundAnnotation& a : r.annotations) {
            if (a.kind != b.kind) continue;
            Rational q = a.coefficient * r.n + a.offset;
            entry["quoted"] = json{{"formula", a.text()}, {"value", rational_json(a.ceiling ? Rational(ceil(q)) : q)}};
        }
        general[std::string(kind_name(b.kind))] = std::move(entry);
    }
    json lower = nullptr, upper = nullptr;
    if (r.theorem.applicable) {
        lower = json{{"source", r.theorem.theorem}, {"value", rational_json(r.theorem.lower)}, {"sharpened", r.theorem.lower_sharpened}};
        upper = json{{"source", r.theorem.theorem}, {"value", rational_json(r.theorem.upper)}};
    }
    return json{{"family", std::string(family_tag(r.family))},
                {"n", r.n},
                {"variant", std::string(variant_tag(r.variant))},
                {"gamma", r.gamma ? json(*r.gamma) : json("inconclusive")},
                {"certificate_weight", r.certificate_weight ? json(*r.certificate_weight) : json(nullptr)},
                {"theorem_lower", lower},
                {"theorem_upper", upper},
                {"general_bounds", general},
                {"status", std::string(status_name(r.status))}};
}

}  // namespace polydom
