#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "polydom/bounds.hpp"
#include "polydom/solver.hpp"

namespace polydom {

enum class ReportStatus : std::uint8_t { ConfirmsTheorem, TightensInterval, Inconclusive, Contradiction };

/// "ConfirmsTheorem", "TightensInterval", "Inconclusive", "CONTRADICTION".
std::string_view status_name(ReportStatus s);

struct ReportRecord {
    FamilyKind family;
    int n;
    Variant variant;
    /// Empty when the solver gave up.
    std::optional<int> gamma;
    std::optional<int> certificate_weight;
    TheoremBounds theorem;
    std::vector<BoundValue> general_bounds;
    std::vector<BoundAnnotation> annotations;
    ReportStatus status;
};

/// Gamma missing: Inconclusive. Outside [ceil(lower), upper]: Contradiction.
/// Inside an exact theorem: ConfirmsTheorem. Otherwise (including no
/// covering theorem): TightensInterval.
ReportStatus classify(std::optional<int> gamma, const TheoremBounds& theorem);

/// Collects bounds and the certificate weight for (family, n, variant) and
/// classifies gamma against them.
ReportRecord make_record(FamilyKind family, int n, Variant variant, std::optional<int> gamma);

nlohmann::json to_json(const ReportRecord& r);

}  // namespace polydom
