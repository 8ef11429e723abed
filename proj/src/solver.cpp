#include <algorithm>

#include "polydom/solver.hpp"

namespace polydom {

std::string_view method_name(SolveMethod m) { return m == SolveMethod::BruteForce ? "bruteforce" : "dp"; }

int CrossValidationReport::disagreements() const {
    return static_cast<int>(
        std::count_if(rows.begin(), rows.end(), [](const CrossValidationRow& r) { return r.agreement == Agreement::Disagree; }));
}

CrossValidationReport cross_validate(FamilyKind family, Variant variant, int lo, int hi, std::uint64_t node_budget,
                                     const ProfileDpOptions& dp_options) {
    CrossValidationReport report{family, variant, {}};
    for (int n = lo; n <= hi; ++n) {
        const PolytopeGraph g = generate(family, n);
        const SolveResult dp = solve_profile_dp(g, variant, dp_options);
        const SolveResult bf = solve_bruteforce(g, variant, node_budget);
        CrossValidationRow row{n, bf.gamma, dp.gamma, Agreement::Skipped};
        if (bf.solved() && dp.solved()) row.agreement = *bf.gamma == *dp.gamma ? Agreement::Agree : Agreement::Disagree;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace polydom
