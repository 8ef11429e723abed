#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "polydom/labeling.hpp"

namespace polydom {

enum class SolveMethod : std::uint8_t { BruteForce, ProfileDP };
enum class SolveStatus : std::uint8_t { Solved, Inconclusive };

std::string_view method_name(SolveMethod m);

struct SolveStats {
    /// Backtracking: label assignments tried. Profile DP: column transitions evaluated.
    std::uint64_t nodes = 0;
    /// Profile DP: partial solutions kept across all columns and seeds. Unused by brute force.
    std::uint64_t states = 0;
    /// Profile DP: boundary seed groups actually expanded.
    std::uint64_t seeds = 0;

    friend bool operator==(const SolveStats&, const SolveStats&) = default;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Inconclusive;
    /// Set iff status == Solved.
    std::optional<int> gamma;
    /// Lexicographically smallest optimal labeling (canonical order, -1 < 1 < 2).
    std::optional<LabelFunction> witness;
    SolveMethod method = SolveMethod::BruteForce;
    SolveStats stats;
    std::chrono::nanoseconds elapsed{0};

    bool solved() const noexcept { return status == SolveStatus::Solved; }
};

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000ULL;

/// Exhaustive backtracking over all 3^|V| labelings in canonical vertex order,
/// with admissible pruning. Exceeding the node budget yields Inconclusive.
SolveResult solve_bruteforce(const PolytopeGraph& g, Variant variant, std::uint64_t node_budget = kDefaultNodeBudget);

struct ProfileDpOptions {
    /// Worker threads over boundary seeds; 0 means hardware concurrency.
    unsigned threads = 1;
    /// Use the matching certificate (when one exists and validates on g) as an initial upper bound.
    bool use_certificate_bound = true;
};

/// Exact optimum by a column-by-column transfer computation with cyclic
/// closure. Requires the band structure and a column-periodic neighbourhood
/// pattern; throws ContractError otherwise.
SolveResult solve_profile_dp(const PolytopeGraph& g, Variant variant, const ProfileDpOptions& options = {});

enum class Agreement : std::uint8_t { Agree, Disagree, Skipped };

struct CrossValidationRow {
    int n;
    std::optional<int> gamma_bruteforce;
    std::optional<int> gamma_dp;
    Agreement agreement;
};

struct CrossValidationReport {
    FamilyKind family;
    Variant variant;
    std::vector<CrossValidationRow> rows;

    int disagreements() const;
};

/// Runs both solvers for every n in [lo, hi].
CrossValidationReport cross_validate(FamilyKind family, Variant variant, int lo, int hi,
                                     std::uint64_t node_budget = kDefaultNodeBudget,
                                     const ProfileDpOptions& dp_options = {});

}  // namespace polydom
