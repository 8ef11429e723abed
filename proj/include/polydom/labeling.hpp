#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polydom/families.hpp"

namespace polydom {

enum class Label : std::int8_t { MinusOne = -1, One = 1, Two = 2 };

/// Labels in tie-breaking order (-1 < 1 < 2).
inline constexpr std::array<Label, 3> kLabels{Label::MinusOne, Label::One, Label::Two};

constexpr int value(Label l) noexcept { return static_cast<int>(l); }
std::optional<Label> label_from_int(int v) noexcept;

/// Total map from the vertices of one graph to {-1, 1, 2}, stored by dense id.
class LabelFunction {
public:
    explicit LabelFunction(const PolytopeGraph& g, Label fill = Label::One);
    LabelFunction(const PolytopeGraph& g, std::vector<Label> labels);

    FamilyKind family() const noexcept { return family_; }
    int n() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(labels_.size()); }

    Label operator[](int id) const { return labels_[id]; }
    Label at(const PolytopeGraph& g, VertexId v) const;
    void set(int id, Label l) { labels_[id] = l; }
    void set(const PolytopeGraph& g, VertexId v, Label l);

    std::span<const Label> labels() const noexcept { return labels_; }

    /// |V_1| + 2|V_2| - |V_-1|
    int weight() const noexcept;
    int count(Label l) const noexcept;

    /// Same (family, n) and vertex count as g.
    bool matches(const PolytopeGraph& g) const noexcept;

    friend bool operator==(const LabelFunction&, const LabelFunction&) = default;

private:
    FamilyKind family_;
    int n_;
    std::vector<Label> labels_;
};

inline int weight(const LabelFunction& f) { return f.weight(); }

/// Lexicographic comparison in canonical vertex order with -1 < 1 < 2.
bool lex_less(const LabelFunction& a, const LabelFunction& b);

enum class ViolationKind : std::uint8_t { SumTooLow, UncoveredMinusOne };

struct Violation {
    ViolationKind kind;
    VertexId vertex;
    /// Observed neighbourhood sum (SumTooLow) or number of 2-labelled neighbours (always 0 for UncoveredMinusOne).
    int observed;

    friend bool operator==(const Violation&, const Violation&) = default;
};

std::string describe(const Violation& v);

/// Sum of f over N[v] (SRD) or N(v) (STRD).
int neighborhood_sum(const PolytopeGraph& g, const LabelFunction& f, VertexId v, Variant variant);

/// Every violation of the sum and witness conditions, ordered by vertex then kind.
/// Throws DomainError if f belongs to another graph.
std::vector<Violation> validate(const PolytopeGraph& g, const LabelFunction& f, Variant variant);

/// Same checks, vertices visited in the given order; output follows that order.
std::vector<Violation> validate(const PolytopeGraph& g, const LabelFunction& f, Variant variant,
                                std::span<const int> visit_order);

/// Short-circuiting admissibility test with the semantics of validate().empty().
bool is_admissible(const PolytopeGraph& g, const LabelFunction& f, Variant variant);

}  // namespace polydom
