#include "polydom/labeling.hpp"

#include <algorithm>
#include <numeric>

#include "polydom/errors.hpp"

namespace polydom {

std::optional<Label> label_from_int(int v) noexcept {
    switch (v) {
        case -1: return Label::MinusOne;
        case 1: return Label::One;
        case 2: return Label::Two;
        default: return std::nullopt;
    }
}

LabelFunction::LabelFunction(const PolytopeGraph& g, Label fill)
    : family_(g.family()), n_(g.n()), labels_(static_cast<std::size_t>(g.vertex_count()), fill) {}

LabelFunction::LabelFunction(const PolytopeGraph& g, std::vector<Label> labels)
    : family_(g.family()), n_(g.n()), labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) != g.vertex_count())
        throw DomainError("labeling has " + std::to_string(labels_.size()) + " entries, graph has " +
                          std::to_string(g.vertex_count()) + " vertices");
}

Label LabelFunction::at(const PolytopeGraph& g, VertexId v) const { return labels_[g.id(v)]; }

void LabelFunction::set(const PolytopeGraph& g, VertexId v, Label l) { labels_[g.id(v)] = l; }

int LabelFunction::weight() const noexcept {
    return std::accumulate(labels_.begin(), labels_.end(), 0, [](int acc, Label l) { return acc + value(l); });
}

int LabelFunction::count(Label l) const noexcept {
    return static_cast<int>(std::count(labels_.begin(), labels_.end(), l));
}

bool LabelFunction::matches(const PolytopeGraph& g) const noexcept {
    return family_ == g.family() && n_ == g.n() && size() == g.vertex_count();
}

bool lex_less(const LabelFunction& a, const LabelFunction& b) {
    return std::lexicographical_compare(a.labels().begin(), a.labels().end(), b.labels().begin(), b.labels().end(),
                                        [](Label x, Label y) { return value(x) < value(y); });
}

std::string describe(const Violation& v) {
    if (v.kind == ViolationKind::SumTooLow)
        return "SumTooLow " + vertex_name(v.vertex) + " sum=" + std::to_string(v.observed);
    return "UncoveredMinusOne " + vertex_name(v.vertex) + " no neighbour labelled 2";
}

namespace {

void require_match(const PolytopeGraph& g, const LabelFunction& f) {
    if (!f.matches(g))
        throw DomainError("labeling is for " + std::string(family_tag(f.family())) + " n=" + std::to_string(f.n()) +
                          ", graph is " + std::string(family_tag(g.family())) + " n=" + std::to_string(g.n()));
}

int sum_at(const PolytopeGraph& g, const LabelFunction& f, int id, Variant variant) {
    int s = variant == Variant::SRD ? value(f[id]) : 0;
    for (int u : g.neighbors(id)) s += value(f[u]);
    return s;
}

bool witnessed(const PolytopeGraph& g, const LabelFunction& f, int id) {
    auto nb = g.neighbors(id);
    return std::any_of(nb.begin(), nb.end(), [&](int u) { return f[u] == Label::Two; });
}

void check_vertex(const PolytopeGraph& g, const LabelFunction& f, Variant variant, int id, std::vector<Violation>& out) {
    int s = sum_at(g, f, id, variant);
    if (s < 1) out.push_back({ViolationKind::SumTooLow, g.vertex(id), s});
    if (f[id] == Label::MinusOne && !witnessed(g, f, id))
        out.push_back({ViolationKind::UncoveredMinusOne, g.vertex(id), 0});
}

}  // namespace

int neighborhood_sum(const PolytopeGraph& g, const LabelFunction& f, VertexId v, Variant variant) {
    require_match(g, f);
    return sum_at(g, f, g.id(v), variant);
}

std::vector<Violation> validate(const PolytopeGraph& g, const LabelFunction& f, Variant variant) {
    require_match(g, f);
    std::vector<Violation> out;
    for (int id = 0; id < g.vertex_count(); ++id) check_vertex(g, f, variant, id, out);
    return out;
}

std::vector<Violation> validate(const PolytopeGraph& g, const LabelFunction& f, Variant variant,
                                std::span<const int> visit_order) {
    require_match(g, f);
    std::vector<Violation> out;
    for (int id : visit_order) {
        if (id < 0 || id >= g.vertex_count()) throw DomainError("visit order names an unknown vertex id");
        check_vertex(g, f, variant, id, out);
    }
    return out;
}

bool is_admissible(const PolytopeGraph& g, const LabelFunction& f, Variant variant) {
    require_match(g, f);
    for (int id = 0; id < g.vertex_count(); ++id) {
        if (sum_at(g, f, id, variant) < 1) return false;
        if (f[id] == Label::MinusOne && !witnessed(g, f, id)) return false;
    }
    return true;
}

}  // namespace polydom
