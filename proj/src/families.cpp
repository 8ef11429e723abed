#include "polydom/families.hpp"

#include <algorithm>
#include <charconv>

#include "polydom/errors.hpp"

namespace polydom {

std::string_view variant_tag(Variant v) { return v == Variant::SRD ? "srd" : "strd"; }

std::optional<Variant> parse_variant(std::string_view tag) {
    if (tag == "srd") return Variant::SRD;
    if (tag == "strd") return Variant::STRD;
    return std::nullopt;
}

char class_letter(VertexClass k) { return static_cast<char>('a' + static_cast<int>(k)); }

int rows(FamilyKind f) { return (f == FamilyKind::An || f == FamilyKind::Rn) ? 3 : 4; }

std::string_view family_tag(FamilyKind f) {
    switch (f) {
        case FamilyKind::An: return "An";
        case FamilyKind::Rn: return "Rn";
        case FamilyKind::Sn: return "Sn";
        case FamilyKind::Tn: return "Tn";
        case FamilyKind::Qn: return "Qn";
        case FamilyKind::TnDoublePrime: return "Tn2p";
    }
    return "?";
}

std::optional<FamilyKind> parse_family(std::string_view tag) {
    for (FamilyKind f : kAllFamilies)
        if (family_tag(f) == tag) return f;
    return std::nullopt;
}

std::string vertex_name(VertexId v) { return std::string(1, class_letter(v.klass)) + std::to_string(v.index); }

std::optional<VertexId> parse_vertex_name(std::string_view name) {
    if (name.size() < 2 || name[0] < 'a' || name[0] > 'd') return std::nullopt;
    std::string_view digits = name.substr(1);
    // no sign, no leading zeros except "0" itself
    if (digits.size() > 1 && digits[0] == '0') return std::nullopt;
    int index = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || index < 0) return std::nullopt;
    return VertexId{static_cast<VertexClass>(name[0] - 'a'), index};
}

PolytopeGraph::PolytopeGraph(FamilyKind family, int n) : family_(family), n_(n), rows_(polydom::rows(family)) {}

int PolytopeGraph::id(VertexId v) const {
    if (!contains(v)) throw DomainError("vertex " + vertex_name(v) + " is not in " + std::string(family_tag(family_)) +
                                       " with n=" + std::to_string(n_));
    return static_cast<int>(v.klass) * n_ + v.index;
}

int PolytopeGraph::id(VertexClass klass, long long index) const {
    long long r = index % n_;
    if (r < 0) r += n_;
    return id(VertexId{klass, static_cast<int>(r)});
}

VertexId PolytopeGraph::vertex(int id) const {
    if (id < 0 || id >= vertex_count()) throw DomainError("vertex id out of range: " + std::to_string(id));
    return VertexId{static_cast<VertexClass>(id / n_), id % n_};
}

bool PolytopeGraph::contains(VertexId v) const noexcept {
    return static_cast<int>(v.klass) < rows_ && v.index >= 0 && v.index < n_;
}

std::span<const int> PolytopeGraph::neighbors(int id) const {
    if (id < 0 || id >= vertex_count()) throw DomainError("vertex id out of range: " + std::to_string(id));
    return {adjacency_.data() + offsets_[id], adjacency_.data() + offsets_[id + 1]};
}

bool PolytopeGraph::adjacent(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

void PolytopeGraph::add_edge(int u, int v) { edges_.emplace_back(std::min(u, v), std::max(u, v)); }

void PolytopeGraph::finalize() {
    std::sort(edges_.begin(), edges_.end());
    std::vector<int> degree(vertex_count(), 0);
    for (auto [u, v] : edges_) {
        ++degree[u];
        ++degree[v];
    }
    offsets_.assign(vertex_count() + 1, 0);
    for (int i = 0; i < vertex_count(); ++i) offsets_[i + 1] = offsets_[i] + degree[i];
    adjacency_.assign(offsets_.back(), 0);
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges_) {
        adjacency_[fill[u]++] = v;
        adjacency_[fill[v]++] = u;
    }
    for (int i = 0; i < vertex_count(); ++i) std::sort(adjacency_.begin() + offsets_[i], adjacency_.begin() + offsets_[i + 1]);
}

PolytopeGraph PolytopeGraph::from_edges(FamilyKind family, int n, std::span<const std::pair<VertexId, VertexId>> edges) {
    if (n < 1) throw DomainError("column count must be positive");
    PolytopeGraph g(family, n);
    for (const auto& [a, b] : edges) {
        int u = g.id(a);
        int v = g.id(b);
        if (u == v) throw DomainError("self-loop at " + vertex_name(a));
        g.add_edge(u, v);
    }
    g.finalize();
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
        throw DomainError("duplicate edge " + vertex_name(g.vertex(dup->first)) + " " + vertex_name(g.vertex(dup->second)));
    return g;
}

namespace {

using K = VertexClass;

// One edge orbit: {(from, i), (to, i + shift)} for i = 0..n-1.
struct Orbit {
    K from;
    K to;
    int shift;
};

std::vector<Orbit> orbits(FamilyKind f) {
    // Shared by every family: the a- and b-cycles and the spokes a_i b_i, b_i c_i.
    std::vector<Orbit> o{{K::A, K::A, 1}, {K::B, K::B, 1}, {K::A, K::B, 0}, {K::B, K::C, 0}};
    switch (f) {
        case FamilyKind::An:
            o.insert(o.end(), {{K::C, K::C, 1}, {K::B, K::A, 1}, {K::C, K::B, 1}});
            break;
        case FamilyKind::Rn:
            o.insert(o.end(), {{K::C, K::C, 1}, {K::B, K::A, 1}});
            break;
        case FamilyKind::Sn:
            // R_n with a d-cycle attached through c_i d_i.
            o.insert(o.end(), {{K::C, K::C, 1}, {K::B, K::A, 1}, {K::D, K::D, 1}, {K::C, K::D, 0}});
            break;
        case FamilyKind::Tn:
            o.insert(o.end(), {{K::C, K::C, 1}, {K::D, K::D, 1}, {K::C, K::D, 0}, {K::B, K::A, 1}, {K::C, K::D, 1}});
            break;
        case FamilyKind::Qn:
            o.insert(o.end(), {{K::D, K::D, 1}, {K::C, K::D, 0}, {K::C, K::B, 1}});
            break;
        case FamilyKind::TnDoublePrime:
            o.insert(o.end(), {{K::D, K::D, 1}, {K::C, K::D, 0}, {K::C, K::B, 1}, {K::B, K::A, 1}});
            break;
    }
    return o;
}

}  // namespace

PolytopeGraph generate(FamilyKind family, int n) {
    if (n < kMinColumns)
        throw DomainError("n below minimum " + std::to_string(kMinColumns) + " (got " + std::to_string(n) + ")");
    PolytopeGraph g(family, n);
    for (const Orbit& o : orbits(family))
        for (int i = 0; i < n; ++i) g.add_edge(g.id(o.from, i), g.id(o.to, i + o.shift));
    g.finalize();
    // A repeated edge would mean two orbits collapsed under wrap-around.
    if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
        throw ConsistencyError("generator produced a duplicate edge");
    for (auto [u, v] : g.edges_)
        if (u == v) throw ConsistencyError("generator produced a self-loop");
    return g;
}

std::vector<VertexId> closed_neighborhood(const PolytopeGraph& g, VertexId v) {
    int id = g.id(v);
    std::vector<int> ids(g.neighbors(id).begin(), g.neighbors(id).end());
    ids.insert(std::upper_bound(ids.begin(), ids.end(), id), id);
    std::vector<VertexId> out;
    out.reserve(ids.size());
    for (int u : ids) out.push_back(g.vertex(u));
    return out;
}

bool has_band_structure(const PolytopeGraph& g) {
    const int n = g.n();
    for (auto [u, v] : g.edges()) {
        int d = (g.vertex(u).index - g.vertex(v).index + n) % n;
        if (d != 0 && d != 1 && d != n - 1) return false;
    }
    return true;
}

ClassCoefficients class_sum_coefficients(const PolytopeGraph& g, Variant variant) {
    ClassCoefficients out;
    out.rows = g.rows();
    for (int x = 0; x < g.rows(); ++x) {
        std::array<int, 4> first{};
        for (int i = 0; i < g.n(); ++i) {
            int id = g.id(VertexId{static_cast<K>(x), i});
            std::array<int, 4> count{};
            for (int u : g.neighbors(id)) ++count[static_cast<int>(g.vertex(u).klass)];
            if (variant == Variant::SRD) ++count[x];
            if (i == 0) {
                first = count;
            } else if (count != first) {
                throw ConsistencyError(std::string("class ") + class_letter(static_cast<K>(x)) +
                                       " has non-uniform neighbourhood counts at column " + std::to_string(i));
            }
        }
        out.entry[x] = first;
    }
    return out;
}

}  // namespace polydom
