#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polydom {

/// Closed (SRD) or open (STRD) neighbourhood semantics for the sum condition.
enum class Variant : std::uint8_t { SRD, STRD };

std::string_view variant_tag(Variant v);  // "srd" / "strd"
std::optional<Variant> parse_variant(std::string_view tag);

enum class VertexClass : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

char class_letter(VertexClass k);

enum class FamilyKind : std::uint8_t { An, Rn, Sn, Tn, Qn, TnDoublePrime };

inline constexpr std::array<FamilyKind, 6> kAllFamilies{FamilyKind::An, FamilyKind::Rn, FamilyKind::Sn,
                                                        FamilyKind::Tn, FamilyKind::Qn, FamilyKind::TnDoublePrime};

/// Smallest column count accepted by the generators.
inline constexpr int kMinColumns = 5;

/// Number of vertex classes (rows) of a family: 3 or 4.
int rows(FamilyKind f);

/// Short tag used on the command line and in file headers: An, Rn, Sn, Tn, Qn, Tn2p.
std::string_view family_tag(FamilyKind f);
std::optional<FamilyKind> parse_family(std::string_view tag);

struct VertexId {
    VertexClass klass{VertexClass::A};
    int index{0};

    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// "a0", "b12", ...
std::string vertex_name(VertexId v);
std::optional<VertexId> parse_vertex_name(std::string_view name);

/// Undirected simple graph on rows x n vertices, class-major dense ids.
///
/// Vertex (k, i) has dense id k*n + i, so iterating ids 0..V-1 visits
/// vertices in canonical order (class A < B < C < D, then index).
class PolytopeGraph {
public:
    using Edge = std::pair<int, int>;

    /// Builds a graph from explicit edges. Rejects self-loops, duplicate
    /// edges and vertices outside the family's vertex set. No structural
    /// invariant beyond simplicity is promised.
    static PolytopeGraph from_edges(FamilyKind family, int n, std::span<const std::pair<VertexId, VertexId>> edges);

    FamilyKind family() const noexcept { return family_; }
    int n() const noexcept { return n_; }
    int rows() const noexcept { return rows_; }
    int vertex_count() const noexcept { return rows_ * n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Dense id of a vertex; throws DomainError if it is not in the graph.
    int id(VertexId v) const;
    /// Dense id of (klass, index mod n).
    int id(VertexClass klass, long long index) const;
    VertexId vertex(int id) const;
    bool contains(VertexId v) const noexcept;

    std::span<const int> neighbors(int id) const;
    int degree(int id) const { return static_cast<int>(neighbors(id).size()); }
    bool adjacent(int u, int v) const;

    /// Edges as (u, v) with u < v, sorted.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    friend bool operator==(const PolytopeGraph& a, const PolytopeGraph& b) {
        return a.family_ == b.family_ && a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    PolytopeGraph(FamilyKind family, int n);
    void add_edge(int u, int v);
    void finalize();

    friend PolytopeGraph generate(FamilyKind family, int n);

    FamilyKind family_;
    int n_;
    int rows_;
    std::vector<Edge> edges_;
    std::vector<int> offsets_;
    std::vector<int> adjacency_;
};

/// Constructs the named convex-polytope family on n columns (n >= 5).
PolytopeGraph generate(FamilyKind family, int n);

/// N[v] in canonical order.
std::vector<VertexId> closed_neighborhood(const PolytopeGraph& g, VertexId v);

/// True when every edge joins columns at cyclic distance <= 1.
bool has_band_structure(const PolytopeGraph& g);

/// entry[X][Y] = number of class-Y vertices in the (closed for SRD, open for
/// STRD) neighbourhood of any class-X vertex. Summing the per-vertex sum
/// condition over class X gives sum_Y entry[X][Y] * f(Y) >= n.
struct ClassCoefficients {
    int rows = 0;
    std::array<std::array<int, 4>, 4> entry{};

    std::span<const int> row(VertexClass k) const { return {entry[static_cast<int>(k)].data(), std::size_t(rows)}; }
};

/// Throws ConsistencyError if some class is not uniform across its columns.
ClassCoefficients class_sum_coefficients(const PolytopeGraph& g, Variant variant);

}  // namespace polydom
