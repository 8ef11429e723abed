#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "polydom/families.hpp"
#include "polydom/labeling.hpp"

namespace polydom {

/// `# family=<tag> n=<n>` then one `<u> <v>` line per edge, u before v in
/// canonical order, lines in canonical (u, v) order, LF endings.
std::string write_edgelist(const PolytopeGraph& g);

/// Undirected DOT graph with the same vertex names.
std::string write_dot(const PolytopeGraph& g);

/// Parses an edge list. Endpoints may appear in either order and lines in
/// any order; blank lines and `#` comments after the header are skipped.
/// Throws ParseError on malformed input, unknown vertices, loops or repeats.
PolytopeGraph read_edgelist(std::string_view text);

struct LabelingHeader {
    FamilyKind family;
    int n;
    Variant variant;
    std::optional<std::string> source;
};

struct ParsedLabeling {
    LabelingHeader header;
    LabelFunction labeling;
};

/// `# family=<tag> n=<n> variant=<srd|strd>[ source=<tag>]` then
/// `<name> <label>` per vertex in canonical order.
std::string write_labeling(const PolytopeGraph& g, const LabelFunction& f, Variant variant,
                           const std::optional<std::string>& source = std::nullopt);

/// Parses a labeling for g. Rejects a header naming another graph, unknown
/// vertex names, repeated or missing vertices and labels outside {-1, 1, 2}.
ParsedLabeling read_labeling(std::string_view text, const PolytopeGraph& g);

}  // namespace polydom
