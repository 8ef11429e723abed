#include "polydom/formats.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <vector>

#include "polydom/errors.hpp"

namespace polydom {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

struct Line {
    int number;
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    while (!text.empty()) {
        std::size_t end = text.find('\n');
        std::string_view line = text.substr(0, end);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        out.push_back({++number, line});
        if (end == std::string_view::npos) break;
        text.remove_prefix(end + 1);
    }
    return out;
}

std::optional<int> parse_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

bool is_blank(std::string_view s) { return s.find_first_not_of(" \t") == std::string_view::npos; }

/// Locates the header (first non-blank line) and returns its key=value fields.
std::map<std::string, std::string, std::less<>> parse_header(const std::vector<Line>& lines, std::size_t& cursor) {
    while (cursor < lines.size() && is_blank(lines[cursor].text)) ++cursor;
    if (cursor == lines.size()) throw ParseError("missing header");
    const Line& line = lines[cursor++];
    auto tokens = split_ws(line.text);
    if (tokens.empty() || tokens[0] != "#") throw ParseError("expected header starting with '# '", line.number);
    std::map<std::string, std::string, std::less<>> fields;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto eq = tokens[i].find('=');
        if (eq == std::string_view::npos || eq == 0) throw ParseError("malformed header field '" + std::string(tokens[i]) + "'", line.number);
        std::string key(tokens[i].substr(0, eq));
        if (!fields.emplace(key, std::string(tokens[i].substr(eq + 1))).second)
            throw ParseError("repeated header field '" + key + "'", line.number);
    }
    return fields;
}

std::pair<FamilyKind, int> graph_fields(std::map<std::string, std::string, std::less<>>& fields, int line) {
    auto fam = fields.find("family");
    auto nn = fields.find("n");
    if (fam == fields.end() || nn == fields.end()) throw ParseError("header needs family= and n=", line);
    auto family = parse_family(fam->second);
    if (!family) throw ParseError("unknown family '" + fam->second + "'", line);
    auto n = parse_int(nn->second);
    if (!n || *n < 1) throw ParseError("bad column count '" + nn->second + "'", line);
    fields.erase(fam);
    fields.erase(nn);
    return {*family, *n};
}

void reject_extra(const std::map<std::string, std::string, std::less<>>& fields, int line) {
    if (!fields.empty()) throw ParseError("unknown header field '" + fields.begin()->first + "'", line);
}

VertexId vertex_of(std::string_view name, FamilyKind family, int n, int line) {
    auto v = parse_vertex_name(name);
    if (!v || static_cast<int>(v->klass) >= rows(family) || v->index >= n)
        throw ParseError("unknown vertex '" + std::string(name) + "'", line);
    return *v;
}

}  // namespace

std::string write_edgelist(const PolytopeGraph& g) {
    std::string out = "# family=" + std::string(family_tag(g.family())) + " n=" + std::to_string(g.n()) + "\n";
    for (auto [u, v] : g.edges()) out += vertex_name(g.vertex(u)) + " " + vertex_name(g.vertex(v)) + "\n";
    return out;
}

std::string write_dot(const PolytopeGraph& g) {
    std::string out = "graph " + std::string(family_tag(g.family())) + "_" + std::to_string(g.n()) + " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out += "  " + vertex_name(g.vertex(v)) + ";\n";
    for (auto [u, v] : g.edges()) out += "  " + vertex_name(g.vertex(u)) + " -- " + vertex_name(g.vertex(v)) + ";\n";
    out += "}\n";
    return out;
}

PolytopeGraph read_edgelist(std::string_view text) {
    const auto lines = split_lines(text);
    std::size_t cursor = 0;
    auto fields = parse_header(lines, cursor);
    const int header_line = lines[cursor - 1].number;
    auto [family, n] = graph_fields(fields, header_line);
    reject_extra(fields, header_line);

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::map<std::pair<VertexId, VertexId>, int> seen;
    for (; cursor < lines.size(); ++cursor) {
        const Line& line = lines[cursor];
        auto tokens = split_ws(line.text);
        if (tokens.empty() || tokens[0].front() == '#') continue;
        if (tokens.size() != 2) throw ParseError("expected '<u> <v>'", line.number);
        VertexId u = vertex_of(tokens[0], family, n, line.number);
        VertexId v = vertex_of(tokens[1], family, n, line.number);
        if (u == v) throw ParseError("self-loop at " + vertex_name(u), line.number);
        auto key = std::minmax(u, v);
        if (auto [it, fresh] = seen.emplace(key, line.number); !fresh)
            throw ParseError("edge repeats line " + std::to_string(it->second), line.number);
        edges.emplace_back(key);
    }
    try {
        return PolytopeGraph::from_edges(family, n, edges);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::string write_labeling(const PolytopeGraph& g, const LabelFunction& f, Variant variant,
                           const std::optional<std::string>& source) {
    if (!f.matches(g)) throw DomainError("labeling does not belong to this graph");
    std::string out = "# family=" + std::string(family_tag(g.family())) + " n=" + std::to_string(g.n()) +
                      " variant=" + std::string(variant_tag(variant));
    if (source) out += " source=" + *source;
    out += "\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out += vertex_name(g.vertex(v)) + " " + std::to_string(value(f[v])) + "\n";
    return out;
}

ParsedLabeling read_labeling(std::string_view text, const PolytopeGraph& g) {
    const auto lines = split_lines(text);
    std::size_t cursor = 0;
    auto fields = parse_header(lines, cursor);
    const int header_line = lines[cursor - 1].number;
    auto [family, n] = graph_fields(fields, header_line);
    if (family != g.family() || n != g.n())
        throw ParseError("header names " + std::string(family_tag(family)) + " n=" + std::to_string(n) + " but the graph is " +
                             std::string(family_tag(g.family())) + " n=" + std::to_string(g.n()),
                         header_line);
    auto var = fields.find("variant");
    if (var == fields.end()) throw ParseError("header needs variant=", header_line);
    auto variant = parse_variant(var->second);
    if (!variant) throw ParseError("unknown variant '" + var->second + "'", header_line);
    fields.erase(var);
    std::optional<std::string> source;
    if (auto it = fields.find("source"); it != fields.end()) {
        source = it->second;
        fields.erase(it);
    }
    reject_extra(fields, header_line);

    std::vector<Label> labels(g.vertex_count(), Label::One);
    std::vector<int> defined_at(g.vertex_count(), 0);
    for (; cursor < lines.size(); ++cursor) {
        const Line& line = lines[cursor];
        auto tokens = split_ws(line.text);
        if (tokens.empty() || tokens[0].front() == '#') continue;
        if (tokens.size() != 2) throw ParseError("expected '<name> <label>'", line.number);
        VertexId v = vertex_of(tokens[0], family, n, line.number);
        auto raw = parse_int(tokens[1]);
        auto label = raw ? label_from_int(*raw) : std::nullopt;
        if (!label) throw ParseError("label must be -1, 1 or 2 (got '" + std::string(tokens[1]) + "')", line.number);
        int id = g.id(v);
        if (defined_at[id]) throw ParseError(vertex_name(v) + " already labelled on line " + std::to_string(defined_at[id]), line.number);
        defined_at[id] = line.number;
        labels[id] = *label;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!defined_at[v]) throw ParseError("no label for " + vertex_name(g.vertex(v)));
    return {{family, n, *variant, source}, LabelFunction(g, std::move(labels))};
}

}  // namespace polydom
