#pragma once

#include <map>
#include <string>

#include "oracle.hpp"
#include "polydom/labeling.hpp"

namespace testing {

// Weight stated for each case, written out independently of the builders.
inline int case_formula(polydom::FamilyKind f, polydom::Variant v, int n) {
    const int k3 = n / 3, k2 = n / 2;
    switch (f) {
        case polydom::FamilyKind::An: return 0;
        case polydom::FamilyKind::Rn: return n % 3 == 0 ? 2 * k3 : 2 * k3 + 2;
        case polydom::FamilyKind::Sn: return n;
        case polydom::FamilyKind::Tn: return v == polydom::Variant::SRD ? n : (n % 2 == 0 ? 2 * k2 : 2 * k2 + 2);
        case polydom::FamilyKind::Qn: return n;
        case polydom::FamilyKind::TnDoublePrime: return n % 3 == 0 ? 2 * n / 3 : (2 * n + 2) / 3 + 1;
    }
    return 0;
}

inline std::map<std::string, int> by_name(const polydom::PolytopeGraph& g, const polydom::LabelFunction& f) {
    std::map<std::string, int> out;
    for (int v = 0; v < g.vertex_count(); ++v) out[polydom::vertex_name(g.vertex(v))] = polydom::value(f[v]);
    return out;
}

inline bool oracle_admissible(const polydom::PolytopeGraph& g, const polydom::LabelFunction& f, polydom::Variant variant) {
    return oracle::check(oracle::edges(g.family(), g.n()), by_name(g, f), variant == polydom::Variant::SRD).admissible();
}

inline int label_at(const polydom::PolytopeGraph& g, const polydom::LabelFunction& f, char klass, int index) {
    auto v = polydom::parse_vertex_name(oracle::v(klass, index, g.n()));
    return polydom::value(f.at(g, *v));
}

}  // namespace testing
