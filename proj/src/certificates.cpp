#include "polydom/certificates.hpp"

#include <array>

#include "polydom/errors.hpp"

namespace polydom {

namespace {

using K = VertexClass;

void require_min(int n, int min_n, const char* what) {
    if (n < min_n)
        throw DomainError(std::string(what) + ": n below minimum " + std::to_string(min_n) + " (got " +
                          std::to_string(n) + ")");
}

// Assignment helper with cyclic indices.
class Builder {
public:
    Builder(FamilyKind family, int n, Label fill) : graph_(generate(family, n)), f_(graph_, fill) {}

    void set(K klass, long long index, Label l) { f_.set(graph_.id(klass, index), l); }

    void fill_row(K klass, Label l) {
        for (int i = 0; i < graph_.n(); ++i) set(klass, i, l);
    }

    LabelFunction take() && { return std::move(f_); }

private:
    PolytopeGraph graph_;
    LabelFunction f_;
};

std::string residue_tag(int n, int mod) {
    std::string base = "n=" + std::to_string(mod) + "k";
    int r = n % mod;
    return r == 0 ? base : base + "+" + std::to_string(r);
}

}  // namespace

int tn2p_upper(int n) {
    int ceil_two_thirds = (2 * n + 2) / 3;
    return n % 3 == 0 ? ceil_two_thirds : ceil_two_thirds + 1;
}

Certificate cert_an_srd(int n) {
    require_min(n, kMinColumns, "A_n certificate");
    Builder b(FamilyKind::An, n, Label::MinusOne);
    b.fill_row(K::B, Label::Two);
    return {std::move(b).take(), Variant::SRD, 0, "Thm1", "all"};
}

Certificate cert_rn_srd(int n) {
    require_min(n, kMinColumns, "R_n certificate");
    Builder b(FamilyKind::Rn, n, Label::MinusOne);
    b.fill_row(K::B, Label::Two);
    for (int i = 0; i < n; i += 3) b.set(K::C, i, Label::One);
    const int k = n / 3;
    const int claimed = n % 3 == 0 ? 2 * k : 2 * k + 2;
    return {std::move(b).take(), Variant::SRD, claimed, "Thm2", residue_tag(n, 3)};
}

Certificate cert_sn_strd(int n) {
    require_min(n, kMinColumns, "S_n certificate");
    Builder b(FamilyKind::Sn, n, Label::MinusOne);
    b.fill_row(K::B, Label::Two);
    b.fill_row(K::D, Label::One);
    return {std::move(b).take(), Variant::STRD, n, "Thm3", "all"};
}

Certificate cert_tn_strd(int n) {
    require_min(n, kMinColumns, "T_n total certificate");
    Builder b(FamilyKind::Tn, n, Label::MinusOne);
    const int k = n / 2;
    for (int i = 0; i < 2 * k; ++i) {
        b.set(K::B, i, i % 2 == 0 ? Label::Two : Label::One);
        b.set(K::C, i, i % 2 == 0 ? Label::One : Label::Two);
    }
    if (n % 2 == 1) {
        // Seam column 2k. The weight 2k+2 needs two extra 2-labels here.
        b.set(K::B, 2 * k, Label::Two);
        b.set(K::C, 2 * k, Label::Two);
    }
    const int claimed = n % 2 == 0 ? 2 * k : 2 * k + 2;
    return {std::move(b).take(), Variant::STRD, claimed, "Thm4", residue_tag(n, 2)};
}

Certificate cert_tn_srd(int n) {
    require_min(n, kMinColumns, "T_n certificate");
    Builder b(FamilyKind::Tn, n, Label::MinusOne);
    b.fill_row(K::A, Label::One);
    b.fill_row(K::C, Label::Two);
    return {std::move(b).take(), Variant::SRD, n, "Thm5", "all"};
}

Certificate cert_qn_srd(int n) {
    require_min(n, 12, "Q_n certificate");
    Builder b(FamilyKind::Qn, n, Label::MinusOne);
    const int k = n / 3;
    const int r = n % 3;
    // Periodic part, repeated for i < blocks.
    const int blocks = r == 0 ? k : (r == 1 ? k - 1 : k - 3);
    for (int i = 0; i < blocks; ++i) {
        b.set(K::A, 3 * i, Label::Two);
        b.set(K::B, 3 * i + 1, Label::Two);
        b.set(K::D, 3 * i + 2, Label::Two);
        b.set(K::B, 3 * i, Label::One);
        b.set(K::B, 3 * i + 2, Label::One);
        b.set(K::D, 3 * i, Label::One);
    }
    struct Entry {
        K klass;
        int offset;  // index = 3k + offset
    };
    auto place = [&](std::initializer_list<Entry> entries, Label l) {
        for (const Entry& e : entries) b.set(e.klass, 3 * k + e.offset, l);
    };
    if (r == 1) {
        place({{K::A, -3}, {K::B, -1}, {K::D, -3}, {K::D, 0}}, Label::Two);
        place({{K::A, -1}, {K::B, -3}, {K::C, -2}, {K::C, -1}}, Label::One);
    } else if (r == 2) {
        place({{K::A, -9}, {K::A, -5}, {K::A, -2}, {K::B, -7}, {K::B, -4}, {K::B, 0}, {K::D, -9}, {K::D, -6},
               {K::D, -3}, {K::D, -2}, {K::D, 1}},
              Label::Two);
        place({{K::A, -7}, {K::A, 0}, {K::B, -9}, {K::B, -5}, {K::B, -3}, {K::B, -2}, {K::C, -8}, {K::C, -7},
               {K::C, -1}, {K::C, 0}, {K::D, -5}},
              Label::One);
    }
    return {std::move(b).take(), Variant::SRD, n, "Thm6", residue_tag(n, 3)};
}

Certificate cert_tn2p_srd(int n) {
    require_min(n, kMinColumns, "T_n'' certificate");
    Builder b(FamilyKind::TnDoublePrime, n, Label::MinusOne);
    b.fill_row(K::B, Label::Two);
    // d-row repeats (2, 1, -1); a trailing partial period keeps its prefix.
    constexpr std::array<Label, 3> period{Label::Two, Label::One, Label::MinusOne};
    for (int i = 0; i < n; ++i) b.set(K::D, i, period[i % 3]);
    return {std::move(b).take(), Variant::SRD, tn2p_upper(n), "Thm7", residue_tag(n, 3)};
}

std::span<const CertificateDomain> covered_combinations() {
    static constexpr std::array<CertificateDomain, 7> kCovered{{
        {FamilyKind::An, Variant::SRD, kMinColumns, "Thm1"},
        {FamilyKind::Rn, Variant::SRD, kMinColumns, "Thm2"},
        {FamilyKind::Sn, Variant::STRD, kMinColumns, "Thm3"},
        {FamilyKind::Tn, Variant::STRD, kMinColumns, "Thm4"},
        {FamilyKind::Tn, Variant::SRD, kMinColumns, "Thm5"},
        {FamilyKind::Qn, Variant::SRD, 12, "Thm6"},
        {FamilyKind::TnDoublePrime, Variant::SRD, kMinColumns, "Thm7"},
    }};
    return kCovered;
}

std::optional<Certificate> certificate_for(FamilyKind family, Variant variant, int n) {
    switch (family) {
        case FamilyKind::An:
            if (variant == Variant::SRD) return cert_an_srd(n);
            break;
        case FamilyKind::Rn:
            if (variant == Variant::SRD) return cert_rn_srd(n);
            break;
        case FamilyKind::Sn:
            if (variant == Variant::STRD) return cert_sn_strd(n);
            break;
        case FamilyKind::Tn:
            return variant == Variant::SRD ? cert_tn_srd(n) : cert_tn_strd(n);
        case FamilyKind::Qn:
            if (variant == Variant::SRD) return cert_qn_srd(n);
            break;
        case FamilyKind::TnDoublePrime:
            if (variant == Variant::SRD) return cert_tn2p_srd(n);
            break;
    }
    return std::nullopt;
}

}  // namespace polydom
