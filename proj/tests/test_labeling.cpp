#include "doctest.h"

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "polydom/certificates.hpp"
#include "polydom/errors.hpp"
#include "polydom/labeling.hpp"

using namespace polydom;

namespace {

LabelFunction random_labeling(const PolytopeGraph& g, std::mt19937_64& rng) {
    LabelFunction f(g);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int v = 0; v < g.vertex_count(); ++v) f.set(v, kLabels[pick(rng)]);
    return f;
}

}  // namespace

TEST_SUITE("labeling") {

TEST_CASE("labels") {
    CHECK(label_from_int(-1) == Label::MinusOne);
    CHECK(label_from_int(2) == Label::Two);
    CHECK_FALSE(label_from_int(0).has_value());
    CHECK_FALSE(label_from_int(3).has_value());
    CHECK_FALSE(label_from_int(-2).has_value());
}

TEST_CASE("neighbourhood sums from the constructions") {
    for (int n : {5, 6, 9}) {
        auto a = generate(FamilyKind::An, n);
        auto fa = cert_an_srd(n).labeling;
        for (int i = 0; i < n; ++i) CHECK(neighborhood_sum(a, fa, {VertexClass::B, i}, Variant::SRD) == 2);
        auto s = generate(FamilyKind::Sn, n);
        auto fs = cert_sn_strd(n).labeling;
        for (int i = 0; i < n; ++i) CHECK(neighborhood_sum(s, fs, {VertexClass::D, i}, Variant::STRD) == 1);
    }
}

TEST_CASE("all-ones labeling") {
    for (auto fam : kAllFamilies) {
        auto g = generate(fam, 7);
        LabelFunction f(g);
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK(neighborhood_sum(g, f, g.vertex(v), Variant::SRD) == g.degree(v) + 1);
            CHECK(neighborhood_sum(g, f, g.vertex(v), Variant::STRD) == g.degree(v));
        }
    }
    CHECK(LabelFunction(generate(FamilyKind::An, 7)).weight() == 21);
}

TEST_CASE("neighbourhood sums stay in range") {
    std::mt19937_64 rng(7);
    for (auto fam : kAllFamilies) {
        auto g = generate(fam, 6);
        for (int rep = 0; rep < 20; ++rep) {
            auto f = random_labeling(g, rng);
            for (int v = 0; v < g.vertex_count(); ++v) {
                int d = g.degree(v);
                int srd = neighborhood_sum(g, f, g.vertex(v), Variant::SRD);
                int strd = neighborhood_sum(g, f, g.vertex(v), Variant::STRD);
                CHECK((srd >= -(d + 1) && srd <= 2 * (d + 1)));
                CHECK((strd >= -d && strd <= 2 * d));
            }
        }
    }
}

TEST_CASE("construction for A_n validates with weight 0") {
    for (int n = 5; n <= 12; ++n) {
        auto g = generate(FamilyKind::An, n);
        auto c = cert_an_srd(n);
        CHECK(validate(g, c.labeling, Variant::SRD).empty());
        CHECK(weight(c.labeling) == 0);
    }
}

TEST_CASE("all minus one: every vertex fails both conditions") {
    for (auto fam : kAllFamilies)
        for (auto variant : {Variant::SRD, Variant::STRD}) {
            auto g = generate(fam, 6);
            LabelFunction f(g, Label::MinusOne);
            auto vs = validate(g, f, variant);
            REQUIRE(vs.size() == std::size_t(2 * g.vertex_count()));
            for (int v = 0; v < g.vertex_count(); ++v) {
                CHECK(vs[2 * v].kind == ViolationKind::SumTooLow);
                CHECK(vs[2 * v].vertex == g.vertex(v));
                CHECK(vs[2 * v + 1].kind == ViolationKind::UncoveredMinusOne);
                CHECK(vs[2 * v + 1].vertex == g.vertex(v));
            }
            CHECK(f.weight() == -g.vertex_count());
        }
}

TEST_CASE("R_6 construction with one b flipped to -1") {
    auto g = generate(FamilyKind::Rn, 6);
    auto c = cert_rn_srd(6);
    CHECK(c.labeling.weight() == 4);
    for (int i = 0; i < 6; ++i) {
        auto f = c.labeling;
        REQUIRE(f.at(g, {VertexClass::B, i}) == Label::Two);
        f.set(g, {VertexClass::B, i}, Label::MinusOne);
        auto vs = validate(g, f, Variant::SRD);
        bool a_low = std::any_of(vs.begin(), vs.end(), [&](const Violation& v) {
            return v.kind == ViolationKind::SumTooLow && v.vertex.klass == VertexClass::A &&
                   (v.vertex.index == i || v.vertex.index == (i + 1) % 6);
        });
        CHECK(a_low);
    }
}

TEST_CASE("violation details") {
    auto g = generate(FamilyKind::Rn, 5);
    LabelFunction f(g, Label::MinusOne);
    auto vs = validate(g, f, Variant::SRD);
    CHECK(vs[0].observed == -(g.degree(0) + 1));
    CHECK(describe(vs[0]).find("a0") != std::string::npos);
    CHECK(describe(vs[0]).rfind("SumTooLow", 0) == 0);
    CHECK(describe(vs[1]).rfind("UncoveredMinusOne", 0) == 0);
}

TEST_CASE("validator agrees with the reference check") {
    std::mt19937_64 rng(11);
    for (auto fam : kAllFamilies)
        for (auto variant : {Variant::SRD, Variant::STRD}) {
            auto g = generate(fam, 5 + static_cast<int>(rng() % 4));
            auto edges = oracle::edges(fam, g.n());
            for (int rep = 0; rep < 30; ++rep) {
                auto f = random_labeling(g, rng);
                auto ref = oracle::check(edges, testing::by_name(g, f), variant == Variant::SRD);
                std::set<std::string> low, unc;
                for (const auto& v : validate(g, f, variant))
                    (v.kind == ViolationKind::SumTooLow ? low : unc).insert(vertex_name(v.vertex));
                CHECK(low == ref.low_sum);
                CHECK(unc == ref.uncovered);
                CHECK(is_admissible(g, f, variant) == ref.admissible());
                CHECK(f.weight() == oracle::weight(testing::by_name(g, f)));
            }
        }
}

TEST_CASE("weight and counts") {
    auto g = generate(FamilyKind::Tn, 5);
    LabelFunction f(g);
    f.set(0, Label::MinusOne);
    f.set(1, Label::Two);
    f.set(2, Label::Two);
    CHECK(f.count(Label::MinusOne) == 1);
    CHECK(f.count(Label::Two) == 2);
    CHECK(f.count(Label::One) == 17);
    CHECK(f.weight() == 17 + 4 - 1);
}

TEST_CASE("labelings are tied to their graph") {
    auto g5 = generate(FamilyKind::An, 5);
    auto g6 = generate(FamilyKind::An, 6);
    auto r5 = generate(FamilyKind::Rn, 5);
    LabelFunction f(g5);
    CHECK(f.matches(g5));
    CHECK_FALSE(f.matches(g6));
    CHECK_FALSE(f.matches(r5));
    CHECK_THROWS_AS(validate(g6, f, Variant::SRD), DomainError);
    CHECK_THROWS_AS(validate(r5, f, Variant::SRD), DomainError);
    CHECK_THROWS_AS(is_admissible(g6, f, Variant::SRD), DomainError);
    CHECK_THROWS_AS(LabelFunction(g5, std::vector<Label>(14, Label::One)), DomainError);
}

TEST_CASE("lexicographic order") {
    auto g = generate(FamilyKind::An, 5);
    LabelFunction lo(g), hi(g);
    CHECK_FALSE(lex_less(lo, hi));
    hi.set(3, Label::Two);
    lo.set(7, Label::Two);
    CHECK(lex_less(lo, hi));
    CHECK_FALSE(lex_less(hi, lo));
    LabelFunction m(g);
    m.set(0, Label::MinusOne);
    CHECK(lex_less(m, lo));
}

TEST_CASE("visit order does not change the violations") {
    std::mt19937_64 rng(3);
    auto g = generate(FamilyKind::Qn, 7);
    for (int rep = 0; rep < 20; ++rep) {
        auto f = random_labeling(g, rng);
        std::vector<int> order(g.vertex_count());
        for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        auto a = validate(g, f, Variant::SRD);
        auto b = validate(g, f, Variant::SRD, order);
        auto key = [](const Violation& v) { return std::tuple(v.vertex, v.kind, v.observed); };
        std::sort(b.begin(), b.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
        CHECK(a == b);
    }
}

TEST_CASE("raising -1 to 1 never adds a witness violation elsewhere (n = 5, exhaustive)") {
    for (auto fam : kAllFamilies)
        for (auto variant : {Variant::SRD, Variant::STRD}) {
            std::optional<Certificate> c;
            try {
                c = certificate_for(fam, variant, 5);
            } catch (const DomainError&) {
            }
            if (!c) continue;
            auto g = generate(fam, 5);
            REQUIRE(validate(g, c->labeling, variant).empty());
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (c->labeling[v] != Label::MinusOne) continue;
                auto f = c->labeling;
                f.set(v, Label::One);
                CHECK(validate(g, f, variant).empty());
            }
        }
}

}
