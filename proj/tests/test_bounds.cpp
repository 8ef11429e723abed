#include "doctest.h"

#include "polydom/bounds.hpp"
#include "polydom/errors.hpp"

using namespace polydom;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

DegreeProfile columns(int delta, int Delta, int rows, int n) { return make_profile(delta, Delta, rows * n); }

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("rational helpers") {
    CHECK(to_string(R(21, 5)) == "21/5");
    CHECK(to_string(R(-6, 3)) == "-2");
    CHECK(ceil(R(21, 5)) == 5);
    CHECK(ceil(R(-21, 5)) == -4);
    CHECK(floor(R(-21, 5)) == -5);
    CHECK(floor(R(20, 5)) == 4);
    CHECK(ceil(R(-4)) == -4);
}

TEST_CASE("degree profiles") {
    CHECK_THROWS_AS(make_profile(0, 3, 10), DomainError);
    CHECK_THROWS_AS(make_profile(4, 3, 10), DomainError);
    CHECK_THROWS_AS(make_profile(3, 10, 10), DomainError);
    auto p = degree_profile(generate(FamilyKind::Sn, 6));
    CHECK(p.min_degree == 3);
    CHECK(p.max_degree == 5);
    CHECK(p.vertex_count == 24);
    auto q = degree_profile(generate(FamilyKind::TnDoublePrime, 6));
    CHECK(q.min_degree == 3);
    CHECK(q.max_degree == 6);
}

TEST_CASE("general lower bound, closed neighbourhoods") {
    for (int n = 5; n <= 30; ++n) {
        auto b = lb_general_srd(columns(4, 6, 3, n));
        REQUIRE(b.applicable);
        CHECK(*b.value == R(-7 * 3 * n, 133));
        CHECK(*b.value == R(-3 * n, 19));
    }
    // Regular of degree 4: (-32 + 32 + 4 + 8 + 3) / (5 * 15) = 1/5 per vertex.
    CHECK(*lb_general_srd(make_profile(4, 4, 70)).value == R(14));
    CHECK(*lb_general_srd(make_profile(4, 4, 35)).value == R(7));
    CHECK(*lb_general_srd(make_profile(3, 5, 40)).value == R((-50 + 30 + 5 + 6 + 3) * 40, 6 * 16));
    CHECK(*lb_general_srd(make_profile(0, 0, 0)).value == R(0));
    CHECK(lb_general_srd(make_profile(0, 0, 0)).kind == BoundKind::LowerGeneralSrd);
}

TEST_CASE("general lower bound, open neighbourhoods") {
    for (int n = 5; n <= 30; ++n) {
        auto t = lb_general_strd(columns(4, 5, 4, n));
        REQUIRE(t.applicable);
        CHECK(*t.value == R(ceil(R(4 * n, 14))));
        auto s = lb_general_strd(columns(3, 5, 4, n));
        CHECK(*s.value == R(ceil(R(-4 * n, 13))));
    }
    auto eq = lb_general_strd(make_profile(4, 4, 20));
    CHECK_FALSE(eq.applicable);
    CHECK_FALSE(eq.value.has_value());
    CHECK_FALSE(eq.reason.empty());
}

TEST_CASE("general upper bound, open neighbourhoods") {
    CHECK(*ub_general_strd(columns(3, 5, 4, 5)).value == R(19));
    CHECK(*ub_general_strd(columns(4, 5, 4, 6)).value == R(23));
    auto low = ub_general_strd(make_profile(2, 4, 20));
    CHECK_FALSE(low.applicable);
    CHECK_FALSE(low.value.has_value());
}

TEST_CASE("quoted per-column constants equal direct evaluation") {
    for (auto f : kAllFamilies)
        for (auto variant : {Variant::SRD, Variant::STRD})
            for (const BoundAnnotation& a : bound_annotations(f, variant))
                for (int n = 5; n <= 40; ++n) {
                    CAPTURE(family_tag(f));
                    CAPTURE(a.text());
                    CAPTURE(n);
                    auto p = degree_profile(generate(f, n));
                    BoundValue direct = a.kind == BoundKind::LowerGeneralSrd    ? lb_general_srd(p)
                                        : a.kind == BoundKind::LowerGeneralStrd ? lb_general_strd(p)
                                                                                : ub_general_strd(p);
                    REQUIRE(direct.applicable);
                    Rational quoted = a.coefficient * n + a.offset;
                    if (a.ceiling) quoted = ceil(quoted);
                    CHECK(*direct.value == quoted);
                }
    CHECK(bound_annotations(FamilyKind::An, Variant::SRD).front().text() == "-3/19 n");
    CHECK(bound_annotations(FamilyKind::Sn, Variant::STRD).front().text() == "ceil(-4/13 n)");
    CHECK(bound_annotations(FamilyKind::Tn, Variant::STRD).back().text() == "4 n - 1");
}

TEST_CASE("theorem intervals") {
    auto r8 = theorem_bounds(FamilyKind::Rn, Variant::SRD, 8);
    CHECK(r8.lower == R(6));
    CHECK(r8.upper == R(6));
    CHECK(r8.exact);
    auto t8 = theorem_bounds(FamilyKind::Tn, Variant::SRD, 8);
    CHECK(t8.lower == R(6));
    CHECK(t8.upper == R(8));
    CHECK_FALSE(t8.exact);
    auto h9 = theorem_bounds(FamilyKind::TnDoublePrime, Variant::SRD, 9);
    CHECK(h9.lower == R(21, 5));
    CHECK(h9.lower_sharpened == 5);
    CHECK(h9.upper == R(6));
    CHECK_FALSE(h9.exact);
    CHECK(h9.theorem == "Thm7");
    auto r7 = theorem_bounds(FamilyKind::Rn, Variant::SRD, 7);
    CHECK(r7.lower == R(5));
    CHECK(r7.upper == R(6));
    auto q12 = theorem_bounds(FamilyKind::Qn, Variant::SRD, 12);
    CHECK(q12.lower == R(8));
    CHECK(q12.upper == R(12));
}

TEST_CASE("exactness follows the statements") {
    for (int n = 5; n <= 40; ++n) {
        CAPTURE(n);
        CHECK(theorem_bounds(FamilyKind::An, Variant::SRD, n).exact);
        CHECK(theorem_bounds(FamilyKind::Rn, Variant::SRD, n).exact == (n % 3 != 1));
        CHECK(theorem_bounds(FamilyKind::Sn, Variant::STRD, n).exact);
        CHECK(theorem_bounds(FamilyKind::Tn, Variant::STRD, n).exact == (n % 2 == 0));
        CHECK_FALSE(theorem_bounds(FamilyKind::Tn, Variant::SRD, n).exact);
        CHECK_FALSE(theorem_bounds(FamilyKind::TnDoublePrime, Variant::SRD, n).exact);
        if (n >= 12) CHECK_FALSE(theorem_bounds(FamilyKind::Qn, Variant::SRD, n).exact);
        auto r = theorem_bounds(FamilyKind::Rn, Variant::SRD, n);
        CHECK(r.lower_sharpened == ceil(R(2 * n, 3)));
        CHECK(r.upper == R(n % 3 == 0 ? 2 * (n / 3) : 2 * (n / 3) + 2));
    }
}

TEST_CASE("uncovered combinations are not applicable") {
    CHECK_FALSE(theorem_bounds(FamilyKind::Sn, Variant::SRD, 9).applicable);
    CHECK_FALSE(theorem_bounds(FamilyKind::Qn, Variant::STRD, 12).applicable);
    CHECK_FALSE(theorem_bounds(FamilyKind::An, Variant::STRD, 12).applicable);
    CHECK_FALSE(theorem_bounds(FamilyKind::Qn, Variant::SRD, 11).applicable);
    CHECK_FALSE(theorem_bounds(FamilyKind::An, Variant::SRD, 4).applicable);
    CHECK_FALSE(theorem_bounds(FamilyKind::Sn, Variant::SRD, 9).reason.empty());
}

TEST_CASE("multiplier combinations reproduce the stated constants") {
    const auto& all = lower_bound_combinations();
    CHECK(all.size() == 7);
    for (const BoundCombination& c : all) {
        CAPTURE(c.theorem);
        auto r = verify_multiplier_combination(c.family, c.variant, c.rows);
        CHECK(r.coefficient == c.expected);
        CHECK(r.scale > 0);
        // Same result at a larger n: the rows do not depend on n.
        CHECK(verify_multiplier_combination(generate(c.family, 11), c.variant, c.rows).coefficient == c.expected);
    }
    auto find = [&](const char* thm) {
        for (const auto& c : all)
            if (std::string(c.theorem) == thm) return c;
        FAIL("missing " << thm);
        return all.front();
    };
    CHECK(find("Thm5").expected == R(3, 4));
    CHECK(find("Thm6").expected == R(2, 3));
    CHECK(find("Thm7").expected == R(7, 15));
    CHECK(find("Thm1").expected == R(0));
    CHECK(find("Thm2").expected == R(2, 3));
    // Thm3 and Thm4 give f(V) >= n.
    CHECK(find("Thm3").expected == R(1));
    CHECK(find("Thm4").expected == R(1));
}

TEST_CASE("the sums over classes telescope exactly where no cardinality row is used") {
    for (const BoundCombination& c : lower_bound_combinations()) {
        CAPTURE(c.theorem);
        auto r = verify_multiplier_combination(c.family, c.variant, c.rows);
        bool uses_size = std::any_of(c.rows.begin(), c.rows.end(), [](const RowMultiplier& m) { return m.kind == RowKind::ClassSize; });
        CHECK(r.exact == !uses_size);
    }
}

TEST_CASE("wrong multipliers are rejected with a residual") {
    using K = VertexClass;
    std::vector<RowMultiplier> t{{RowKind::ClassSum, K::A, R(1, 4)},
                                 {RowKind::ClassSum, K::B, R(1, 8)},
                                 {RowKind::ClassSum, K::C, R(1, 8)},
                                 {RowKind::ClassSum, K::D, R(1, 8)}};
    CHECK_THROWS_AS(verify_multiplier_combination(FamilyKind::Tn, Variant::SRD, t), CombinationError);
    try {
        verify_multiplier_combination(FamilyKind::Tn, Variant::SRD, t);
    } catch (const CombinationError& e) {
        CHECK(e.residual().size() == 4);
        CHECK(std::string(e.what()).find("does not telescope") != std::string::npos);
    }
    // Without the cap on b the A_n rows alone do not bound f(V).
    std::vector<RowMultiplier> a{{RowKind::ClassSum, K::A, R(1, 3)}, {RowKind::ClassSum, K::C, R(1, 3)}};
    CHECK_THROWS_AS(verify_multiplier_combination(FamilyKind::An, Variant::SRD, a), CombinationError);
    std::vector<RowMultiplier> neg{{RowKind::ClassSum, K::A, R(-1)}};
    CHECK_THROWS_AS(verify_multiplier_combination(FamilyKind::An, Variant::SRD, neg), DomainError);
    std::vector<RowMultiplier> foreign{{RowKind::ClassSum, K::D, R(1)}};
    CHECK_THROWS_AS(verify_multiplier_combination(FamilyKind::An, Variant::SRD, foreign), DomainError);
}

TEST_CASE("a plain sum of all rows does not bound the weight on A_n") {
    // Column totals are 5, 7, 5: no single scale dominates all three classes.
    using K = VertexClass;
    std::vector<RowMultiplier> rows;
    for (auto k : {K::A, K::B, K::C}) rows.push_back({RowKind::ClassSum, k, R(1)});
    CHECK_THROWS_AS(verify_multiplier_combination(FamilyKind::An, Variant::SRD, rows), CombinationError);
}

}
