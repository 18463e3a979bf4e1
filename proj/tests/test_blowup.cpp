#include <doctest.h>

#include "cremona/blowup.hpp"
#include "cremona/rng.hpp"
#include "test_util.hpp"

using namespace cremona;
using testutil::C;
using testutil::V;

namespace {

Center plane_center(const PPoint& p) {
    Center c;
    c.level = 0;
    c.plane_point = p;
    return c;
}

Center chart_center(int level, const std::string& chart, const Rat& a, const Rat& b) {
    Center c;
    c.level = level;
    c.chart_id = chart;
    c.coords = {a, b};
    return c;
}

Tower one_blowup_at_origin() {
    Tower t;
    t.blow_up(plane_center(PPoint(Rat(1), Rat(0), Rat(0))));
    return t;
}

}  // namespace

TEST_CASE("first blowup creates the textbook charts") {
    Tower t = one_blowup_at_origin();
    CHECK(t.levels() == 1);
    CHECK(t.base_patch() == 0);
    CHECK(t.chart_ids() == std::vector<std::string>{"base", "L1A", "L1B"});

    const auto push_a = t.pushforward("L1A");
    const MPoly u = MPoly::variable(chart_vars(), 0);
    const MPoly v = MPoly::variable(chart_vars(), 1);
    CHECK(push_a[0] == u);
    CHECK(push_a[1] == u * v);
    CHECK(t.chart("L1A").exceptional == u);
    CHECK(t.chart("L1B").exceptional == v);

    const auto push_base = t.pushforward("base");
    CHECK(push_base[0] == u);
    CHECK(push_base[1] == v);
}

TEST_CASE("atlas of a depth-2 tower has five charts") {
    Tower t = one_blowup_at_origin();
    t.blow_up(chart_center(1, "L1A", Rat(0), Rat(3)));
    CHECK(t.levels() == 2);
    CHECK(t.chart_ids() == std::vector<std::string>{"base", "L1A", "L1B", "L2A", "L2B"});
}

TEST_CASE("centers off the exceptional locus are rejected") {
    Tower t = one_blowup_at_origin();
    CHECK_THROWS_AS(t.blow_up(chart_center(1, "L1A", Rat(1), Rat(3))), StructuralError);
    CHECK_THROWS_AS(t.blow_up(chart_center(1, "nope", Rat(0), Rat(0))), StructuralError);
    // repeated center, including across the A/B overlap
    t.blow_up(chart_center(1, "L1A", Rat(0), Rat(3)));
    Tower t2 = one_blowup_at_origin();
    t2.blow_up(chart_center(1, "L1B", Rat(Rat(1, 3)), Rat(0)));  // same point of E1
    CHECK(t.center_epoint(1) == t2.center_epoint(1));
    CHECK_THROWS_AS(t.blow_up(chart_center(2, "L1A", Rat(0), Rat(3))), StructuralError);
}

TEST_CASE("cusp through one blowup: multiplicity two, strict transform v^2 - u") {
    Tower t = one_blowup_at_origin();
    const auto bs = base_vars();
    const MPoly x = V(bs, "x"), y = V(bs, "y");
    const auto res = t.strict_transform(1, y * y - x.pow(3));
    REQUIRE(res.multiplicities.size() == 1);
    CHECK(res.multiplicities[0] == 2);
    const MPoly u = MPoly::variable(chart_vars(), 0);
    const MPoly v = MPoly::variable(chart_vars(), 1);
    CHECK(res.chart_equation.at("L1A") == v * v - u);
    // other chart: x = uv, y = v gives v^2 - u^3 v^3 = v^2(1 - u^3 v)
    CHECK(res.chart_equation.at("L1B") == C(chart_vars(), 1) - u.pow(3) * v);
}

TEST_CASE("line through the center has multiplicity one and meets E1 at its direction") {
    Tower t = one_blowup_at_origin();
    const auto bs = base_vars();
    const MPoly x = V(bs, "x"), y = V(bs, "y");
    const auto res = t.strict_transform(1, y - x * Rat(2));
    CHECK(res.multiplicities == std::vector<int>{1});
    const MPoly u = MPoly::variable(chart_vars(), 0);
    const MPoly v = MPoly::variable(chart_vars(), 1);
    CHECK(res.chart_equation.at("L1A") == v - C(chart_vars(), 2));
    // the strict transform crosses u = 0 exactly at the direction v = 2
    CHECK(res.chart_equation.at("L1A").eval({Rat(0), Rat(2)}).is_zero());
}

TEST_CASE("curve missing the center is untouched") {
    Tower t = one_blowup_at_origin();
    const auto bs = base_vars();
    const MPoly x = V(bs, "x"), y = V(bs, "y");
    const auto res = t.strict_transform(1, x + y - C(bs, 1));
    CHECK(res.multiplicities == std::vector<int>{0});
    const MPoly u = MPoly::variable(chart_vars(), 0);
    const MPoly v = MPoly::variable(chart_vars(), 1);
    CHECK(res.chart_equation.at("L1A") == u + u * v - C(chart_vars(), 1));
}

TEST_CASE("strict transform preconditions") {
    Tower t = one_blowup_at_origin();
    const auto bs = base_vars();
    const MPoly x = V(bs, "x"), y = V(bs, "y");
    CHECK_THROWS_AS(t.strict_transform(1, MPoly(bs)), DomainError);
    CHECK_THROWS_AS(t.strict_transform(1, (y - x) * (y - x)), DomainError);  // not squarefree
}

TEST_CASE("level-2 chain pushforward composes the charts") {
    Tower t = one_blowup_at_origin();
    t.blow_up(chart_center(1, "L1A", Rat(0), Rat(3)));
    const MPoly u = MPoly::variable(chart_vars(), 0);
    const MPoly v = MPoly::variable(chart_vars(), 1);
    // L2A -> L1A: (u, 3 + u v); L1A -> base: (u, u v)
    const auto push = t.pushforward("L2A");
    CHECK(push[0] == u);
    CHECK(push[1] == u * (C(chart_vars(), 3) + u * v));
}

TEST_CASE("multiplicity ledger reconstructs the full pullback") {
    Tower t = one_blowup_at_origin();
    t.blow_up(chart_center(1, "L1A", Rat(0), Rat(0)));  // tangent-direction chain
    const auto bs = base_vars();
    const MPoly x = V(bs, "x"), y = V(bs, "y");
    const MPoly curve = y * y - x.pow(3);  // cusp, multiplicities 2 then 1
    const auto res = t.strict_transform(2, curve);
    CHECK(res.multiplicities == std::vector<int>{2, 1});
    for (const auto& id : t.chart_ids()) {
        const auto push = t.pushforward(id);
        MPoly pulled = curve.renamed(chart_vars()).substituted({push[0], push[1]});
        // dividing every visible exceptional curve out to its exact order
        // must leave exactly the strict transform
        MPoly remaining = pulled;
        MPoly product = C(chart_vars(), 1);
        for (int k = 1; k <= t.levels(); ++k) {
            auto eq = t.exceptional_equation(k, id);
            if (!eq || eq->is_constant()) continue;
            const int ord = ord_divide(remaining, *eq);
            remaining = *exact_divide(remaining, eq->pow(ord));
            product = product * eq->pow(ord);
        }
        CHECK(remaining == res.chart_equation.at(id));
        CHECK(product * remaining == pulled);
    }
}

TEST_CASE("overlapping charts agree on the pushforward") {
    Tower t = one_blowup_at_origin();
    t.blow_up(chart_center(1, "L1A", Rat(0), Rat(2)));
    Rng rng(71);
    for (int level = 1; level <= 2; ++level) {
        const std::string a_id = "L" + std::to_string(level) + "A";
        const std::string b_id = "L" + std::to_string(level) + "B";
        const auto pa = t.pushforward(a_id);
        const auto pb = t.pushforward(b_id);
        for (int i = 0; i < 10; ++i) {
            const Rat u = rng.small_rat(5, 2);
            Rat v = rng.small_rat(5, 2);
            while (v.is_zero()) v = rng.small_rat(5, 2);
            // A-point (u, v) equals B-point (1/v, u v) on the overlap
            const std::vector<Rat> ap = {u, v};
            const std::vector<Rat> bp = {v.inverse(), u * v};
            CHECK(pa[0].eval(ap) == pb[0].eval(bp));
            CHECK(pa[1].eval(ap) == pb[1].eval(bp));
        }
    }
}

TEST_CASE("z-sets: single blowup has none") {
    Tower t = one_blowup_at_origin();
    const auto z = t.z_sets();
    REQUIRE(z.size() == 1);
    CHECK(z[0].empty());
}

TEST_CASE("z-sets of a depth-2 chain") {
    Tower t = one_blowup_at_origin();
    t.blow_up(chart_center(1, "L1A", Rat(0), Rat(3)));
    const auto z = t.z_sets();
    REQUIRE(z.size() == 2);
    // Z1 is the blown-up point of E1, Z2 is where the old curve crosses E2
    CHECK(z[0] == std::set<EPoint>{EPoint{1, false, Rat(3)}});
    CHECK(z[1] == std::set<EPoint>{EPoint{2, true, Rat(0)}});
}

TEST_CASE("z-sets of the satellite configuration") {
    Tower t = one_blowup_at_origin();
    t.blow_up(chart_center(1, "L1A", Rat(0), Rat(2)));
    t.blow_up(chart_center(2, "L2B", Rat(0), Rat(0)));  // E1 meets E2 here
    const auto z = t.z_sets();
    REQUIRE(z.size() == 3);
    CHECK(z[0] == std::set<EPoint>{EPoint{1, false, Rat(2)}});
    CHECK(z[1] == std::set<EPoint>{EPoint{2, true, Rat(0)}});
    CHECK(z[2] == std::set<EPoint>{EPoint{3, false, Rat(0)}, EPoint{3, true, Rat(0)}});
}

TEST_CASE("z-sets of a star: two distinct points on E1") {
    Tower t = one_blowup_at_origin();
    t.blow_up(chart_center(1, "L1A", Rat(0), Rat(1)));
    t.blow_up(chart_center(2, "L1A", Rat(0), Rat(-1)));
    const auto z = t.z_sets();
    REQUIRE(z.size() == 3);
    CHECK(z[0] == std::set<EPoint>{EPoint{1, false, Rat(1)}, EPoint{1, false, Rat(-1)}});
    // each new curve only meets the strict transform of E1
    CHECK(z[1].size() == 1);
    CHECK(z[2].size() == 1);
}

TEST_CASE("prefix immutability: extending the tower preserves lower levels") {
    Tower t2 = one_blowup_at_origin();
    t2.blow_up(chart_center(1, "L1A", Rat(0), Rat(2)));
    Tower t3 = one_blowup_at_origin();
    t3.blow_up(chart_center(1, "L1A", Rat(0), Rat(2)));
    t3.blow_up(chart_center(2, "L2A", Rat(0), Rat(5)));

    const auto bs = base_vars();
    const MPoly x = V(bs, "x"), y = V(bs, "y");
    const MPoly curve = y * y - x.pow(3) + x * y;
    const auto r2 = t2.strict_transform(2, curve);
    const auto r3 = t3.strict_transform(2, curve);
    CHECK(r2.multiplicities == r3.multiplicities);
    for (const auto& [id, eq] : r2.chart_equation) CHECK(r3.chart_equation.at(id) == eq);
    for (const auto& id : t2.chart_ids()) {
        CHECK(t3.pushforward(id)[0] == t2.pushforward(id)[0]);
        CHECK(t3.pushforward(id)[1] == t2.pushforward(id)[1]);
    }
}

TEST_CASE("tower json round-trip") {
    Tower t = one_blowup_at_origin();
    t.blow_up(chart_center(1, "L1A", Rat(0), Rat(2)));
    t.blow_up(chart_center(2, "L2B", Rat(0), Rat(0)));
    const Json j = t.to_json();
    const Tower back = Tower::from_json(j);
    CHECK(back.to_json() == j);
    CHECK(back.levels() == 3);
    CHECK(back.center_epoint(2) == t.center_epoint(2));

    Json bad = j;
    bad["centers"][1]["coords"][0] = "1";  // off the exceptional locus
    CHECK_THROWS_AS(Tower::from_json(bad), StructuralError);
}

TEST_CASE("base chart selection follows the first nonzero coordinate") {
    Tower t;
    t.blow_up(plane_center(PPoint(Rat(0), Rat(1), Rat(-2))));
    CHECK(t.base_patch() == 1);
    // strict transform of a line through the center: x = -2 y in patch
    // coordinates (x0/x1, x2/x1) becomes (x, y) with center (0, -2)
    const auto bs = base_vars();
    const MPoly x = V(bs, "x"), y = V(bs, "y");
    const auto res = t.strict_transform(1, y + C(bs, 2) - x * Rat(7));
    CHECK(res.multiplicities == std::vector<int>{1});
}
