#include <doctest.h>

#include "cremona/rng.hpp"
#include "cremona/surface.hpp"
#include "test_util.hpp"

using namespace cremona;
using testutil::C;
using testutil::V;

namespace {

const std::vector<std::string>& sv() { return surf_vars(); }
MPoly SX() { return V(sv(), "X"); }
MPoly SY() { return V(sv(), "Y"); }
MPoly SZ() { return V(sv(), "Z"); }

HypersurfacePoly z2_xy() { return HypersurfacePoly::make(SZ() * SZ() - SX() * SY()); }
HypersurfacePoly cubic() {
    return HypersurfacePoly::make(SZ().pow(3) - SX() * SZ() * Rat(3) + SY() * Rat(2));
}

}  // namespace

TEST_CASE("hypersurface validation") {
    CHECK_THROWS_AS(HypersurfacePoly::make(SZ() - SX()), DomainError);            // degree 1
    CHECK_THROWS_AS(HypersurfacePoly::make(SZ() * SZ() * Rat(2) - SX()), DomainError);  // not monic
    CHECK_THROWS_AS(HypersurfacePoly::make(SX() * SZ() * SZ() - SY()), DomainError);
    CHECK(z2_xy().z_degree() == 2);
}

TEST_CASE("discriminant locus of the model surfaces") {
    const auto d1 = discriminant_locus(z2_xy());
    CHECK(d1.disc == V(surf_plane_vars(), "X") * V(surf_plane_vars(), "Y") * Rat(4));
    CHECK_FALSE(d1.is_constant);

    // the reducible control (Z-1)(Z+1) has constant discriminant
    const auto d2 = discriminant_locus(HypersurfacePoly::make(SZ() * SZ() - C(sv(), 1)));
    CHECK(d2.disc == C(surf_plane_vars(), 4));
    CHECK(d2.is_constant);

    const auto d3 = discriminant_locus(cubic());
    const MPoly px = V(surf_plane_vars(), "X"), py = V(surf_plane_vars(), "Y");
    CHECK(d3.disc == px.pow(3) * Rat(108) - py * py * Rat(108));
    CHECK_FALSE(d3.is_constant);
}

TEST_CASE("fiber cardinalities") {
    CHECK(fiber_cardinality(z2_xy(), Rat(1), Rat(1)) == 2);
    CHECK(fiber_cardinality(z2_xy(), Rat(0), Rat(5)) == 1);
    // Z^3 - 3Z + 2 = (Z-1)^2 (Z+2)
    CHECK(fiber_cardinality(cubic(), Rat(1), Rat(1)) == 2);
    CHECK(fiber_cardinality(cubic(), Rat(0), Rat(0)) == 1);  // Z^3: triple root
    CHECK(fiber_cardinality(cubic(), Rat(1), Rat(0)) == 3);
}

TEST_CASE("fiber count is between 1 and d everywhere") {
    Rng rng(137);
    for (int i = 0; i < 30; ++i) {
        const Rat x0 = rng.small_rat(6, 3), y0 = rng.small_rat(6, 3);
        for (const auto& h : {z2_xy(), cubic()}) {
            const int c = fiber_cardinality(h, x0, y0);
            CHECK(c >= 1);
            CHECK(c <= h.z_degree());
        }
    }
}

TEST_CASE("discriminant vanishing is equivalent to fiber drop") {
    Rng rng(139);
    for (const auto& h : {z2_xy(), cubic()}) {
        const auto locus = discriminant_locus(h);
        int on = 0, off = 0;
        while (on < 8 || off < 8) {
            Rat x0 = rng.small_rat(4, 2), y0 = rng.small_rat(4, 2);
            const bool disc_zero = locus.disc.eval({x0, y0}).is_zero();
            const bool drop = fiber_cardinality(h, x0, y0) < h.z_degree();
            CHECK(disc_zero == drop);
            if (disc_zero) ++on;
            else ++off;
            if (off >= 8 && on < 8) {
                // force on-curve samples
                for (const auto& s : sample_points_on_curve(locus.disc, 8, 1000)) {
                    CHECK(fiber_cardinality(h, s.first, s.second) < h.z_degree());
                    ++on;
                }
            }
        }
    }
}

TEST_CASE("specialize-then-discriminant agrees with discriminant-then-specialize") {
    Rng rng(149);
    for (const auto& h : {z2_xy(), cubic()}) {
        const auto locus = discriminant_locus(h);
        for (int i = 0; i < 12; ++i) {
            const Rat x0 = rng.small_rat(5, 2), y0 = rng.small_rat(5, 2);
            const MPoly fiber = h.poly().eval_partial(0, x0).eval_partial(1, y0);
            const MPoly spec_disc = discriminant(fiber, 2);
            CHECK(spec_disc.as_constant() == locus.disc.eval({x0, y0}));
        }
    }
}

TEST_CASE("subresultant agrees with the resultant at index zero") {
    const MPoly f = SZ().pow(3) - SX() * SZ() * Rat(3) + SY() * Rat(2);
    const MPoly g = f.derivative(2);
    CHECK(subresultant(f, g, 2, 0) == resultant(f, g, 2));
    // and the first subresultant of the cubic locates the double root
    const MPoly s1 = subresultant(f, g, 2, 1);
    CHECK(s1 == SY() * Rat(18) - SX() * SZ() * Rat(18));
}

TEST_CASE("ramification over a discriminant component: Z^2 = XY over X = 0") {
    const MPoly delta = V(surf_plane_vars(), "X");
    const auto rep = ramification_over_component(
        z2_xy(), delta, {{Rat(0), Rat(1)}, {Rat(0), Rat(-2)}});
    CHECK(rep.generic_fiber == 2);
    CHECK(rep.fiber_drops_on_curve);
    CHECK(rep.full_fiber_off_curve);
    CHECK(rep.double_root_pattern);
    for (const auto& [pt, c] : rep.on_curve_fibers) CHECK(c == 1);
    for (const auto& [pt, c] : rep.control_fibers) CHECK(c == 2);
}

TEST_CASE("ramification over the symmetric component Y = 0") {
    const MPoly delta = V(surf_plane_vars(), "Y");
    const auto rep = ramification_over_component(
        z2_xy(), delta, {{Rat(1), Rat(0)}, {Rat(-3), Rat(0)}});
    CHECK(rep.fiber_drops_on_curve);
    CHECK(rep.full_fiber_off_curve);
    CHECK(rep.double_root_pattern);
}

TEST_CASE("non-components are rejected") {
    const MPoly delta = V(surf_plane_vars(), "X") + V(surf_plane_vars(), "Y");
    CHECK_THROWS_AS(ramification_over_component(z2_xy(), delta, {{Rat(1), Rat(-1)}}),
                    DomainError);
    // sample off the curve
    CHECK_THROWS_AS(ramification_over_component(z2_xy(), V(surf_plane_vars(), "X"),
                                                {{Rat(1), Rat(1)}}),
                    StructuralError);
}

TEST_CASE("curve sampling helpers") {
    const MPoly parabola =
        V(surf_plane_vars(), "Y") - V(surf_plane_vars(), "X") * V(surf_plane_vars(), "X");
    const auto pts = sample_points_on_curve(parabola, 6, 500);
    CHECK(pts.size() == 6);
    for (const auto& [x0, y0] : pts) CHECK(parabola.eval({x0, y0}).is_zero());

    const auto off = sample_points_off_curve(parabola, 5, 500);
    CHECK(off.size() == 5);
    for (const auto& [x0, y0] : off) CHECK_FALSE(parabola.eval({x0, y0}).is_zero());

    // a curve with no rational points fails loudly
    const MPoly circle_neg = V(surf_plane_vars(), "X") * V(surf_plane_vars(), "X") +
                             V(surf_plane_vars(), "Y") * V(surf_plane_vars(), "Y") +
                             C(surf_plane_vars(), 1);
    CHECK_THROWS_AS(sample_points_on_curve(circle_neg, 1, 60), BudgetError);
}

TEST_CASE("hypersurface json round-trip with variable roles") {
    const HypersurfacePoly h = cubic();
    const Json j = h.to_json();
    CHECK(HypersurfacePoly::from_json(j).poly() == h.poly());

    // roles may rename: provide the polynomial in (a, b, c)
    Json renamed;
    renamed["roles"] = Json{{"x", "a"}, {"y", "b"}, {"z", "c"}};
    const std::vector<std::string> abc = {"a", "b", "c"};
    MPoly q(abc);
    q.set_coeff({0, 0, 2}, Rat(1));
    q.set_coeff({1, 0, 0}, Rat(-1));
    renamed["poly"] = poly_to_json(q);
    const HypersurfacePoly back = HypersurfacePoly::from_json(renamed);
    CHECK(back.poly() == SZ() * SZ() - SX());
}
