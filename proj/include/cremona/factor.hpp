#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cremona/blowup.hpp"
#include "cremona/projective.hpp"

namespace cremona {

/// Rational function on the plane: coprime homogeneous forms of equal
/// degree. Closed under the chart-relation arithmetic used by the lifts.
class HomRatFn {
public:
    static HomRatFn make(MPoly num, MPoly den);
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    HomRatFn minus_const(const Rat& c) const;  // (num - c den) / den
    HomRatFn divided_by(const HomRatFn& o) const;

private:
    MPoly num_, den_;
};

/// Value in P^1(Q): a finite rational or the point at infinity.
struct P1Value {
    bool inf = false;
    Rat v{0};
    friend bool operator==(const P1Value& a, const P1Value& b) {
        return a.inf == b.inf && (a.inf || a.v == b.v);
    }
    friend bool operator!=(const P1Value& a, const P1Value& b) { return !(a == b); }
    std::string str() const { return inf ? "inf" : v.str(); }
    EPoint as_epoint(int curve) const { return EPoint{curve, inf, v}; }
};

/// Morphism from a parametrized line to P^1: coprime binary forms in (s, t).
class LineValue {
public:
    static LineValue make(MPoly num, MPoly den);
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_identically_zero() const { return num_.is_zero(); }
    bool is_constant() const;
    /// Projective degree of the morphism (0 for constants, 1 for a Mobius
    /// isomorphism onto P^1).
    int degree() const;
    P1Value at(const Rat& s0, const Rat& t0) const;

private:
    MPoly num_, den_;
};

/// Restriction of a plane rational function to a line via the canonical
/// parametrization s*P + t*Q from span_points.
LineValue restrict_fn(const HomRatFn& f, const PLine& line);

/// Exact parameter of a point on the line's canonical parametrization.
std::pair<Rat, Rat> param_of(const PLine& line, const PPoint& p);

/// Chart coordinate functions of the tower pulled back to the source plane
/// through a plane map: for a chart c, coords(c) gives (U, V) with
/// (U, V)(x) the c-coordinates of the lift of chi(x). Computed by composing
/// the inverse chart relations level by level and reducing each time.
class TowerLift {
public:
    TowerLift(const Tower& tower, const PlaneRatMap& chi);
    const std::array<HomRatFn, 2>& coords(const std::string& chart_id);

private:
    const Tower* tower_;
    std::array<HomRatFn, 2> base_;
    std::map<std::string, std::array<HomRatFn, 2>> cache_;
};

struct Lemma51Report {
    bool maps_into_exceptional = false;  // the lifted line lies on E
    bool iso_onto_exceptional = false;   // and the induced map is Mobius
    bool tangent_swap_ok = false;        // b -> dir(ac), c -> dir(ab)
    P1Value image_of_b, image_of_c, dir_ab, dir_ac;
    bool passed() const {
        return maps_into_exceptional && iso_onto_exceptional && tangent_swap_ok;
    }
};

/// Checks Lemma 5.1 for the identity map: psi = sigma^{-1} T_abc carries
/// the line bc isomorphically onto the exceptional curve of the blowup at
/// a, with b and c landing on the tangent directions of ac and ab (in that
/// swapped order).
Lemma51Report lemma51_check(const PPoint& a, const PPoint& b, const PPoint& c);

struct FactorizationResult {
    std::uint64_t seed = 0;
    std::vector<std::array<PPoint, 3>> triples;  // (a_j, b_j, c_j)
    std::vector<PlaneRatMap> transforms;         // T_j
    PlaneRatMap chi = PlaneRatMap::identity();
    std::map<int, PLine> line_assignment;  // exceptional index -> source line

    Json to_json() const;
    static FactorizationResult from_json(const Json& j);
};

/// The inductive construction: quadratic transformations T_0 ... T_{n-1}
/// whose composition chi makes every exceptional curve of the tower the
/// image of a plane line under pi^{-1} chi. Free choices are drawn from a
/// growing grid of small rationals with the seeded generator; every
/// constraint is checked exactly. The combined line bookkeeping transports
/// earlier lines through each transform, anchoring b_j and c_j on
/// transported lines when required, which supports towers of depth <= 4 in
/// general position.
FactorizationResult factor_tower(const Tower& tower, std::uint64_t seed,
                                 int budget_per_step = 4000);

struct VerificationClause {
    std::string name;
    int index = -1;  // level or curve index when applicable
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    bool passed = false;
    std::vector<VerificationClause> clauses;
    Json to_json() const;
};

/// Full re-check of a factorization: structural identities, per-curve chart
/// lifts (exceptional containment and non-contraction), the per-step side
/// conditions including the tangent pairing and Z-set avoidance.
VerificationReport verify_factorization(const Tower& tower, const FactorizationResult& result);

}  // namespace cremona
