#pragma once

#include <vector>

#include "cremona/jsonio.hpp"
#include "cremona/mpoly.hpp"

namespace cremona {

/// Reduced rational function: coprime numerator/denominator, denominator
/// canonicalized (integer primitive, positive leading coefficient).
class RatFn {
public:
    static RatFn make(MPoly num, MPoly den);
    static RatFn from_poly(MPoly num);
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn derivative(std::size_t var) const;
    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    /// Substitute rational functions for the variables of p.
    static RatFn eval_poly(const MPoly& p, const std::vector<RatFn>& args);

    Json to_json() const;
    static RatFn from_json(const Json& j, const std::vector<std::string>& expected_vars);

private:
    MPoly num_, den_;
};

/// Rational self-map of the affine plane in the chart variables (x, y).
class AffineRatMap {
public:
    static AffineRatMap make(RatFn f1, RatFn f2);
    static AffineRatMap identity();
    const RatFn& component(std::size_t i) const { return f_[i]; }

    Json to_json() const;
    static AffineRatMap from_json(const Json& j);

private:
    std::array<RatFn, 2> f_;
};

/// Irreducible curve germ V(delta) in the chart variables. Irreducibility
/// is the caller's assertion; squarefreeness is verified exactly.
class CurveGerm {
public:
    static CurveGerm make(MPoly delta, bool asserted_irreducible);
    const MPoly& delta() const { return delta_; }

    Json to_json() const;
    static CurveGerm from_json(const Json& j);

private:
    MPoly delta_;
};

/// Exact symbolic Jacobian determinant (possibly zero).
RatFn jacobian_det(const AffineRatMap& phi);

/// Whether phi maps V(delta) to a single point, decided by the
/// characteristic-zero Wronskian criterion: a component f/g is constant
/// along delta iff delta divides (g f_x - f g_x) delta_y - (g f_y - f g_y)
/// delta_x. Germs inside a component's pole divisor need a chart switch and
/// are rejected.
bool is_contracted(const AffineRatMap& phi, const CurveGerm& d);

/// 1 + ord_delta Jac(phi). Requires a non-contracted germ, a nonzero
/// Jacobian, and phi holomorphic along the germ (denominator order zero).
int ram_index(const AffineRatMap& phi, const CurveGerm& d);

/// Not contracted and ramification index > 1.
bool is_strongly_ramified(const AffineRatMap& phi, const CurveGerm& d);

/// Whether phi(V(delta1)) lies inside V(delta2): delta2 composed with phi,
/// cleared of denominators, is divisible by delta1.
bool image_in_curve(const AffineRatMap& phi, const CurveGerm& d1, const CurveGerm& d2);

/// outer after inner.
AffineRatMap compose(const AffineRatMap& outer, const AffineRatMap& inner);

struct MultiplicativityReport {
    int e_inner = 0;
    int e_outer = 0;
    int e_composite = 0;
    bool equal = false;
};

/// Computes e(phi,D1), e(psi,D2), e(psi o phi, D1) and verifies the product
/// law exactly. Hypothesis violations raise DomainError with a distinct
/// message each.
MultiplicativityReport check_multiplicativity(const AffineRatMap& phi, const AffineRatMap& psi,
                                              const CurveGerm& d1, const CurveGerm& d2);

struct TowerLedger {
    std::vector<int> level_indices;
    int product = 1;
    int composite_index = 0;
    bool bound_holds = false;  // composite >= product; equality in this model
};

/// Ramification ledger of a chain: maps[0] is applied first and carries
/// germs[0] into germs[1], and so on. germs must have one more entry than
/// maps.
TowerLedger tower_ledger(const std::vector<AffineRatMap>& maps,
                         const std::vector<CurveGerm>& germs);

}  // namespace cremona
