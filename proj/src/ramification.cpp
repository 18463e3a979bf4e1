#include "cremona/ramification.hpp"

#include "cremona/blowup.hpp"
#include "cremona/solve.hpp"

namespace cremona {

RatFn RatFn::make(MPoly num, MPoly den) {
    if (num.vars() != den.vars()) throw StructuralError("variable-list mismatch");
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
        RatFn r;
        r.num_ = std::move(num);
        r.den_ = MPoly::constant(den.vars(), Rat(1));
        return r;
    }
    const MPoly g = gcd(num, den);
    if (!g.is_constant()) {
        num = *exact_divide(num, g);
        den = *exact_divide(den, g);
    }
    const Rat scale = integer_primitive(den).leading_coeff() / den.leading_coeff();
    RatFn r;
    r.num_ = num * scale;
    r.den_ = den * scale;
    return r;
}

RatFn RatFn::from_poly(MPoly num) {
    const auto vars = num.vars();
    return make(std::move(num), MPoly::constant(vars, Rat(1)));
}

RatFn RatFn::operator+(const RatFn& o) const {
    return make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const {
    return make(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator*(const RatFn& o) const { return make(num_ * o.num_, den_ * o.den_); }

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero()) throw DomainError("division by the zero function");
    return make(num_ * o.den_, den_ * o.num_);
}

RatFn RatFn::derivative(std::size_t var) const {
    return make(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFn RatFn::eval_poly(const MPoly& p, const std::vector<RatFn>& args) {
    if (args.size() != p.nvars()) throw StructuralError("substitution arity mismatch");
    const auto& vars = args.empty() ? p.vars() : args.front().num().vars();
    RatFn acc = RatFn::from_poly(MPoly(vars));
    for (const auto& [e, c] : p.terms()) {
        RatFn t = RatFn::from_poly(MPoly::constant(vars, c));
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t = t * args[i];
        acc = acc + t;
    }
    return acc;
}

Json RatFn::to_json() const {
    Json j;
    j["num"] = poly_to_json(num_);
    j["den"] = poly_to_json(den_);
    return j;
}

RatFn RatFn::from_json(const Json& j, const std::vector<std::string>& expected_vars) {
    if (!j.is_object()) throw StructuralError("rational function JSON must be an object");
    reject_unknown_keys(j, {"num", "den"}, "rational function");
    if (!j.contains("num") || !j.contains("den"))
        throw StructuralError("rational function needs 'num' and 'den'");
    MPoly num = poly_from_json(j["num"]);
    MPoly den = poly_from_json(j["den"]);
    if (num.vars() != expected_vars || den.vars() != expected_vars)
        throw StructuralError("rational function must use the chart variables");
    return make(std::move(num), std::move(den));
}

AffineRatMap AffineRatMap::make(RatFn f1, RatFn f2) {
    if (f1.num().vars() != base_vars() || f2.num().vars() != base_vars())
        throw StructuralError("affine maps must use the chart variables x, y");
    AffineRatMap m;
    m.f_ = {std::move(f1), std::move(f2)};
    return m;
}

AffineRatMap AffineRatMap::identity() {
    return make(RatFn::from_poly(MPoly::variable(base_vars(), 0)),
                RatFn::from_poly(MPoly::variable(base_vars(), 1)));
}

Json AffineRatMap::to_json() const {
    Json j;
    j["components"] = Json::array({f_[0].to_json(), f_[1].to_json()});
    return j;
}

AffineRatMap AffineRatMap::from_json(const Json& j) {
    if (!j.is_object()) throw StructuralError("affine map JSON must be an object");
    reject_unknown_keys(j, {"components"}, "affine map");
    if (!j.contains("components") || !j["components"].is_array() || j["components"].size() != 2)
        throw StructuralError("affine map needs two 'components'");
    return make(RatFn::from_json(j["components"][0], base_vars()),
                RatFn::from_json(j["components"][1], base_vars()));
}

CurveGerm CurveGerm::make(MPoly delta, bool asserted_irreducible) {
    if (!asserted_irreducible)
        throw StructuralError("curve germs require the caller's irreducibility assertion");
    if (delta.vars() != base_vars())
        throw StructuralError("curve germs must use the chart variables x, y");
    if (delta.is_zero() || delta.is_constant())
        throw DomainError("curve germ must be a non-constant polynomial");
    if (integer_primitive(delta) != squarefree_part_multi(delta))
        throw DomainError("curve germ is not squarefree; it cannot be irreducible");
    CurveGerm g;
    g.delta_ = integer_primitive(delta);
    return g;
}

Json CurveGerm::to_json() const {
    Json j;
    j["delta"] = poly_to_json(delta_);
    j["asserted_irreducible"] = true;
    return j;
}

CurveGerm CurveGerm::from_json(const Json& j) {
    if (!j.is_object()) throw StructuralError("curve germ JSON must be an object");
    reject_unknown_keys(j, {"delta", "asserted_irreducible"}, "curve germ");
    if (!j.contains("delta") || !j.contains("asserted_irreducible") ||
        !j["asserted_irreducible"].is_boolean())
        throw StructuralError("curve germ needs 'delta' and 'asserted_irreducible'");
    MPoly delta = poly_from_json(j["delta"]);
    if (delta.vars() != base_vars())
        throw StructuralError("curve germs must use the chart variables x, y");
    return make(std::move(delta), j["asserted_irreducible"].get<bool>());
}

RatFn jacobian_det(const AffineRatMap& phi) {
    const RatFn& f1 = phi.component(0);
    const RatFn& f2 = phi.component(1);
    return f1.derivative(0) * f2.derivative(1) - f1.derivative(1) * f2.derivative(0);
}

namespace {

void reject_pole_germ(const AffineRatMap& phi, const CurveGerm& d, const char* who) {
    for (std::size_t i = 0; i < 2; ++i) {
        if (exact_divide(phi.component(i).den(), d.delta()).has_value())
            throw DomainError(std::string(who) +
                              ": germ lies in a pole divisor; a chart switch is required");
    }
}

}  // namespace

bool is_contracted(const AffineRatMap& phi, const CurveGerm& d) {
    reject_pole_germ(phi, d, "is_contracted");
    const MPoly& delta = d.delta();
    const MPoly dx = delta.derivative(0);
    const MPoly dy = delta.derivative(1);
    for (std::size_t i = 0; i < 2; ++i) {
        const MPoly& f = phi.component(i).num();
        const MPoly& g = phi.component(i).den();
        const MPoly wron =
            (g * f.derivative(0) - f * g.derivative(0)) * dy -
            (g * f.derivative(1) - f * g.derivative(1)) * dx;
        if (wron.is_zero()) continue;  // component constant everywhere
        if (!exact_divide(wron, delta).has_value()) return false;
    }
    return true;
}

int ram_index(const AffineRatMap& phi, const CurveGerm& d) {
    const RatFn jac = jacobian_det(phi);
    if (jac.is_zero()) throw DegeneracyError("ramification index with identically zero Jacobian");
    if (is_contracted(phi, d))
        throw DomainError("ramification index undefined: the germ is contracted to a point");
    const int num_ord = ord_divide(jac.num(), d.delta());
    const int den_ord = ord_divide(jac.den(), d.delta());
    if (den_ord != 0)
        throw DomainError("Jacobian has a pole along the germ; a chart switch is required");
    return 1 + num_ord - den_ord;
}

bool is_strongly_ramified(const AffineRatMap& phi, const CurveGerm& d) {
    if (jacobian_det(phi).is_zero())
        throw DegeneracyError("strong ramification with identically zero Jacobian");
    if (is_contracted(phi, d)) return false;
    return ram_index(phi, d) > 1;
}

bool image_in_curve(const AffineRatMap& phi, const CurveGerm& d1, const CurveGerm& d2) {
    if (is_contracted(phi, d1))
        throw DomainError("image_in_curve: the source germ is contracted");
    const RatFn pulled =
        RatFn::eval_poly(d2.delta(), {phi.component(0), phi.component(1)});
    if (exact_divide(pulled.den(), d1.delta()).has_value())
        throw DomainError("image_in_curve: pole along the source germ");
    return exact_divide(pulled.num(), d1.delta()).has_value();
}

AffineRatMap compose(const AffineRatMap& outer, const AffineRatMap& inner) {
    const std::vector<RatFn> args = {inner.component(0), inner.component(1)};
    const RatFn c1 = RatFn::eval_poly(outer.component(0).num(), args) /
                     RatFn::eval_poly(outer.component(0).den(), args);
    const RatFn c2 = RatFn::eval_poly(outer.component(1).num(), args) /
                     RatFn::eval_poly(outer.component(1).den(), args);
    return AffineRatMap::make(c1, c2);
}

MultiplicativityReport check_multiplicativity(const AffineRatMap& phi, const AffineRatMap& psi,
                                              const CurveGerm& d1, const CurveGerm& d2) {
    if (!image_in_curve(phi, d1, d2))
        throw DomainError("multiplicativity: phi does not carry D1 into D2");
    MultiplicativityReport r;
    r.e_inner = ram_index(phi, d1);
    r.e_outer = ram_index(psi, d2);
    r.e_composite = ram_index(compose(psi, phi), d1);
    r.equal = (r.e_composite == r.e_inner * r.e_outer);
    return r;
}

TowerLedger tower_ledger(const std::vector<AffineRatMap>& maps,
                         const std::vector<CurveGerm>& germs) {
    if (maps.empty()) throw StructuralError("tower ledger needs at least one map");
    if (germs.size() != maps.size() + 1)
        throw StructuralError("tower ledger needs one germ per level plus the target");
    TowerLedger ledger;
    for (std::size_t j = 0; j < maps.size(); ++j) {
        if (!image_in_curve(maps[j], germs[j], germs[j + 1]))
            throw DomainError("tower ledger: chain hypothesis fails at level " +
                              std::to_string(j));
        const int e = ram_index(maps[j], germs[j]);
        ledger.level_indices.push_back(e);
        ledger.product *= e;
    }
    AffineRatMap composite = maps[0];
    for (std::size_t j = 1; j < maps.size(); ++j) composite = compose(maps[j], composite);
    ledger.composite_index = ram_index(composite, germs[0]);
    ledger.bound_holds = ledger.composite_index >= ledger.product;
    return ledger;
}

}  // namespace cremona
