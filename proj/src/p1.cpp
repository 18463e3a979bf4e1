#include "cremona/p1.hpp"

#include <sstream>

#include "cremona/rng.hpp"

namespace cremona {

const std::vector<std::string>& p1_var() {
    static const std::vector<std::string> v = {"z"};
    return v;
}

P1Map P1Map::make(MPoly num, MPoly den) {
    if (num.vars() != p1_var() || den.vars() != p1_var())
        throw StructuralError("sphere maps must use the variable z");
    if (den.is_zero()) throw DomainError("sphere map with zero denominator");
    if (num.is_zero()) throw DomainError("sphere map must not be identically zero");
    const MPoly g = gcd(num, den);
    if (!g.is_constant()) {
        num = *exact_divide(num, g);
        den = *exact_divide(den, g);
    }
    if (num.is_constant() && den.is_constant())
        throw DomainError("constant maps have degree 0 and are not sphere self-maps");
    const Rat scale = integer_primitive(den).leading_coeff() / den.leading_coeff();
    P1Map m;
    m.num_ = num * scale;
    m.den_ = den * scale;
    return m;
}

P1Map P1Map::from_poly(MPoly num) { return make(std::move(num), MPoly::constant(p1_var(), Rat(1))); }

int P1Map::degree() const { return std::max(num_.degree_in(0), den_.degree_in(0)); }

Json P1Map::to_json() const {
    Json j;
    j["num"] = poly_to_json(num_);
    j["den"] = poly_to_json(den_);
    return j;
}

P1Map P1Map::from_json(const Json& j) {
    if (!j.is_object()) throw StructuralError("sphere map JSON must be an object");
    reject_unknown_keys(j, {"num", "den"}, "sphere map");
    if (!j.contains("num") || !j.contains("den"))
        throw StructuralError("sphere map needs 'num' and 'den'");
    return make(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

P1Map compose(const P1Map& outer, const P1Map& inner) {
    const int m = outer.degree();
    const auto nc = outer.num().coeffs_in(0);
    const auto dc = outer.den().coeffs_in(0);
    MPoly num(p1_var()), den(p1_var());
    for (int k = 0; k <= m; ++k) {
        const MPoly pw = inner.num().pow(k) * inner.den().pow(m - k);
        if (k < static_cast<int>(nc.size()) && !nc[static_cast<std::size_t>(k)].is_zero())
            num += pw * nc[static_cast<std::size_t>(k)].as_constant();
        if (k < static_cast<int>(dc.size()) && !dc[static_cast<std::size_t>(k)].is_zero())
            den += pw * dc[static_cast<std::size_t>(k)].as_constant();
    }
    return P1Map::make(std::move(num), std::move(den));
}

bool is_unramified_over(const P1Map& m, const Rat& a) {
    const MPoly fiber = m.num() - m.den() * a;
    if (fiber.degree_in(0) != m.degree()) return false;  // a point of the fiber sits at infinity
    return squarefree_data(fiber).is_squarefree;
}

P1Tower P1Tower::make(std::vector<P1Map> maps) {
    if (maps.empty()) throw StructuralError("sphere tower must be nonempty");
    P1Tower t;
    for (const auto& m : maps) {
        if (m.degree() < 2)
            throw DomainError("sphere tower members must have degree at least 2");
    }
    t.maps_ = std::move(maps);
    long expected = 1;
    for (std::size_t j = 0; j < t.maps_.size(); ++j) {
        expected *= t.maps_[j].degree();
        t.phi_.push_back(j == 0 ? t.maps_[0] : compose(t.phi_[j - 1], t.maps_[j]));
        if (t.phi_[j].degree() != expected)
            throw DomainError("composition degree dropped; maps were not reduced");
    }
    return t;
}

long P1Tower::fiber_count(int level) const {
    if (level < 0 || level >= size()) throw StructuralError("tower level out of range");
    long m = 1;
    for (int i = 0; i <= level; ++i) m *= maps_[static_cast<std::size_t>(i)].degree();
    return m;
}

Json P1Tower::to_json() const {
    Json arr = Json::array();
    for (const auto& m : maps_) arr.push_back(m.to_json());
    Json j;
    j["maps"] = std::move(arr);
    return j;
}

P1Tower P1Tower::from_json(const Json& j) {
    if (!j.is_object()) throw StructuralError("tower JSON must be an object");
    reject_unknown_keys(j, {"maps"}, "sphere tower");
    if (!j.contains("maps") || !j["maps"].is_array())
        throw StructuralError("sphere tower needs a 'maps' array");
    std::vector<P1Map> maps;
    for (const auto& jm : j["maps"]) maps.push_back(P1Map::from_json(jm));
    return make(std::move(maps));
}

Rat find_common_unramified_value(const P1Tower& t, int budget) {
    RationalEnumeration en;
    std::ostringstream obstructions;
    int reported = 0;
    for (int attempt = 0; attempt < budget; ++attempt) {
        const Rat a = en.next();
        int bad_level = -1;
        for (int j = 0; j < t.size(); ++j) {
            if (!is_unramified_over(t.compositions()[static_cast<std::size_t>(j)], a)) {
                bad_level = j;
                break;
            }
        }
        if (bad_level < 0) return a;
        if (reported < 8) {
            obstructions << " a=" << a.str() << " fails at level " << bad_level << ";";
            ++reported;
        }
    }
    throw BudgetError("no common unramified value within budget " + std::to_string(budget) +
                      ":" + obstructions.str());
}

FiberFactorizationReport fiber_factorization_check(const P1Tower& t, int level, const Rat& a) {
    if (level < 0 || level >= t.size()) throw StructuralError("tower level out of range");
    const P1Map& phi = t.compositions()[static_cast<std::size_t>(level)];
    if (!is_unramified_over(phi, a))
        throw DomainError("fiber factorization requires an unramified value");
    FiberFactorizationReport r;
    r.m_j = t.fiber_count(level);
    r.fiber_poly = phi.num() - phi.den() * a;
    r.simple_zeroes = squarefree_data(r.fiber_poly).is_squarefree &&
                      r.fiber_poly.degree_in(0) == r.m_j;
    r.matches_eq_fact = gcd(r.fiber_poly, phi.den()).is_constant();
    return r;
}

ValuePullbackDecomposition value_pullback_decomposition(const P1Map& r, const Rat& alpha) {
    ValuePullbackDecomposition d;
    d.zero_poly = r.num() - r.den() * alpha;
    d.q = r.den();
    if (d.zero_poly.is_zero()) throw DomainError("map is the constant alpha");  // cannot happen
    d.numerator_constant = d.zero_poly.is_constant();
    return d;
}

}  // namespace cremona
