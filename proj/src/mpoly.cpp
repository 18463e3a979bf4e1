#include "cremona/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cremona {

bool GrlexDesc::operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;  // lexicographic on the declared variable order
}

MPoly MPoly::constant(std::vector<std::string> vars, const Rat& c) {
    MPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
    return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, std::size_t index) {
    if (index >= vars.size()) throw StructuralError("variable index out of range");
    MPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rat(1));
    return p;
}

MPoly MPoly::monomial(std::vector<std::string> vars, Exponents exp, const Rat& c) {
    if (exp.size() != vars.size()) throw StructuralError("exponent arity mismatch");
    for (int e : exp)
        if (e < 0) throw StructuralError("negative exponent");
    MPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(std::move(exp), c);
    return p;
}

std::size_t MPoly::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw StructuralError("unknown variable '" + name + "'");
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat MPoly::constant_term() const {
    auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat MPoly::as_constant() const {
    if (!is_constant()) throw DomainError("polynomial is not constant");
    return constant_term();
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;  // grlex leading term has max degree
    return std::accumulate(e.begin(), e.end(), 0);
}

int MPoly::degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return terms_.empty() ? -1 : d;
}

bool MPoly::depends_on(std::size_t var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] > 0) return true;
    return false;
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree();
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    return true;
}

Rat MPoly::coeff(const Exponents& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::set_coeff(const Exponents& exp, const Rat& c) {
    if (exp.size() != vars_.size()) throw StructuralError("exponent arity mismatch");
    if (c.is_zero())
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

const std::pair<const Exponents, Rat>& MPoly::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return *terms_.begin();
}

Rat MPoly::leading_coeff() const { return leading_term().second; }

void MPoly::check_same_vars(const MPoly& o) const {
    if (vars_ != o.vars_) throw StructuralError("variable-list mismatch");
}

MPoly MPoly::operator-() const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_same_vars(b);
    MPoly r(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            const Rat c = ca * cb;
            auto [it, inserted] = r.terms_.try_emplace(e, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

MPoly MPoly::operator*(const Rat& c) const {
    MPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

MPoly MPoly::operator/(const Rat& c) const {
    if (c.is_zero()) throw DomainError("division by zero scalar");
    return *this * c.inverse();
}

MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

MPoly MPoly::pow(int e) const {
    if (e < 0) throw DomainError("negative polynomial power");
    MPoly r = constant(vars_, Rat(1));
    MPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

MPoly MPoly::derivative(std::size_t var) const {
    if (var >= vars_.size()) throw StructuralError("variable index out of range");
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.terms_.emplace(std::move(d), c * Rat(e[var]));
    }
    return r;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
    if (point.size() != vars_.size()) throw StructuralError("evaluation arity mismatch");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

MPoly MPoly::substituted(const std::vector<MPoly>& images) const {
    if (images.size() != vars_.size()) throw StructuralError("substitution arity mismatch");
    std::vector<std::string> tvars =
        images.empty() ? vars_ : images.front().vars();
    for (const auto& im : images)
        if (im.vars() != tvars) throw StructuralError("substitution images disagree on variables");

    // power cache per variable
    std::vector<std::vector<MPoly>> powers(images.size());
    auto power = [&](std::size_t i, int e) -> const MPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(MPoly::constant(tvars, Rat(1)));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };

    MPoly acc(tvars);
    for (const auto& [e, c] : terms_) {
        MPoly t = MPoly::constant(tvars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * power(i, e[i]);
        acc += t;
    }
    return acc;
}

MPoly MPoly::eval_partial(std::size_t var, const Rat& value) const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int k = 0; k < e[var]; ++k) t *= value;
        if (t.is_zero()) continue;
        Exponents d = e;
        d[var] = 0;
        auto [it, inserted] = r.terms_.try_emplace(std::move(d), t);
        if (!inserted) {
            it->second += t;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

std::vector<MPoly> MPoly::coeffs_in(std::size_t var) const {
    const int d = std::max(degree_in(var), 0);
    std::vector<MPoly> out(static_cast<std::size_t>(d) + 1, MPoly(vars_));
    for (const auto& [e, c] : terms_) {
        Exponents r = e;
        const int k = r[var];
        r[var] = 0;
        out[k].terms_.emplace(std::move(r), c);
    }
    return out;
}

MPoly MPoly::from_coeffs_in(std::size_t var, const std::vector<MPoly>& coeffs,
                            const std::vector<std::string>& vars) {
    MPoly acc(vars);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].vars() != vars) throw StructuralError("coefficient variable mismatch");
        if (coeffs[k].depends_on(var)) throw StructuralError("coefficient depends on main variable");
        for (const auto& [e, c] : coeffs[k].terms_) {
            Exponents x = e;
            x[var] = static_cast<int>(k);
            acc.terms_.emplace(std::move(x), c);
        }
    }
    return acc;
}

MPoly MPoly::renamed(const std::vector<std::string>& new_vars) const {
    if (new_vars.size() != vars_.size()) throw StructuralError("rename arity mismatch");
    MPoly r(new_vars);
    r.terms_ = terms_;
    return r;
}

MPoly MPoly::with_vars(const std::vector<std::string>& super_vars) const {
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(super_vars.begin(), super_vars.end(), vars_[i]);
        if (it == super_vars.end())
            throw StructuralError("variable '" + vars_[i] + "' missing from superset");
        where[i] = static_cast<std::size_t>(it - super_vars.begin());
    }
    MPoly r(super_vars);
    for (const auto& [e, c] : terms_) {
        Exponents x(super_vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) x[where[i]] = e[i];
        r.terms_.emplace(std::move(x), c);
    }
    return r;
}

MPoly MPoly::restricted_to(const std::vector<std::string>& sub_vars) const {
    std::vector<std::size_t> where(sub_vars.size());
    for (std::size_t i = 0; i < sub_vars.size(); ++i)
        where[i] = var_index(sub_vars[i]);
    std::vector<bool> kept(vars_.size(), false);
    for (auto w : where) kept[w] = true;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (!kept[i] && depends_on(i))
            throw StructuralError("polynomial depends on dropped variable '" + vars_[i] + "'");
    MPoly r(sub_vars);
    for (const auto& [e, c] : terms_) {
        Exponents x(sub_vars.size());
        for (std::size_t i = 0; i < where.size(); ++i) x[i] = e[where[i]];
        r.terms_.emplace(std::move(x), c);
    }
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const Rat a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool has_var = std::any_of(e.begin(), e.end(), [](int k) { return k > 0; });
        if (!has_var || !a.is_one()) os << a.str();
        bool star = !has_var || !a.is_one();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (star) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            star = true;
        }
    }
    return os.str();
}

std::optional<MPoly> exact_divide(const MPoly& f, const MPoly& g) {
    if (g.is_zero()) throw DomainError("exact division by zero polynomial");
    if (f.vars() != g.vars()) throw StructuralError("variable-list mismatch");
    MPoly q(f.vars());
    MPoly r = f;
    const auto& [eg, cg] = g.leading_term();
    while (!r.is_zero()) {
        const auto& [er, cr] = r.leading_term();
        Exponents d(er.size());
        for (std::size_t i = 0; i < er.size(); ++i) {
            d[i] = er[i] - eg[i];
            if (d[i] < 0) return std::nullopt;
        }
        MPoly t = MPoly::monomial(f.vars(), std::move(d), cr / cg);
        q += t;
        r -= t * g;
    }
    return q;
}

int ord_divide(const MPoly& f, const MPoly& d) {
    if (f.is_zero()) throw DomainError("order of the zero polynomial is undefined");
    if (d.is_constant()) throw StructuralError("order along a constant polynomial");
    int k = 0;
    MPoly cur = f;
    for (;;) {
        auto q = exact_divide(cur, d);
        if (!q) return k;
        cur = std::move(*q);
        ++k;
    }
}

MPoly integer_primitive(const MPoly& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& [e, c] : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
    }
    Rat scale = Rat::from_mpq(mpq_class(den_lcm, num_gcd));
    if (p.leading_coeff().sign() * scale.sign() < 0) scale = -scale;
    return p * scale;
}

namespace {

// Content of p with respect to var: gcd of its coefficients (which do not
// depend on var).
MPoly content_in(const MPoly& p, std::size_t var) {
    MPoly g(p.vars());
    for (const auto& c : p.coeffs_in(var)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

MPoly primitive_in(const MPoly& p, std::size_t var) {
    if (p.is_zero()) return p;
    const MPoly c = content_in(p, var);
    auto q = exact_divide(p, c);
    // content divides by construction
    return integer_primitive(*q);
}

// Pseudo-remainder of f by g with respect to var: the remainder of
// lc(g)^(deg f - deg g + 1) * f under g.
MPoly prem(const MPoly& f, const MPoly& g, std::size_t var) {
    const int dg = g.degree_in(var);
    auto gc = g.coeffs_in(var);
    const MPoly lcg = gc.back();
    MPoly r = f;
    int e = f.degree_in(var) - dg + 1;
    while (!r.is_zero() && r.degree_in(var) >= dg) {
        const int dr = r.degree_in(var);
        auto rc = r.coeffs_in(var);
        const MPoly& lr = rc.back();
        MPoly shift = MPoly::variable(f.vars(), var).pow(dr - dg);
        r = lcg * r - lr * shift * g;
        --e;
    }
    if (e > 0) r = r * lcg.pow(e);
    return r;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
    if (a.vars() != b.vars()) throw StructuralError("variable-list mismatch");
    if (a.is_zero()) return integer_primitive(b);
    if (b.is_zero()) return integer_primitive(a);
    if (a.is_constant() || b.is_constant())
        return MPoly::constant(a.vars(), Rat(1));  // nonzero constants are units over Q

    // main variable: highest index occurring in either
    std::size_t v = 0;
    bool found = false;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a.depends_on(i) || b.depends_on(i)) {
            v = i;
            found = true;
            break;
        }
    }
    if (!found) return MPoly::constant(a.vars(), Rat(1));

    if (!a.depends_on(v)) return gcd(a, content_in(b, v));
    if (!b.depends_on(v)) return gcd(content_in(a, v), b);

    const MPoly ca = content_in(a, v);
    const MPoly cb = content_in(b, v);
    MPoly r0 = integer_primitive(*exact_divide(a, ca));
    MPoly r1 = integer_primitive(*exact_divide(b, cb));
    if (r0.degree_in(v) < r1.degree_in(v)) std::swap(r0, r1);
    while (!r1.is_zero()) {
        MPoly r = prem(r0, r1, v);
        r0 = std::move(r1);
        r1 = r.is_zero() ? std::move(r) : primitive_in(r, v);
    }
    const MPoly g = primitive_in(r0, v);
    return integer_primitive(gcd(ca, cb) * g);
}

MPoly poly_det(std::vector<std::vector<MPoly>> m) {
    const std::size_t n = m.size();
    if (n == 0) throw StructuralError("determinant of empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw StructuralError("determinant of non-square matrix");
    const auto& vars = m[0][0].vars();
    int sign = 1;
    MPoly prev = MPoly::constant(vars, Rat(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t l = k + 1;
            while (l < n && m[l][k].is_zero()) ++l;
            if (l == n) return MPoly(vars);  // singular
            std::swap(m[k], m[l]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = exact_divide(t, prev);
                if (!q) throw DomainError("Bareiss division failed");  // cannot happen
                m[i][j] = std::move(*q);
            }
            m[i][k] = MPoly(vars);
        }
        prev = m[k][k];
        if (prev.is_zero()) return MPoly(vars);
    }
    MPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

MPoly resultant(const MPoly& f, const MPoly& g, std::size_t var) {
    if (f.vars() != g.vars()) throw StructuralError("variable-list mismatch");
    if (f.is_zero() || g.is_zero()) throw DomainError("resultant with zero polynomial");
    const int m = f.degree_in(var);
    const int n = g.degree_in(var);
    if (m <= 0 && n <= 0)
        throw DegeneracyError("resultant: both polynomials constant in the variable");
    if (m == 0) return f.pow(n);
    if (n == 0) return g.pow(m);

    const auto fc = f.coeffs_in(var);
    const auto gc = g.coeffs_in(var);
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<MPoly>> s(size, std::vector<MPoly>(size, MPoly(f.vars())));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i) s[row][row + i] = fc[static_cast<std::size_t>(m - i)];
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i) s[n + row][row + i] = gc[static_cast<std::size_t>(n - i)];
    return poly_det(std::move(s));
}

MPoly discriminant(const MPoly& f, std::size_t var) {
    const int d = f.degree_in(var);
    if (d < 2) throw DomainError("discriminant needs degree >= 2 in the variable");
    const MPoly lead = f.coeffs_in(var).back();
    if (!lead.is_constant() || !lead.as_constant().is_one())
        throw DomainError("discriminant requires a monic polynomial");
    MPoly res = resultant(f, f.derivative(var), var);
    const long sign_exp = static_cast<long>(d) * (d - 1) / 2;
    return (sign_exp % 2 == 0) ? res : -res;
}

SquarefreeData squarefree_data(const MPoly& f) {
    if (f.is_zero()) throw DomainError("squarefree data of the zero polynomial");
    std::size_t var = 0;
    int occurring = 0;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        if (f.depends_on(i)) {
            var = i;
            ++occurring;
        }
    }
    if (occurring > 1) throw StructuralError("squarefree data requires a univariate polynomial");
    if (occurring == 0) return {MPoly::constant(f.vars(), Rat(1)), true};
    const MPoly g = gcd(f, f.derivative(var));
    auto q = exact_divide(f, g);
    return {integer_primitive(*q), g.degree_in(var) == 0};
}

namespace {

constexpr long kTrialDivisionBudget = 2'000'000;

std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    if (n == 0) throw DomainError("divisors of zero");
    std::vector<std::pair<mpz_class, int>> factors;
    long steps = 0;
    mpz_class d(2);
    while (d * d <= n) {
        if (++steps > kTrialDivisionBudget)
            throw BudgetError("trial-division budget exhausted during root search");
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            factors.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<mpz_class> divs{mpz_class(1)};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        mpz_class pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace

std::vector<std::pair<Rat, int>> rational_roots(const MPoly& f) {
    if (f.is_zero()) throw DomainError("roots of the zero polynomial");
    std::size_t var = 0;
    int occurring = 0;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        if (f.depends_on(i)) {
            var = i;
            ++occurring;
        }
    }
    if (occurring > 1) throw StructuralError("rational roots of a multivariate polynomial");
    std::vector<std::pair<Rat, int>> roots;
    if (occurring == 0) return roots;

    MPoly p = integer_primitive(f);
    // strip the root at zero
    int zero_mult = 0;
    {
        const MPoly x = MPoly::variable(p.vars(), var);
        while (true) {
            auto q = exact_divide(p, x);
            if (!q) break;
            p = std::move(*q);
            ++zero_mult;
        }
    }
    if (zero_mult > 0) roots.emplace_back(Rat(0), zero_mult);
    if (p.degree_in(var) >= 1) {
        const auto coeffs = p.coeffs_in(var);
        const mpz_class a0 = coeffs.front().as_constant().num();
        const mpz_class an = coeffs.back().as_constant().num();
        for (const auto& pp : positive_divisors(a0)) {
            for (const auto& qq : positive_divisors(an)) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), pp.get_mpz_t(), qq.get_mpz_t());
                if (g != 1) continue;
                for (int s : {1, -1}) {
                    const Rat cand = Rat::from_mpq(mpq_class(s * pp, qq));
                    if (!p.eval_partial(var, cand).is_zero()) continue;
                    // divide out (q*var - p) to full multiplicity
                    MPoly lin = MPoly::variable(p.vars(), var) * Rat::from_mpq(mpq_class(qq)) -
                                MPoly::constant(p.vars(), Rat::from_mpq(mpq_class(s * pp)));
                    int mult = 0;
                    for (;;) {
                        auto q2 = exact_divide(p, lin);
                        if (!q2) break;
                        p = std::move(*q2);
                        ++mult;
                    }
                    roots.emplace_back(cand, mult);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

}  // namespace cremona
