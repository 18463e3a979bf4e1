#include "cremona/solve.hpp"

#include <algorithm>

#include "cremona/errors.hpp"

namespace cremona {

MPoly squarefree_part_multi(const MPoly& f) {
    if (f.is_zero()) throw DomainError("squarefree part of zero");
    if (f.is_constant()) return MPoly::constant(f.vars(), Rat(1));
    MPoly g(f.vars());
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        if (!f.depends_on(i)) continue;
        g = gcd(g, f.derivative(i));
        if (g.is_constant() && !g.is_zero()) break;
    }
    g = gcd(f, g);
    auto q = exact_divide(f, g);
    return integer_primitive(*q);
}

MPoly form_resultant(const MPoly& a, const MPoly& b, std::size_t s_idx, std::size_t t_idx,
                     int deg_a, int deg_b) {
    if (a.vars() != b.vars()) throw StructuralError("variable-list mismatch");
    if (deg_a <= 0 || deg_b <= 0)
        throw DegeneracyError("form resultant needs positive formal degrees");
    const auto& vars = a.vars();
    // coefficient of s^(d-i) t^i, as a polynomial in the other variables
    auto coeff_vec = [&](const MPoly& f, int d) {
        std::vector<MPoly> out(static_cast<std::size_t>(d) + 1, MPoly(vars));
        for (const auto& [e, c] : f.terms()) {
            const int i = e[t_idx];
            if (e[s_idx] + i != d) throw StructuralError("not a binary form of the stated degree");
            Exponents r = e;
            r[s_idx] = 0;
            r[t_idx] = 0;
            MPoly mono = MPoly::monomial(vars, std::move(r), c);
            out[static_cast<std::size_t>(i)] += mono;
        }
        return out;
    };
    const auto ca = coeff_vec(a, deg_a);
    const auto cb = coeff_vec(b, deg_b);
    const std::size_t n = static_cast<std::size_t>(deg_a + deg_b);
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, MPoly(vars)));
    for (int row = 0; row < deg_b; ++row)
        for (int i = 0; i <= deg_a; ++i)
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + i)] =
                ca[static_cast<std::size_t>(deg_a - i)];
    for (int row = 0; row < deg_a; ++row)
        for (int i = 0; i <= deg_b; ++i)
            m[static_cast<std::size_t>(deg_b + row)][static_cast<std::size_t>(row + i)] =
                cb[static_cast<std::size_t>(deg_b - i)];
    return poly_det(std::move(m));
}

namespace {

// Univariate polynomial in vars[v_idx] only; evaluate u := value first.
MPoly specialize_u(const MPoly& p, std::size_t u_idx, const Rat& value) {
    return p.eval_partial(u_idx, value);
}

}  // namespace

std::vector<std::pair<Rat, Rat>> solve_bivariate(const MPoly& p, const MPoly& q,
                                                 std::size_t u_idx, std::size_t v_idx,
                                                 bool strict) {
    if (p.vars() != q.vars()) throw StructuralError("variable-list mismatch");
    if (p.is_zero() || q.is_zero())
        throw DegeneracyError("bivariate system with an identically zero equation");
    if (!gcd(p, q).is_constant())
        throw DegeneracyError("bivariate system has a one-dimensional solution locus");

    const bool p_has_v = p.depends_on(v_idx);
    const bool q_has_v = q.depends_on(v_idx);
    if (!p_has_v && !q_has_v) return {};  // coprime in one variable: no common zeros

    MPoly res = (p_has_v && q_has_v) ? resultant(p, q, v_idx)
                                     : (p_has_v ? q : p);  // the v-free equation bounds u
    if (res.is_zero()) throw DegeneracyError("vanishing resultant for coprime system");

    std::vector<std::pair<Rat, Rat>> out;
    if (res.is_constant()) return out;  // no common zeros at all

    // res depends only on u here: a dependence on v would mean v_idx was the
    // main variable of a v-free equation, impossible.
    auto u_roots = rational_roots(res);
    if (strict) {
        int found = 0;
        for (const auto& [r, m] : u_roots) found += m;
        const MPoly sq = squarefree_part_multi(res);
        if (sq.degree_in(u_idx) > static_cast<int>(u_roots.size()))
            throw UnsupportedFieldError(
                "bivariate system has a non-rational candidate abscissa; unsupported over Q");
        (void)found;
    }
    for (const auto& [u0, mult] : u_roots) {
        (void)mult;
        const MPoly pk = specialize_u(p, u_idx, u0);
        const MPoly qk = specialize_u(q, u_idx, u0);
        if (pk.is_zero() && qk.is_zero())
            throw DegeneracyError("vertical line of common zeros");
        MPoly g = pk.is_zero() ? qk : (qk.is_zero() ? pk : gcd(pk, qk));
        if (g.is_constant()) continue;  // leading coefficients both vanished, no common root
        auto v_roots = rational_roots(g);
        if (strict) {
            const MPoly gs = squarefree_part_multi(g);
            if (gs.degree_in(v_idx) > static_cast<int>(v_roots.size()))
                throw UnsupportedFieldError(
                    "bivariate system has a non-rational ordinate over a rational abscissa");
        }
        for (const auto& [v0, vm] : v_roots) {
            (void)vm;
            if (p.eval_partial(u_idx, u0).eval_partial(v_idx, v0).is_zero() &&
                q.eval_partial(u_idx, u0).eval_partial(v_idx, v0).is_zero())
                out.emplace_back(u0, v0);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace cremona
