#include "cremona/surface.hpp"

#include "cremona/rng.hpp"
#include "cremona/solve.hpp"

namespace cremona {

const std::vector<std::string>& surf_vars() {
    static const std::vector<std::string> v = {"X", "Y", "Z"};
    return v;
}

const std::vector<std::string>& surf_plane_vars() {
    static const std::vector<std::string> v = {"X", "Y"};
    return v;
}

HypersurfacePoly HypersurfacePoly::make(MPoly p) {
    if (p.vars() != surf_vars())
        throw StructuralError("hypersurface polynomial must use the variables X, Y, Z");
    const int d = p.degree_in(2);
    if (d < 2) throw DomainError("hypersurface must have degree >= 2 in Z");
    const MPoly lead = p.coeffs_in(2).back();
    if (!lead.is_constant() || !lead.as_constant().is_one())
        throw DomainError("hypersurface must be monic in Z");
    HypersurfacePoly h;
    h.p_ = std::move(p);
    return h;
}

Json HypersurfacePoly::to_json() const {
    Json j;
    j["roles"] = Json{{"x", "X"}, {"y", "Y"}, {"z", "Z"}};
    j["poly"] = poly_to_json(p_);
    return j;
}

HypersurfacePoly HypersurfacePoly::from_json(const Json& j) {
    if (!j.is_object()) throw StructuralError("hypersurface JSON must be an object");
    reject_unknown_keys(j, {"roles", "poly"}, "hypersurface");
    if (!j.contains("roles") || !j.contains("poly"))
        throw StructuralError("hypersurface needs 'roles' and 'poly'");
    const Json& roles = j["roles"];
    reject_unknown_keys(roles, {"x", "y", "z"}, "variable roles");
    if (!roles.contains("x") || !roles.contains("y") || !roles.contains("z"))
        throw StructuralError("roles must name x, y and z variables");
    MPoly p = poly_from_json(j["poly"]);
    // reorder the declared variables into the canonical X, Y, Z order
    const std::vector<std::string> declared = {roles["x"].get<std::string>(),
                                               roles["y"].get<std::string>(),
                                               roles["z"].get<std::string>()};
    std::vector<MPoly> images(p.nvars(), MPoly(surf_vars()));
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        const auto& name = p.vars()[i];
        auto it = std::find(declared.begin(), declared.end(), name);
        if (it == declared.end())
            throw StructuralError("variable '" + name + "' has no declared role");
        images[i] = MPoly::variable(surf_vars(),
                                    static_cast<std::size_t>(it - declared.begin()));
    }
    return make(p.substituted(images));
}

DiscriminantLocus discriminant_locus(const HypersurfacePoly& p) {
    DiscriminantLocus out;
    const MPoly disc3 = discriminant(p.poly(), 2);
    out.disc = disc3.restricted_to(surf_plane_vars());
    out.is_constant = out.disc.is_constant();
    return out;
}

int fiber_cardinality(const HypersurfacePoly& p, const Rat& x0, const Rat& y0) {
    const MPoly fiber = p.poly().eval_partial(0, x0).eval_partial(1, y0);
    // monicity keeps the degree at d
    return squarefree_data(fiber).squarefree_part.total_degree();
}

MPoly subresultant(const MPoly& f, const MPoly& g, std::size_t var, int k) {
    const int m = f.degree_in(var);
    const int n = g.degree_in(var);
    if (m < 0 || n < 0) throw DomainError("subresultant of the zero polynomial");
    if (m < n) throw StructuralError("subresultant expects deg f >= deg g");
    if (k < 0 || k > n) throw StructuralError("subresultant index out of range");
    if (k == n) return g;
    const auto fc = f.coeffs_in(var);
    const auto gc = g.coeffs_in(var);
    const int rows = (n - k) + (m - k);
    const int width = m + n - k;  // coefficient columns for degrees m+n-k-1 .. 0
    // row r of the coefficient matrix, degree-descending
    auto row_of = [&](int r) {
        std::vector<MPoly> row(static_cast<std::size_t>(width), MPoly(f.vars()));
        const bool is_f = r < n - k;
        const int shift = is_f ? (n - k - 1 - r) : (m - k - 1 - (r - (n - k)));
        const auto& coeffs = is_f ? fc : gc;
        const int deg = is_f ? m : n;
        for (int i = 0; i <= deg; ++i) {
            const int col = width - 1 - (i + shift);
            row[static_cast<std::size_t>(col)] = coeffs[static_cast<std::size_t>(i)];
        }
        return row;
    };
    MPoly acc(f.vars());
    const MPoly x = MPoly::variable(f.vars(), var);
    for (int i = 0; i <= k; ++i) {
        // square matrix: the first rows-1 columns plus the column of x^i
        std::vector<std::vector<MPoly>> mat;
        for (int r = 0; r < rows; ++r) {
            const auto full = row_of(r);
            std::vector<MPoly> mrow(full.begin(), full.begin() + (rows - 1));
            mrow.push_back(full[static_cast<std::size_t>(width - 1 - i)]);
            mat.push_back(std::move(mrow));
        }
        acc += poly_det(std::move(mat)) * x.pow(i);
    }
    return acc;
}

SurfaceRamificationReport ramification_over_component(
    const HypersurfacePoly& p, const MPoly& delta,
    const std::vector<std::pair<Rat, Rat>>& samples) {
    if (delta.vars() != surf_plane_vars())
        throw StructuralError("discriminant components must use the variables X, Y");
    const auto locus = discriminant_locus(p);
    if (!exact_divide(locus.disc, delta).has_value())
        throw DomainError("not a discriminant component: delta does not divide the discriminant");
    for (const auto& [x0, y0] : samples) {
        if (!delta.eval({x0, y0}).is_zero())
            throw StructuralError("sample point is not on V(delta)");
    }

    SurfaceRamificationReport rep;
    rep.generic_fiber = p.z_degree();
    rep.fiber_drops_on_curve = !samples.empty();
    for (const auto& s : samples) {
        const int c = fiber_cardinality(p, s.first, s.second);
        rep.on_curve_fibers.push_back({s, c});
        if (c >= rep.generic_fiber) rep.fiber_drops_on_curve = false;
    }

    // companion controls: shift each sample until it leaves the whole
    // discriminant locus
    rep.full_fiber_off_curve = !samples.empty();
    for (const auto& s : samples) {
        bool placed = false;
        for (long j = 1; j <= 200 && !placed; ++j) {
            const std::array<std::pair<Rat, Rat>, 4> shifts = {
                std::make_pair(s.first + Rat(j), s.second),
                std::make_pair(s.first - Rat(j), s.second),
                std::make_pair(s.first, s.second + Rat(j)),
                std::make_pair(s.first + Rat(j), s.second + Rat(j))};
            for (const auto& [x0, y0] : shifts) {
                if (locus.disc.eval({x0, y0}).is_zero()) continue;
                const int c = fiber_cardinality(p, x0, y0);
                rep.control_fibers.push_back({{x0, y0}, c});
                if (c != rep.generic_fiber) rep.full_fiber_off_curve = false;
                placed = true;
                break;
            }
        }
        if (!placed) throw BudgetError("no off-curve control sample within range");
    }

    // generic multiple-root structure: the first subresultant of (P, P_Z)
    // must not vanish identically along V(delta)
    const MPoly s1 = subresultant(p.poly(), p.poly().derivative(2), 2, 1);
    const MPoly delta3 = delta.with_vars(surf_vars());
    rep.double_root_pattern = false;
    for (const auto& coeff : s1.coeffs_in(2)) {
        if (coeff.is_zero()) continue;
        if (!exact_divide(coeff, delta3).has_value()) {
            rep.double_root_pattern = true;
            break;
        }
    }
    return rep;
}

std::vector<std::pair<Rat, Rat>> sample_points_on_curve(const MPoly& delta, int count,
                                                        int budget) {
    if (delta.vars() != surf_plane_vars())
        throw StructuralError("curve must use the variables X, Y");
    if (delta.is_zero() || delta.is_constant())
        throw DomainError("sampling needs a non-constant curve");
    std::vector<std::pair<Rat, Rat>> out;
    RationalEnumeration xs;
    for (int attempt = 0; attempt < budget && static_cast<int>(out.size()) < count; ++attempt) {
        const Rat x0 = xs.next();
        const MPoly fy = delta.eval_partial(0, x0);
        if (fy.is_zero()) {
            // the vertical line X = x0 lies inside the curve
            RationalEnumeration ys;
            while (static_cast<int>(out.size()) < count) out.push_back({x0, ys.next()});
            break;
        }
        if (fy.is_constant()) continue;
        for (const auto& [y0, mult] : rational_roots(fy)) {
            (void)mult;
            out.push_back({x0, y0});
            if (static_cast<int>(out.size()) == count) break;
        }
    }
    if (static_cast<int>(out.size()) < count)
        throw BudgetError("could not find " + std::to_string(count) +
                          " rational points on the curve within budget");
    return out;
}

std::vector<std::pair<Rat, Rat>> sample_points_off_curve(const MPoly& avoid, int count,
                                                         int budget) {
    if (avoid.vars() != surf_plane_vars())
        throw StructuralError("curve must use the variables X, Y");
    std::vector<std::pair<Rat, Rat>> out;
    RationalEnumeration xs;
    for (int attempt = 0; attempt < budget && static_cast<int>(out.size()) < count; ++attempt) {
        const Rat x0 = xs.next();
        RationalEnumeration ys;
        for (int k = 0; k < 8; ++k) {
            const Rat y0 = ys.next();
            if (avoid.eval({x0, y0}).is_zero()) continue;
            out.push_back({x0, y0});
            break;
        }
    }
    if (static_cast<int>(out.size()) < count)
        throw BudgetError("could not find off-curve samples within budget");
    return out;
}

}  // namespace cremona
