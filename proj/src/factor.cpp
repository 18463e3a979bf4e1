#include "cremona/factor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cremona/rng.hpp"
#include "cremona/solve.hpp"

namespace cremona {

HomRatFn HomRatFn::make(MPoly num, MPoly den) {
    if (num.vars() != proj_vars() || den.vars() != proj_vars())
        throw StructuralError("plane functions must use the variables x0, x1, x2");
    if (den.is_zero()) throw DomainError("plane function with zero denominator");
    if (!num.is_homogeneous() || !den.is_homogeneous())
        throw StructuralError("plane functions must be ratios of forms");
    HomRatFn f;
    if (num.is_zero()) {
        f.num_ = std::move(num);
        f.den_ = MPoly::constant(proj_vars(), Rat(1));
        return f;
    }
    const MPoly g = gcd(num, den);
    if (!g.is_constant()) {
        num = *exact_divide(num, g);
        den = *exact_divide(den, g);
    }
    const Rat scale = integer_primitive(den).leading_coeff() / den.leading_coeff();
    f.num_ = num * scale;
    f.den_ = den * scale;
    return f;
}

HomRatFn HomRatFn::minus_const(const Rat& c) const {
    return make(num_ - den_ * c, den_);
}

HomRatFn HomRatFn::divided_by(const HomRatFn& o) const {
    if (o.is_zero()) throw DegeneracyError("division by an identically zero chart relation");
    return make(num_ * o.den_, den_ * o.num_);
}

LineValue LineValue::make(MPoly num, MPoly den) {
    if (num.is_zero() && den.is_zero())
        throw DegeneracyError("restriction collapsed to 0/0");  // coprime forms cannot
    LineValue lv;
    if (num.is_zero() || den.is_zero()) {
        MPoly& nz = num.is_zero() ? den : num;
        nz = MPoly::constant(nz.vars(), Rat(1));
        lv.num_ = std::move(num);
        lv.den_ = std::move(den);
        return lv;
    }
    const MPoly g = gcd(num, den);
    if (!g.is_constant()) {
        num = *exact_divide(num, g);
        den = *exact_divide(den, g);
    }
    const Rat scale = integer_primitive(den).leading_coeff() / den.leading_coeff();
    lv.num_ = num * scale;
    lv.den_ = den * scale;
    return lv;
}

bool LineValue::is_constant() const { return degree() == 0; }

int LineValue::degree() const {
    if (num_.is_zero() || den_.is_zero()) return 0;
    return std::max(num_.total_degree(), den_.total_degree());
}

P1Value LineValue::at(const Rat& s0, const Rat& t0) const {
    const Rat n = num_.is_zero() ? Rat(0) : num_.eval({s0, t0});
    const Rat d = den_.is_zero() ? Rat(0) : den_.eval({s0, t0});
    if (d.is_zero()) {
        if (n.is_zero()) throw DegeneracyError("common root of reduced forms");  // cannot happen
        return P1Value{true, Rat(0)};
    }
    return P1Value{false, n / d};
}

LineValue restrict_fn(const HomRatFn& f, const PLine& line) {
    return LineValue::make(restrict_to_line(f.num(), line), restrict_to_line(f.den(), line));
}

std::pair<Rat, Rat> param_of(const PLine& line, const PPoint& p) {
    if (!incident(p, line)) throw StructuralError("point is not on the line");
    const auto [P, Q] = span_points(line);
    auto cross = [](const PPoint& u, const PPoint& v, std::size_t i) {
        const std::size_t a = (i + 1) % 3, b = (i + 2) % 3;
        return u[a] * v[b] - u[b] * v[a];
    };
    for (std::size_t m = 0; m < 3; ++m) {
        const Rat w = cross(P, Q, m);
        if (w.is_zero()) continue;
        const Rat s = cross(p, Q, m) / w;
        const Rat t = -(cross(p, P, m) / w);
        return {s, t};
    }
    throw DegeneracyError("degenerate span");  // unreachable
}

TowerLift::TowerLift(const Tower& tower, const PlaneRatMap& chi) : tower_(&tower) {
    const int patch = tower.base_patch();
    std::array<std::size_t, 2> others{};
    std::size_t k = 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (static_cast<int>(i) != patch) others[k++] = i;
    base_ = {HomRatFn::make(chi.component(others[0]), chi.component(static_cast<std::size_t>(patch))),
             HomRatFn::make(chi.component(others[1]), chi.component(static_cast<std::size_t>(patch)))};
}

const std::array<HomRatFn, 2>& TowerLift::coords(const std::string& chart_id) {
    auto it = cache_.find(chart_id);
    if (it != cache_.end()) return it->second;
    if (chart_id == "base") return cache_.emplace("base", base_).first->second;
    const Chart& c = tower_->chart(chart_id);
    const auto& parent = coords(c.parent_id);
    const HomRatFn du = parent[0].minus_const(c.center[0]);
    const HomRatFn dv = parent[1].minus_const(c.center[1]);
    std::array<HomRatFn, 2> out =
        c.side_a ? std::array<HomRatFn, 2>{du, dv.divided_by(du)}
                 : std::array<HomRatFn, 2>{du.divided_by(dv), dv};
    return cache_.emplace(chart_id, std::move(out)).first->second;
}

namespace {

const std::vector<std::string>& st_vars() {
    static const std::vector<std::string> v = {"s", "t"};
    return v;
}

// Root of a nonzero linear binary form alpha*s + beta*t.
std::pair<Rat, Rat> linear_root(const MPoly& form) {
    const Rat alpha = form.coeff({1, 0});
    const Rat beta = form.coeff({0, 1});
    if (alpha.is_zero() && beta.is_zero()) throw DegeneracyError("zero linear form");
    return {beta, -alpha};
}

struct DirectionResult {
    bool ok = false;
    std::string why;
    P1Value dir;
    std::pair<Rat, Rat> param{Rat(0), Rat(0)};
};

// Tangent direction at the chart point w of the lifted image of the line,
// as a point of the exceptional curve of the blowup at w.
DirectionResult direction_at(TowerLift& lift, const std::string& chart_id,
                             const std::array<Rat, 2>& w, const PLine& line) {
    DirectionResult res;
    const auto& uv = lift.coords(chart_id);
    const LineValue lu = restrict_fn(uv[0], line);
    const LineValue lv = restrict_fn(uv[1], line);
    const MPoly a = lu.num() - lu.den() * w[0];
    const MPoly b = lv.num() - lv.den() * w[1];
    if (a.is_zero() && b.is_zero()) {
        res.why = "line is contracted to the center";
        return res;
    }
    if (a.is_zero() || b.is_zero()) {
        res.why = "line lies inside a coordinate fiber of the center";
        return res;
    }
    const MPoly g = gcd(a, b);
    if (g.is_constant()) {
        res.why = "lifted line misses the center";
        return res;
    }
    if (g.total_degree() != 1) {
        res.why = "lifted line meets the center with multiplicity";
        return res;
    }
    res.param = linear_root(g);
    const LineValue slope = LineValue::make(b * lu.den(), a * lv.den());
    res.dir = slope.at(res.param.first, res.param.second);
    res.ok = true;
    return res;
}

PLine line_from_equation(const MPoly& eq) {
    if (eq.total_degree() != 1 || !eq.is_homogeneous())
        throw DegeneracyError("expected a linear form");
    return PLine(eq.coeff({1, 0, 0}), eq.coeff({0, 1, 0}), eq.coeff({0, 0, 1}));
}

}  // namespace

Lemma51Report lemma51_check(const PPoint& a, const PPoint& b, const PPoint& c) {
    if (collinear(a, b, c)) throw DegeneracyError("collinear triple");
    Tower t;
    Center base;
    base.level = 0;
    base.plane_point = a;
    t.blow_up(base);

    const PlaneRatMap tabc = quadratic_transform(a, b, c);
    TowerLift lift(t, tabc);
    const auto& uv = lift.coords("L1A");
    const PLine bc = line_through(b, c);

    Lemma51Report rep;
    const LineValue lu = restrict_fn(uv[0], bc);
    const LineValue lv = restrict_fn(uv[1], bc);
    rep.maps_into_exceptional = lu.is_identically_zero();
    rep.iso_onto_exceptional = rep.maps_into_exceptional && lv.degree() == 1;

    const auto pb = param_of(bc, b);
    const auto pc = param_of(bc, c);
    rep.image_of_b = lv.at(pb.first, pb.second);
    rep.image_of_c = lv.at(pc.first, pc.second);

    // tangent directions of the lines ac and ab at the blown-up point
    const auto loc = t.center_location(0);
    TowerLift idlift(t, PlaneRatMap::identity());
    const auto dab = direction_at(idlift, "base", loc.second, line_through(a, b));
    const auto dac = direction_at(idlift, "base", loc.second, line_through(a, c));
    if (!dab.ok || !dac.ok) throw DegeneracyError("direction computation failed");
    rep.dir_ab = dab.dir;
    rep.dir_ac = dac.dir;
    rep.tangent_swap_ok =
        rep.image_of_b == rep.dir_ac && rep.image_of_c == rep.dir_ab && rep.dir_ab != rep.dir_ac;
    return rep;
}

namespace {

PPoint sample_free_point(Rng& rng, int attempt) {
    const long span = 2 + attempt / 40;
    for (;;) {
        const Rat x(rng.int_in(-span, span), rng.int_in(1, 2));
        const Rat y(rng.int_in(-span, span), rng.int_in(1, 2));
        const Rat z(rng.int_in(-span, span), rng.int_in(1, 2));
        if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
        return PPoint(x, y, z);
    }
}

PPoint sample_on_line(Rng& rng, const PLine& line, int attempt) {
    const auto [p, q] = span_points(line);
    if (rng.below(8) == 0) return q;
    const long span = 2 + attempt / 40;
    const Rat t(rng.int_in(-span, span), rng.int_in(1, 2));
    return PPoint(p[0] + t * q[0], p[1] + t * q[1], p[2] + t * q[2]);
}

}  // namespace

FactorizationResult factor_tower(const Tower& tower, std::uint64_t seed, int budget_per_step) {
    FactorizationResult result;
    result.seed = seed;
    const int n = tower.levels();
    if (n == 0) return result;

    const auto z = tower.z_sets();
    Rng rng(seed);
    std::map<int, PLine> lines;  // exceptional index -> line in the current copy
    PlaneRatMap chi = PlaneRatMap::identity();

    for (int j = 0; j < n; ++j) {
        const auto [chart_id, w] = tower.center_location(j);
        TowerLift lift(tower, chi);

        // a_j: the base center at step 0, afterwards the unique point of the
        // carrying line over p_j
        PPoint a = tower.base_center();
        if (j > 0) {
            const auto through = tower.curves_through(chart_id, w);
            if (through.empty())
                throw DomainError("center does not lie on any exceptional curve");
            const int carrier = through.front();
            const PLine& carry_line = lines.at(carrier);
            const auto& uv = lift.coords(chart_id);
            const LineValue lu = restrict_fn(uv[0], carry_line);
            const LineValue lv = restrict_fn(uv[1], carry_line);
            // the lifted line sits inside the carrying curve, so one
            // coordinate equation holds identically; the other is Mobius
            const MPoly au = lu.num() - lu.den() * w[0];
            const MPoly av = lv.num() - lv.den() * w[1];
            if (au.is_zero() && av.is_zero())
                throw DomainError("carrying line is contracted onto the center");
            const MPoly g = au.is_zero() ? av : (av.is_zero() ? au : gcd(au, av));
            if (g.is_constant())
                throw DomainError("carrying line does not lift through the center");
            if (g.total_degree() != 1)
                throw DomainError(
                    "restriction of the lifted map to the carrying line is not degree 1");
            const auto [s0, t0] = linear_root(integer_primitive(g));
            const auto [P, Q] = span_points(carry_line);
            a = PPoint(s0 * P[0] + t0 * Q[0], s0 * P[1] + t0 * Q[1], s0 * P[2] + t0 * Q[2]);
        }

        // lines that a_j does not already anchor must pass through b_j or c_j
        std::vector<int> needs;
        for (const auto& [k, line] : lines)
            if (!incident(a, line)) needs.push_back(k);
        if (needs.size() > 2)
            throw BudgetError(
                "more than two transported lines need anchoring at step " + std::to_string(j) +
                "; this construction supports towers of depth <= 4 in general position");

        const std::set<EPoint>& forbidden = z[static_cast<std::size_t>(j)];
        PPoint b = a, c = a;  // overwritten below
        std::string last_reason = "no attempt";
        bool committed = false;
        for (int attempt = 0; attempt < budget_per_step && !committed; ++attempt) {
            b = needs.size() >= 1 ? sample_on_line(rng, lines.at(needs[0]), attempt)
                                  : sample_free_point(rng, attempt);
            c = needs.size() >= 2 ? sample_on_line(rng, lines.at(needs[1]), attempt)
                                  : sample_free_point(rng, attempt);
            if (b == a || c == a || b == c) {
                last_reason = "degenerate point choice";
                continue;
            }
            if (collinear(a, b, c)) {
                last_reason = "collinear triple";
                continue;
            }
            const PLine lab = line_through(a, b);
            const PLine lac = line_through(a, c);
            const PLine lbc = line_through(b, c);
            bool clash = false;
            for (const auto& [k, old] : lines)
                clash = clash || lab == old || lac == old || lbc == old;
            if (clash) {
                last_reason = "new line coincides with a transported line";
                continue;
            }
            const auto db = direction_at(lift, chart_id, w, lab);
            const auto dc = direction_at(lift, chart_id, w, lac);
            if (!db.ok || !dc.ok) {
                last_reason = db.ok ? dc.why : db.why;
                continue;
            }
            if (db.dir == dc.dir) {
                last_reason = "coincident tangent directions";
                continue;
            }
            if (forbidden.count(db.dir.as_epoint(j + 1)) ||
                forbidden.count(dc.dir.as_epoint(j + 1))) {
                last_reason = "direction lands in the Z-set";
                continue;
            }
            committed = true;
        }
        if (!committed)
            throw BudgetError("sampling budget exhausted at step " + std::to_string(j) +
                              "; last violated constraint: " + last_reason);

        const PlaneRatMap t_j = quadratic_transform(a, b, c);
        result.triples.push_back({a, b, c});
        result.transforms.push_back(t_j);

        // transport the line bookkeeping through T_j
        std::map<int, PLine> next;
        for (const auto& [k, line] : lines) {
            const auto img = image_of_line(t_j, line);
            if (!std::holds_alternative<CurveImage>(img))
                throw DomainError("transported line was contracted");  // excluded by construction
            const MPoly& eq = std::get<CurveImage>(img).equation;
            if (eq.total_degree() != 1)
                throw DomainError("transported line left the pencil of lines");
            next.emplace(k, line_from_equation(eq));
        }
        next.emplace(j + 1, line_through(b, c));
        lines = std::move(next);
        chi = compose(chi, t_j);
    }

    result.chi = chi;
    result.line_assignment = lines;
    std::set<PLine> distinct;
    for (const auto& [k, line] : lines) distinct.insert(line);
    if (static_cast<int>(distinct.size()) != n)
        throw DomainError("line assignment is not injective");  // cannot happen
    return result;
}

Json FactorizationResult::to_json() const {
    Json j;
    j["seed"] = seed;
    Json triples_json = Json::array();
    for (const auto& t : triples) {
        Json jt;
        jt["a"] = t[0].to_json();
        jt["b"] = t[1].to_json();
        jt["c"] = t[2].to_json();
        triples_json.push_back(std::move(jt));
    }
    j["triples"] = std::move(triples_json);
    Json transforms_json = Json::array();
    for (const auto& t : transforms) transforms_json.push_back(t.to_json());
    j["transforms"] = std::move(transforms_json);
    j["chi"] = chi.to_json();
    Json assign = Json::array();
    for (const auto& [k, line] : line_assignment) {
        Json ja;
        ja["curve"] = k;
        ja["line"] = line.to_json();
        assign.push_back(std::move(ja));
    }
    j["line_assignment"] = std::move(assign);
    return j;
}

FactorizationResult FactorizationResult::from_json(const Json& j) {
    if (!j.is_object()) throw StructuralError("factorization JSON must be an object");
    reject_unknown_keys(j, {"seed", "triples", "transforms", "chi", "line_assignment"},
                        "factorization");
    for (const char* key : {"seed", "triples", "transforms", "chi", "line_assignment"})
        if (!j.contains(key)) throw StructuralError("factorization misses a field");
    FactorizationResult r;
    r.seed = j["seed"].get<std::uint64_t>();
    for (const auto& jt : j["triples"]) {
        reject_unknown_keys(jt, {"a", "b", "c"}, "triple");
        r.triples.push_back({PPoint::from_json(jt.at("a")), PPoint::from_json(jt.at("b")),
                             PPoint::from_json(jt.at("c"))});
    }
    for (const auto& jt : j["transforms"]) r.transforms.push_back(PlaneRatMap::from_json(jt));
    r.chi = PlaneRatMap::from_json(j["chi"]);
    for (const auto& ja : j["line_assignment"]) {
        reject_unknown_keys(ja, {"curve", "line"}, "assignment");
        r.line_assignment.emplace(ja.at("curve").get<int>(), PLine::from_json(ja.at("line")));
    }
    return r;
}

Json VerificationReport::to_json() const {
    Json j;
    j["passed"] = passed;
    Json arr = Json::array();
    for (const auto& c : clauses) {
        Json jc;
        jc["name"] = c.name;
        jc["index"] = c.index;
        jc["passed"] = c.passed;
        jc["detail"] = c.detail;
        arr.push_back(std::move(jc));
    }
    j["clauses"] = std::move(arr);
    return j;
}

VerificationReport verify_factorization(const Tower& tower, const FactorizationResult& result) {
    VerificationReport rep;
    auto clause = [&rep](const std::string& name, int index, bool ok, std::string detail = "") {
        rep.clauses.push_back({name, index, ok, std::move(detail)});
    };
    const int n = tower.levels();

    // structural clauses
    const bool sizes_ok = static_cast<int>(result.triples.size()) == n &&
                          static_cast<int>(result.transforms.size()) == n &&
                          static_cast<int>(result.line_assignment.size()) == n;
    clause("result-shape", -1, sizes_ok);
    if (!sizes_ok) {
        rep.passed = false;
        return rep;
    }

    PlaneRatMap chi = PlaneRatMap::identity();
    for (const auto& t : result.transforms) chi = compose(chi, t);
    clause("chi-composition", -1, chi == result.chi);

    long bound = 1;
    for (int i = 0; i < n; ++i) bound *= 2;
    clause("degree-bound", -1, n == 0 ? result.chi.is_identity() : result.chi.degree() <= bound);

    for (int j = 0; j < n; ++j) {
        const auto& tr = result.triples[static_cast<std::size_t>(j)];
        const bool nc = !collinear(tr[0], tr[1], tr[2]);
        clause("triple-noncollinear", j, nc);
        if (!nc) continue;
        clause("transform-matches-triple", j,
               result.transforms[static_cast<std::size_t>(j)] ==
                   quadratic_transform(tr[0], tr[1], tr[2]));
        clause("transform-involution", j,
               compose(result.transforms[static_cast<std::size_t>(j)],
                       result.transforms[static_cast<std::size_t>(j)])
                   .is_identity());
    }

    std::set<PLine> assigned;
    bool complete = true;
    for (int k = 1; k <= n; ++k) {
        auto it = result.line_assignment.find(k);
        if (it == result.line_assignment.end()) {
            complete = false;
            continue;
        }
        assigned.insert(it->second);
    }
    clause("assignment-complete", -1, complete);
    clause("assignment-injective", -1, static_cast<int>(assigned.size()) == n);
    rep.passed = true;
    for (const auto& c : rep.clauses) rep.passed = rep.passed && c.passed;
    if (!rep.passed) return rep;
    if (n == 0) return rep;

    // replay of the line transport
    const auto zsets = tower.z_sets();
    std::map<int, PLine> lines;
    bool transport_ok = true;
    std::string transport_detail;
    std::vector<PlaneRatMap> partial;  // chi_j for j = 0..n
    partial.push_back(PlaneRatMap::identity());
    for (int j = 0; j < n && transport_ok; ++j) {
        const auto& tr = result.triples[static_cast<std::size_t>(j)];
        const auto& t_j = result.transforms[static_cast<std::size_t>(j)];
        const PLine lbc = line_through(tr[1], tr[2]);
        for (const auto& [k, old] : lines) {
            if (old == lbc || old == line_through(tr[0], tr[1]) ||
                old == line_through(tr[0], tr[2])) {
                transport_ok = false;
                transport_detail = "step " + std::to_string(j) + " reuses a transported line";
            }
        }
        std::map<int, PLine> next;
        for (const auto& [k, old] : lines) {
            const auto img = image_of_line(t_j, old);
            if (!std::holds_alternative<CurveImage>(img) ||
                std::get<CurveImage>(img).equation.total_degree() != 1) {
                transport_ok = false;
                transport_detail =
                    "step " + std::to_string(j) + " fails to transport line " + std::to_string(k);
                break;
            }
            next.emplace(k, line_from_equation(std::get<CurveImage>(img).equation));
        }
        if (!transport_ok) break;
        next.emplace(j + 1, lbc);
        lines = std::move(next);
        partial.push_back(compose(partial.back(), t_j));
    }
    if (transport_ok) {
        for (int k = 1; k <= n; ++k) {
            if (lines.at(k) != result.line_assignment.at(k)) {
                transport_ok = false;
                transport_detail = "assignment of curve " + std::to_string(k) +
                                   " disagrees with the transported line";
            }
        }
    }
    clause("line-transport", -1, transport_ok, transport_detail);

    // per-curve chart lift: the assigned line lands on the exceptional curve
    // and is not contracted
    if (transport_ok) {
        TowerLift full_lift(tower, result.chi);
        for (int k = 1; k <= n; ++k) {
            const PLine& line = result.line_assignment.at(k);
            bool contained = false, moving_ok = false;
            std::string which;
            for (const char side : {'A', 'B'}) {
                const std::string cid = "L" + std::to_string(k) + side;
                const auto& uv = full_lift.coords(cid);
                const LineValue exc = restrict_fn(side == 'A' ? uv[0] : uv[1], line);
                const LineValue mov = restrict_fn(side == 'A' ? uv[1] : uv[0], line);
                if (!exc.is_identically_zero()) continue;
                contained = true;
                moving_ok = !mov.is_constant();
                which = cid;
                break;
            }
            clause("exceptional-containment", k, contained, which);
            clause("non-contracted", k, contained && moving_ok, which);
        }

        // per-step side conditions: Z-avoidance and the tangent pairing
        for (int j = 0; j < n; ++j) {
            const auto& tr = result.triples[static_cast<std::size_t>(j)];
            const auto [chart_id, w] = tower.center_location(j);
            TowerLift lift_j(tower, partial[static_cast<std::size_t>(j)]);
            const auto db = direction_at(lift_j, chart_id, w, line_through(tr[0], tr[1]));
            const auto dc = direction_at(lift_j, chart_id, w, line_through(tr[0], tr[2]));
            bool zok = db.ok && dc.ok && db.dir != dc.dir;
            std::string detail;
            if (!zok) {
                detail = db.ok ? (dc.ok ? "coincident directions" : dc.why) : db.why;
            } else {
                const auto& forbidden = zsets[static_cast<std::size_t>(j)];
                if (forbidden.count(db.dir.as_epoint(j + 1)) ||
                    forbidden.count(dc.dir.as_epoint(j + 1))) {
                    zok = false;
                    detail = "a tangent direction lands in the Z-set";
                }
            }
            clause("z-avoidance", j, zok, detail);

            // induced endpoint images on E_{j+1}: b to the direction of
            // a_j c_j, c to the direction of a_j b_j
            bool pairing = false;
            std::string pair_detail;
            if (zok) {
                TowerLift lift_next(tower, partial[static_cast<std::size_t>(j) + 1]);
                const PLine lbc = line_through(tr[1], tr[2]);
                for (const char side : {'A', 'B'}) {
                    const std::string cid = "L" + std::to_string(j + 1) + side;
                    const auto& uv = lift_next.coords(cid);
                    const LineValue exc = restrict_fn(side == 'A' ? uv[0] : uv[1], lbc);
                    const LineValue mov = restrict_fn(side == 'A' ? uv[1] : uv[0], lbc);
                    if (!exc.is_identically_zero()) continue;
                    const auto pb = param_of(lbc, tr[1]);
                    const auto pc = param_of(lbc, tr[2]);
                    P1Value hb = mov.at(pb.first, pb.second);
                    P1Value hc = mov.at(pc.first, pc.second);
                    if (side == 'B') {
                        // translate the B-chart coordinate into the canonical
                        // A-side direction value
                        auto flip = [](const P1Value& x) {
                            if (x.inf) return P1Value{false, Rat(0)};
                            if (x.v.is_zero()) return P1Value{true, Rat(0)};
                            return P1Value{false, x.v.inverse()};
                        };
                        hb = flip(hb);
                        hc = flip(hc);
                    }
                    pairing = (hb == dc.dir) && (hc == db.dir);
                    pair_detail = "h(b)=" + hb.str() + " h(c)=" + hc.str() +
                                  " dir(ab)=" + db.dir.str() + " dir(ac)=" + dc.dir.str();
                    break;
                }
            }
            clause("tangent-pairing", j, pairing, pair_detail);
        }
    }

    rep.passed = true;
    for (const auto& c : rep.clauses) rep.passed = rep.passed && c.passed;
    return rep;
}

}  // namespace cremona
