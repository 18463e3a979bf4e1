#include "cremona/blowup.hpp"

#include <algorithm>

#include "cremona/solve.hpp"

namespace cremona {

const std::vector<std::string>& chart_vars() {
    static const std::vector<std::string> v = {"u", "v"};
    return v;
}

const std::vector<std::string>& base_vars() {
    static const std::vector<std::string> v = {"x", "y"};
    return v;
}

std::string EPoint::str() const {
    if (at_infinity) return "E" + std::to_string(curve) + "(inf)";
    return "E" + std::to_string(curve) + "(" + dir.str() + ")";
}

namespace {

MPoly u_poly() { return MPoly::variable(chart_vars(), 0); }
MPoly v_poly() { return MPoly::variable(chart_vars(), 1); }
MPoly c_poly(const Rat& c) { return MPoly::constant(chart_vars(), c); }

// (u,v) expressions of the parent coordinates for each chart side
std::array<MPoly, 2> side_images(bool side_a, const std::array<Rat, 2>& center) {
    if (side_a) return {c_poly(center[0]) + u_poly(), c_poly(center[1]) + u_poly() * v_poly()};
    return {c_poly(center[0]) + u_poly() * v_poly(), c_poly(center[1]) + v_poly()};
}

}  // namespace

const Chart& Tower::chart(const std::string& id) const {
    auto it = chart_index_.find(id);
    if (it == chart_index_.end()) throw StructuralError("unknown chart id '" + id + "'");
    return charts_[it->second];
}

bool Tower::has_chart(const std::string& id) const { return chart_index_.count(id) > 0; }

std::vector<std::string> Tower::chart_ids() const {
    std::vector<std::string> ids;
    ids.reserve(charts_.size());
    for (const auto& c : charts_) ids.push_back(c.id);
    return ids;
}

const Center& Tower::center(int j) const {
    if (j < 0 || j >= levels()) throw StructuralError("center index out of range");
    return centers_[static_cast<std::size_t>(j)];
}

std::pair<std::string, std::array<Rat, 2>> Tower::center_location(int j) const {
    const Center& c = center(j);
    if (j == 0) return {"base", base_affine_};
    return {c.chart_id, c.coords};
}

EPoint Tower::center_epoint(int j) const {
    if (j < 1) throw StructuralError("the base center is not an exceptional point");
    const Center& c = center(j);
    return epoint_of(c.chart_id, c.coords);
}

int Tower::base_patch() const {
    if (centers_.empty()) throw StructuralError("empty tower has no base chart");
    return base_patch_;
}

const PPoint& Tower::base_center() const {
    if (!base_center_) throw StructuralError("empty tower has no base center");
    return *base_center_;
}

EPoint Tower::epoint_of(const std::string& chart_id, const std::array<Rat, 2>& pt) const {
    const Chart& c = chart(chart_id);
    if (c.level == 0) throw StructuralError("base chart has no exceptional locus");
    if (c.side_a) {
        if (!pt[0].is_zero()) throw StructuralError("point is off the exceptional locus");
        return EPoint{c.level, false, pt[1]};
    }
    if (!pt[1].is_zero()) throw StructuralError("point is off the exceptional locus");
    if (pt[0].is_zero()) return EPoint{c.level, true, Rat(0)};
    return EPoint{c.level, false, pt[0].inverse()};
}

void Tower::track_curve(int curve_index, const std::string& chart_id, MPoly eq) {
    tracked_[{curve_index, chart_id}] = std::move(eq);
}

std::optional<MPoly> Tower::exceptional_equation(int k, const std::string& chart_id) const {
    auto it = tracked_.find({k, chart_id});
    if (it == tracked_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> Tower::curves_through(const std::string& chart_id,
                                       const std::array<Rat, 2>& pt) const {
    std::vector<int> out;
    const std::vector<Rat> p = {pt[0], pt[1]};
    for (int k = 1; k <= levels(); ++k) {
        auto eq = exceptional_equation(k, chart_id);
        if (eq && eq->eval(p).is_zero()) out.push_back(k);
    }
    return out;
}

void Tower::blow_up(const Center& c) {
    const int j = levels();  // this center must be p_j
    if (c.level != j) throw StructuralError("center level must match the tower height");

    std::string parent_id;
    std::array<Rat, 2> loc;
    if (j == 0) {
        if (!c.plane_point) throw StructuralError("the first center must be a plane point");
        const PPoint& p = *c.plane_point;
        int patch = 0;
        while (p[static_cast<std::size_t>(patch)].is_zero()) ++patch;  // normalized: entry is 1
        base_patch_ = patch;
        base_center_ = p;
        std::size_t k = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            if (static_cast<int>(i) == patch) continue;
            base_affine_[k++] = p[i];
        }
        Chart base;
        base.id = "base";
        base.level = 0;
        base.parent_id = "";
        base.side_a = true;
        base.coord_names = {"x", "y"};
        base.exceptional = c_poly(Rat(1));
        charts_.push_back(base);
        chart_index_[base.id] = charts_.size() - 1;
        parent_id = "base";
        loc = base_affine_;
    } else {
        if (c.plane_point) throw StructuralError("plane-point centers are only allowed at level 0");
        const Chart& host = chart(c.chart_id);  // throws on bad id
        const std::vector<Rat> pt = {c.coords[0], c.coords[1]};
        if (!host.exceptional.eval(pt).is_zero())
            throw StructuralError(
                "infinitely near center must lie on the exceptional locus of its chart");
        const EPoint rep = epoint_of(c.chart_id, c.coords);
        if (used_centers_.count(rep))
            throw StructuralError("center was already blown up: " + rep.str());
        used_centers_.insert(rep);
        parent_id = c.chart_id;
        loc = c.coords;
    }

    const int m = j + 1;  // creating E_m
    const std::string base_name = "L" + std::to_string(m);
    Chart a, b;
    a.id = base_name + "A";
    a.level = m;
    a.parent_id = parent_id;
    a.side_a = true;
    a.center = loc;
    a.coord_names = {"u" + std::to_string(m), "v" + std::to_string(m)};
    a.exceptional = u_poly();
    b = a;
    b.id = base_name + "B";
    b.side_a = false;
    b.exceptional = v_poly();

    // carry every tracked curve of the parent chart into the new charts
    std::vector<std::pair<int, std::array<MPoly, 2>>> lifted;
    for (int k = 1; k <= j; ++k) {
        auto eq = exceptional_equation(k, parent_id);
        if (!eq) continue;
        const MPoly ga = eq->substituted({side_images(true, loc)[0], side_images(true, loc)[1]});
        const MPoly gb = eq->substituted({side_images(false, loc)[0], side_images(false, loc)[1]});
        const int orda = ord_divide(ga, u_poly());
        const int ordb = ord_divide(gb, v_poly());
        if (orda != ordb)
            throw DomainError("chart-inconsistent exceptional multiplicity");  // cannot happen
        lifted.push_back(
            {k, {*exact_divide(ga, u_poly().pow(orda)), *exact_divide(gb, v_poly().pow(ordb))}});
    }

    charts_.push_back(a);
    chart_index_[a.id] = charts_.size() - 1;
    charts_.push_back(b);
    chart_index_[b.id] = charts_.size() - 1;
    centers_.push_back(c);

    for (auto& [k, eqs] : lifted) {
        track_curve(k, a.id, std::move(eqs[0]));
        track_curve(k, b.id, std::move(eqs[1]));
    }
    track_curve(m, a.id, u_poly());
    track_curve(m, b.id, v_poly());
}

std::array<MPoly, 2> Tower::pushforward(const std::string& chart_id) const {
    const Chart* c = &chart(chart_id);
    std::array<MPoly, 2> expr = {u_poly(), v_poly()};
    while (c->level != 0) {
        const auto img = side_images(c->side_a, c->center);
        // substitute the current expressions into the parent formulas
        expr = {img[0].substituted({expr[0], expr[1]}), img[1].substituted({expr[0], expr[1]})};
        c = &chart(c->parent_id);
    }
    return expr;
}

StrictTransformResult Tower::strict_transform(int level, const MPoly& curve) const {
    if (level < 0 || level > levels()) throw StructuralError("level out of range");
    if (curve.vars() != base_vars())
        throw StructuralError("base curves must use variables x, y");
    if (curve.is_zero()) throw DomainError("strict transform of the zero curve");
    if (curve.is_constant()) throw DomainError("strict transform of a constant");
    if (integer_primitive(curve) != squarefree_part_multi(curve))
        throw DomainError("strict transform requires a squarefree curve");

    StrictTransformResult res;
    std::map<std::string, MPoly> cur;
    cur["base"] = curve.renamed(chart_vars());
    for (int m = 1; m <= level; ++m) {
        const auto [host, loc] = center_location(m - 1);
        const MPoly& g = cur.at(host);
        const MPoly ga = g.substituted({side_images(true, loc)[0], side_images(true, loc)[1]});
        const MPoly gb = g.substituted({side_images(false, loc)[0], side_images(false, loc)[1]});
        const int orda = ord_divide(ga, u_poly());
        const int ordb = ord_divide(gb, v_poly());
        if (orda != ordb) throw DomainError("chart-inconsistent multiplicity");  // cannot happen
        res.multiplicities.push_back(orda);
        const std::string name = "L" + std::to_string(m);
        cur[name + "A"] = *exact_divide(ga, u_poly().pow(orda));
        cur[name + "B"] = *exact_divide(gb, v_poly().pow(ordb));
    }
    res.chart_equation = std::move(cur);
    return res;
}

std::vector<std::set<EPoint>> Tower::z_sets() const {
    const int n = levels();
    std::vector<std::set<EPoint>> z(static_cast<std::size_t>(n));

    // walk a chart point down to the requested level
    auto push_down = [&](std::string chart_id, std::array<Rat, 2> pt, int target) {
        const Chart* c = &chart(chart_id);
        while (c->level > target) {
            const auto img = side_images(c->side_a, c->center);
            const std::vector<Rat> p = {pt[0], pt[1]};
            pt = {img[0].eval(p), img[1].eval(p)};
            c = &chart(c->parent_id);
        }
        if (c->level != target)
            throw DomainError("push-down skipped the target level");  // cannot happen
        return std::make_pair(c->id, pt);
    };

    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (const auto& c : charts_) {
                auto ei = exceptional_equation(i, c.id);
                auto ej = exceptional_equation(j, c.id);
                if (!ei || !ej) continue;
                if (!gcd(*ei, *ej).is_constant())
                    throw DegeneracyError("coincident exceptional strict transforms");
                const auto pts = solve_bivariate(*ei, *ej, 0, 1, /*strict=*/true);
                for (const auto& [x, y] : pts) {
                    const std::array<Rat, 2> pt = {x, y};
                    // skip points that later blowups removed from the surface
                    const std::vector<Rat> pv = {x, y};
                    if (c.level >= 1 && c.exceptional.eval(pv).is_zero()) {
                        if (used_centers_.count(epoint_of(c.id, pt))) continue;
                    }
                    const auto [ci, pi] = push_down(c.id, pt, i);
                    z[static_cast<std::size_t>(i - 1)].insert(epoint_of(ci, pi));
                    const auto [cj, pj] = push_down(c.id, pt, j);
                    z[static_cast<std::size_t>(j - 1)].insert(epoint_of(cj, pj));
                }
            }
        }
    }
    return z;
}

Json Tower::to_json() const {
    Json centers = Json::array();
    for (const auto& c : centers_) {
        Json jc;
        jc["level"] = c.level;
        if (c.level == 0) {
            jc["point"] = c.plane_point->to_json();
        } else {
            jc["chart"] = c.chart_id;
            Json coords = Json::array();
            coords.push_back(c.coords[0].str());
            coords.push_back(c.coords[1].str());
            jc["coords"] = std::move(coords);
        }
        centers.push_back(std::move(jc));
    }
    Json j;
    j["centers"] = std::move(centers);
    return j;
}

Tower Tower::from_json(const Json& j) {
    if (!j.is_object()) throw StructuralError("tower JSON must be an object");
    reject_unknown_keys(j, {"centers"}, "tower");
    if (!j.contains("centers") || !j["centers"].is_array())
        throw StructuralError("tower JSON needs a 'centers' array");
    Tower t;
    int level = 0;
    for (const auto& jc : j["centers"]) {
        if (!jc.is_object()) throw StructuralError("center must be an object");
        Center c;
        c.level = level;
        if (level == 0) {
            reject_unknown_keys(jc, {"level", "point"}, "center");
            if (!jc.contains("level") || !jc.contains("point"))
                throw StructuralError("level-0 center needs 'level' and 'point'");
            c.plane_point = PPoint::from_json(jc["point"]);
        } else {
            reject_unknown_keys(jc, {"level", "chart", "coords"}, "center");
            if (!jc.contains("level") || !jc.contains("chart") || !jc.contains("coords"))
                throw StructuralError("center needs 'level', 'chart' and 'coords'");
            if (!jc["chart"].is_string()) throw StructuralError("chart id must be a string");
            c.chart_id = jc["chart"].get<std::string>();
            if (!jc["coords"].is_array() || jc["coords"].size() != 2)
                throw StructuralError("center coords must be a pair");
            c.coords = {rat_from_json(jc["coords"][0]), rat_from_json(jc["coords"][1])};
        }
        if (!jc["level"].is_number_integer() || jc["level"].get<int>() != level)
            throw StructuralError("center levels must be consecutive from 0");
        t.blow_up(c);
        ++level;
    }
    return t;
}

}  // namespace cremona
