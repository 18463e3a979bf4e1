#include "cremona/projective.hpp"

#include <algorithm>
#include <set>

#include "cremona/solve.hpp"

namespace cremona {

const std::vector<std::string>& proj_vars() {
    static const std::vector<std::string> v = {"x0", "x1", "x2"};
    return v;
}

namespace {

std::array<Rat, 3> normalize_triple(std::array<Rat, 3> c, const char* what) {
    std::size_t first = 3;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!c[i].is_zero()) {
            first = i;
            break;
        }
    }
    if (first == 3) throw DegeneracyError(std::string(what) + " with all coordinates zero");
    const Rat inv = c[first].inverse();
    for (auto& x : c) x *= inv;
    return c;
}

std::array<Rat, 3> cross(const std::array<Rat, 3>& u, const std::array<Rat, 3>& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Json triple_to_json(const std::array<Rat, 3>& c) {
    Json j = Json::array();
    for (const auto& x : c) j.push_back(x.str());
    return j;
}

std::array<Rat, 3> triple_from_json(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 3)
        throw StructuralError(std::string(what) + " must be an array of three rationals");
    return {rat_from_json(j[0]), rat_from_json(j[1]), rat_from_json(j[2])};
}

bool triple_less(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

std::string triple_str(const std::array<Rat, 3>& c) {
    return "(" + c[0].str() + ":" + c[1].str() + ":" + c[2].str() + ")";
}

}  // namespace

PPoint::PPoint(const Rat& c0, const Rat& c1, const Rat& c2)
    : c_(normalize_triple({c0, c1, c2}, "point")) {}

bool operator<(const PPoint& a, const PPoint& b) { return triple_less(a.c_, b.c_); }

std::string PPoint::str() const { return triple_str(c_); }

Json PPoint::to_json() const { return triple_to_json(c_); }

PPoint PPoint::from_json(const Json& j) {
    auto c = triple_from_json(j, "point");
    return PPoint(c[0], c[1], c[2]);
}

PLine::PLine(const Rat& c0, const Rat& c1, const Rat& c2)
    : c_(normalize_triple({c0, c1, c2}, "line")) {}

bool operator<(const PLine& a, const PLine& b) { return triple_less(a.c_, b.c_); }

std::string PLine::str() const { return triple_str(c_); }

Json PLine::to_json() const { return triple_to_json(c_); }

PLine PLine::from_json(const Json& j) {
    auto c = triple_from_json(j, "line");
    return PLine(c[0], c[1], c[2]);
}

MPoly PLine::equation() const {
    MPoly e(proj_vars());
    for (std::size_t i = 0; i < 3; ++i)
        e += MPoly::variable(proj_vars(), i) * c_[i];
    return e;
}

bool incident(const PPoint& p, const PLine& l) {
    Rat dot(0);
    for (std::size_t i = 0; i < 3; ++i) dot += p[i] * l[i];
    return dot.is_zero();
}

bool collinear(const PPoint& a, const PPoint& b, const PPoint& c) {
    // determinant of the coordinate matrix
    Rat det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
              a[2] * (b[0] * c[1] - b[1] * c[0]);
    return det.is_zero();
}

PLine line_through(const PPoint& a, const PPoint& b) {
    if (a == b) throw DegeneracyError("line through a repeated point");
    auto c = cross({a[0], a[1], a[2]}, {b[0], b[1], b[2]});
    return PLine(c[0], c[1], c[2]);
}

PPoint meet(const PLine& a, const PLine& b) {
    if (a == b) throw DegeneracyError("meet of a repeated line");
    auto c = cross({a[0], a[1], a[2]}, {b[0], b[1], b[2]});
    return PPoint(c[0], c[1], c[2]);
}

std::pair<PPoint, PPoint> span_points(const PLine& l) {
    std::vector<PPoint> pts;
    const std::array<std::array<Rat, 3>, 3> basis = {
        std::array<Rat, 3>{Rat(1), Rat(0), Rat(0)},
        std::array<Rat, 3>{Rat(0), Rat(1), Rat(0)},
        std::array<Rat, 3>{Rat(0), Rat(0), Rat(1)}};
    for (const auto& e : basis) {
        auto c = cross({l[0], l[1], l[2]}, e);
        if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) continue;
        PPoint p(c[0], c[1], c[2]);
        bool dup = false;
        for (const auto& q : pts) dup = dup || q == p;
        if (!dup) pts.push_back(p);
        if (pts.size() == 2) return {pts[0], pts[1]};
    }
    throw DegeneracyError("could not span the line");  // unreachable for valid lines
}

Mat3::Mat3() {
    for (auto& row : m_)
        for (auto& x : row) x = Rat(0);
}

Mat3 Mat3::identity() {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i) m.m_[i][i] = Rat(1);
    return m;
}

Rat Mat3::det() const {
    return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) -
           m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
           m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) r.m_[i][j] += m_[i][k] * o.m_[k][j];
    return r;
}

Mat3 Mat3::inverse() const {
    const Rat d = det();
    if (d.is_zero()) throw DegeneracyError("singular matrix");
    Mat3 adj;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const std::size_t r1 = (i + 1) % 3, r2 = (i + 2) % 3;
            const std::size_t c1 = (j + 1) % 3, c2 = (j + 2) % 3;
            adj.m_[j][i] = m_[r1][c1] * m_[r2][c2] - m_[r1][c2] * m_[r2][c1];
        }
    }
    const Rat inv = d.inverse();
    for (auto& row : adj.m_)
        for (auto& x : row) x *= inv;
    return adj;
}

std::array<Rat, 3> Mat3::apply(const std::array<Rat, 3>& v) const {
    std::array<Rat, 3> r{Rat(0), Rat(0), Rat(0)};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) r[i] += m_[i][j] * v[j];
    return r;
}

LinAuto::LinAuto(Mat3 m) : m_(std::move(m)) {
    if (m_.det().is_zero()) throw DegeneracyError("linear automorphism must be invertible");
}

PPoint LinAuto::apply(const PPoint& p) const {
    auto r = m_.apply({p[0], p[1], p[2]});
    return PPoint(r[0], r[1], r[2]);
}

LinAuto LinAuto::inverse() const { return LinAuto(m_.inverse()); }

PlaneRatMap PlaneRatMap::from_components(MPoly f0, MPoly f1, MPoly f2) {
    std::array<MPoly, 3> f = {std::move(f0), std::move(f1), std::move(f2)};
    for (const auto& c : f) {
        if (c.vars() != proj_vars())
            throw StructuralError("plane map components must use variables x0, x1, x2");
        if (!c.is_homogeneous()) throw StructuralError("plane map components must be homogeneous");
    }
    int deg = -1;
    for (const auto& c : f) {
        if (c.is_zero()) continue;
        if (deg == -1) deg = c.total_degree();
        if (c.total_degree() != deg)
            throw StructuralError("plane map components must share one degree");
    }
    if (deg == -1) throw DegeneracyError("plane map with all components zero");

    MPoly g(proj_vars());
    for (const auto& c : f) g = gcd(g, c);
    if (!g.is_constant()) {
        for (auto& c : f) c = c.is_zero() ? c : *exact_divide(c, g);
    }
    // canonical scaling: first nonzero component integer primitive, positive lead
    for (const auto& c : f) {
        if (c.is_zero()) continue;
        const Rat scale = integer_primitive(c).leading_coeff() / c.leading_coeff();
        for (auto& x : f) x = x * scale;
        break;
    }
    PlaneRatMap m;
    m.f_ = std::move(f);
    return m;
}

PlaneRatMap PlaneRatMap::identity() {
    return from_components(MPoly::variable(proj_vars(), 0), MPoly::variable(proj_vars(), 1),
                           MPoly::variable(proj_vars(), 2));
}

PlaneRatMap PlaneRatMap::from_linear(const LinAuto& a) {
    std::array<MPoly, 3> f;
    for (std::size_t i = 0; i < 3; ++i) {
        MPoly c(proj_vars());
        for (std::size_t j = 0; j < 3; ++j)
            c += MPoly::variable(proj_vars(), j) * a.matrix().at(i, j);
        f[i] = std::move(c);
    }
    return from_components(f[0], f[1], f[2]);
}

bool PlaneRatMap::is_identity() const { return *this == identity(); }

Json PlaneRatMap::to_json() const {
    Json j;
    j["degree"] = degree();
    Json comps = Json::array();
    for (const auto& c : f_) comps.push_back(poly_to_json(c));
    j["components"] = std::move(comps);
    return j;
}

PlaneRatMap PlaneRatMap::from_json(const Json& j) {
    if (!j.is_object()) throw StructuralError("plane map JSON must be an object");
    reject_unknown_keys(j, {"degree", "components"}, "plane map");
    if (!j.contains("degree") || !j.contains("components") || !j["components"].is_array() ||
        j["components"].size() != 3)
        throw StructuralError("plane map needs 'degree' and three 'components'");
    PlaneRatMap m = from_components(poly_from_json(j["components"][0]),
                                    poly_from_json(j["components"][1]),
                                    poly_from_json(j["components"][2]));
    if (!j["degree"].is_number_integer() || j["degree"].get<int>() != m.degree())
        throw StructuralError("declared degree does not match the components");
    return m;
}

PlaneRatMap std_quadratic() {
    const MPoly x0 = MPoly::variable(proj_vars(), 0);
    const MPoly x1 = MPoly::variable(proj_vars(), 1);
    const MPoly x2 = MPoly::variable(proj_vars(), 2);
    return PlaneRatMap::from_components(x1 * x2, x0 * x2, x0 * x1);
}

LinAuto canonical_linauto(const PPoint& a, const PPoint& b, const PPoint& c) {
    if (collinear(a, b, c)) throw DegeneracyError("collinear triple");
    Mat3 cols;
    for (std::size_t i = 0; i < 3; ++i) {
        cols.at(i, 0) = a[i];
        cols.at(i, 1) = b[i];
        cols.at(i, 2) = c[i];
    }
    return LinAuto(cols.inverse());
}

PlaneRatMap quadratic_transform(const PPoint& a, const PPoint& b, const PPoint& c) {
    const LinAuto A = canonical_linauto(a, b, c);
    return compose(PlaneRatMap::from_linear(A.inverse()),
                   compose(std_quadratic(), PlaneRatMap::from_linear(A)));
}

PlaneRatMap compose(const PlaneRatMap& outer, const PlaneRatMap& inner) {
    std::vector<MPoly> images = {inner.component(0), inner.component(1), inner.component(2)};
    std::array<MPoly, 3> f;
    for (std::size_t i = 0; i < 3; ++i) f[i] = outer.component(i).substituted(images);
    if (f[0].is_zero() && f[1].is_zero() && f[2].is_zero())
        throw DegeneracyError("composite map is identically zero");
    return PlaneRatMap::from_components(f[0], f[1], f[2]);
}

std::optional<PPoint> evaluate(const PlaneRatMap& phi, const PPoint& p) {
    std::array<Rat, 3> v;
    const std::vector<Rat> coords = {p[0], p[1], p[2]};
    for (std::size_t i = 0; i < 3; ++i) v[i] = phi.component(i).eval(coords);
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) return std::nullopt;
    return PPoint(v[0], v[1], v[2]);
}

MPoly restrict_to_line(const MPoly& f, const PLine& line) {
    if (f.vars() != proj_vars()) throw StructuralError("expected a form in x0, x1, x2");
    const auto [p, q] = span_points(line);
    const std::vector<std::string> st = {"s", "t"};
    const MPoly s = MPoly::variable(st, 0), t = MPoly::variable(st, 1);
    std::vector<MPoly> images;
    for (std::size_t i = 0; i < 3; ++i) images.push_back(s * p[i] + t * q[i]);
    return f.substituted(images);
}

LineImage image_of_line(const PlaneRatMap& phi, const PLine& line) {
    std::array<MPoly, 3> forms;
    for (std::size_t i = 0; i < 3; ++i) forms[i] = restrict_to_line(phi.component(i), line);
    if (forms[0].is_zero() && forms[1].is_zero() && forms[2].is_zero())
        throw DegeneracyError("map is identically indeterminate on the line");

    MPoly g(forms[0].vars());
    for (const auto& f : forms) g = gcd(g, f);
    std::array<MPoly, 3> h;
    for (std::size_t i = 0; i < 3; ++i)
        h[i] = forms[i].is_zero() ? forms[i] : *exact_divide(forms[i], g);

    std::size_t pivot = 3;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!h[i].is_zero()) {
            pivot = i;
            break;
        }
    }
    auto proportional = [&](const MPoly& a, const MPoly& b) {
        if (a.is_zero()) return true;
        return a * b.leading_coeff() == b * a.leading_coeff();
    };
    if (proportional(h[(pivot + 1) % 3], h[pivot]) && proportional(h[(pivot + 2) % 3], h[pivot])) {
        std::array<Rat, 3> coords{Rat(0), Rat(0), Rat(0)};
        for (std::size_t i = 0; i < 3; ++i)
            if (!h[i].is_zero()) coords[i] = h[i].leading_coeff() / h[pivot].leading_coeff();
        return PointImage{PPoint(coords[0], coords[1], coords[2])};
    }

    // the image is a curve; a vanishing component pins it to a coordinate line
    for (std::size_t i = 0; i < 3; ++i)
        if (h[i].is_zero()) return CurveImage{MPoly::variable(proj_vars(), i)};

    const std::vector<std::string> all_vars = {"x0", "x1", "x2", "s", "t"};
    const std::size_t s_idx = 3, t_idx = 4;
    std::array<MPoly, 3> hh, xx;
    for (std::size_t i = 0; i < 3; ++i) {
        hh[i] = h[i].with_vars(all_vars);
        xx[i] = MPoly::variable(all_vars, i);
    }
    const std::size_t p = 0;  // h[0] nonzero here
    const std::size_t q = 1, r = 2;
    const MPoly a = xx[p] * hh[q] - xx[q] * hh[p];
    const MPoly b = xx[p] * hh[r] - xx[r] * hh[p];
    const int m = h[p].total_degree();
    MPoly res = form_resultant(a, b, s_idx, t_idx, m, m);
    if (res.is_zero()) throw DegeneracyError("degenerate elimination for image curve");
    MPoly curve = squarefree_part_multi(res.restricted_to(proj_vars()));
    // spurious factor from parameters where the pivot component vanishes
    const MPoly xp = MPoly::variable(proj_vars(), p);
    const int k = ord_divide(curve, xp);
    if (k > 0) {
        curve = *exact_divide(curve, xp.pow(k));
        if (curve.is_constant()) throw DegeneracyError("image curve reduced to the pivot line");
    }
    return CurveImage{integer_primitive(curve)};
}

std::vector<PPoint> base_points(const PlaneRatMap& phi) {
    if (phi.degree() > 3)
        throw StructuralError("base-point extraction is supported for degree <= 3 only");
    const std::array<MPoly, 3> f = {phi.component(0), phi.component(1), phi.component(2)};
    std::set<PPoint> found;

    auto vanishes_at = [&](const PPoint& p) {
        const std::vector<Rat> c = {p[0], p[1], p[2]};
        for (const auto& comp : f)
            if (!comp.eval(c).is_zero()) return false;
        return true;
    };
    const std::array<PPoint, 3> coord_pts = {PPoint(Rat(1), Rat(0), Rat(0)),
                                             PPoint(Rat(0), Rat(1), Rat(0)),
                                             PPoint(Rat(0), Rat(0), Rat(1))};
    for (const auto& p : coord_pts)
        if (vanishes_at(p)) found.insert(p);

    // two independent pencil members with coprime affine parts
    const std::vector<std::array<long, 3>> combos = {
        {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1},  {0, 1, 1},
        {1, 1, 1}, {1, 2, 3}, {2, -1, 1}, {1, -1, 1}, {3, 1, 2}, {1, 3, -2}};
    auto member = [&](const std::array<long, 3>& w) {
        MPoly g(proj_vars());
        for (std::size_t i = 0; i < 3; ++i) g += f[i] * Rat(w[i]);
        return g;
    };
    const std::vector<std::string> aff = {"u", "v"};
    auto dehom = [&](const MPoly& g) {
        return g.eval_partial(0, Rat(1)).restricted_to({"x1", "x2"}).renamed(aff);
    };

    bool solved = false;
    for (std::size_t i = 0; i < combos.size() && !solved; ++i) {
        for (std::size_t j = i + 1; j < combos.size() && !solved; ++j) {
            const MPoly g1 = member(combos[i]);
            const MPoly g2 = member(combos[j]);
            if (g1.is_zero() || g2.is_zero()) continue;
            if (!gcd(g1, g2).is_constant()) continue;
            const MPoly a1 = dehom(g1);
            const MPoly a2 = dehom(g2);
            if (a1.is_zero() || a2.is_zero()) continue;
            if (!a1.is_constant() && !a2.is_constant() && !gcd(a1, a2).is_constant()) continue;
            std::vector<std::pair<Rat, Rat>> sols;
            if (a1.is_constant() || a2.is_constant()) {
                // one member misses the chart entirely; no affine solutions
                sols.clear();
            } else {
                sols = solve_bivariate(a1, a2, 0, 1, /*strict=*/false);
            }
            for (const auto& [y, z] : sols) {
                const PPoint p(Rat(1), y, z);
                if (vanishes_at(p)) found.insert(p);
            }
            // the line at infinity of the chart: points (0:1:z)
            const std::vector<std::string> zv = {"z"};
            auto at_inf = [&](const MPoly& g) {
                return g.eval_partial(0, Rat(0))
                    .eval_partial(1, Rat(1))
                    .restricted_to({"x2"})
                    .renamed(zv);
            };
            const MPoly i1 = at_inf(g1);
            const MPoly i2 = at_inf(g2);
            if (!(i1.is_zero() && i2.is_zero())) {
                MPoly gg = i1.is_zero() ? i2 : (i2.is_zero() ? i1 : gcd(i1, i2));
                if (!gg.is_constant()) {
                    for (const auto& [z, m] : rational_roots(gg)) {
                        (void)m;
                        const PPoint p(Rat(0), Rat(1), z);
                        if (vanishes_at(p)) found.insert(p);
                    }
                }
            }
            solved = true;
        }
    }
    if (!solved) throw DegeneracyError("no usable pencil pair for base points");
    return {found.begin(), found.end()};
}

}  // namespace cremona
