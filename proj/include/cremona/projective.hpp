#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cremona/jsonio.hpp"
#include "cremona/mpoly.hpp"

namespace cremona {

/// Homogeneous coordinate variables shared by all plane maps: x0, x1, x2.
const std::vector<std::string>& proj_vars();

/// Point of the projective plane, canonically normalized so its first
/// nonzero coordinate is 1. Equality is exact equality of the normal form.
class PPoint {
public:
    PPoint(const Rat& c0, const Rat& c1, const Rat& c2);
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    friend bool operator==(const PPoint& a, const PPoint& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PPoint& a, const PPoint& b) { return !(a == b); }
    friend bool operator<(const PPoint& a, const PPoint& b);  // for ordered sets
    std::string str() const;
    Json to_json() const;
    static PPoint from_json(const Json& j);

private:
    std::array<Rat, 3> c_;
};

/// Line of the projective plane, normalized like PPoint. A point lies on a
/// line iff the coordinate dot product is exactly zero.
class PLine {
public:
    PLine(const Rat& c0, const Rat& c1, const Rat& c2);
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    friend bool operator==(const PLine& a, const PLine& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PLine& a, const PLine& b) { return !(a == b); }
    friend bool operator<(const PLine& a, const PLine& b);
    std::string str() const;
    Json to_json() const;
    static PLine from_json(const Json& j);
    /// The line's defining linear form over proj_vars().
    MPoly equation() const;

private:
    std::array<Rat, 3> c_;
};

bool incident(const PPoint& p, const PLine& l);
bool collinear(const PPoint& a, const PPoint& b, const PPoint& c);
PLine line_through(const PPoint& a, const PPoint& b);
PPoint meet(const PLine& a, const PLine& b);

/// Two distinct points spanning the line, chosen deterministically from the
/// coordinate triangle. Parametrize L as s*first + t*second.
std::pair<PPoint, PPoint> span_points(const PLine& l);

/// 3x3 exact matrix.
class Mat3 {
public:
    Mat3();  // zero
    static Mat3 identity();
    Rat& at(std::size_t r, std::size_t c) { return m_[r][c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return m_[r][c]; }
    Rat det() const;
    Mat3 operator*(const Mat3& o) const;
    friend bool operator==(const Mat3& a, const Mat3& b) { return a.m_ == b.m_; }
    /// Throws DegeneracyError when singular.
    Mat3 inverse() const;
    std::array<Rat, 3> apply(const std::array<Rat, 3>& v) const;

private:
    std::array<std::array<Rat, 3>, 3> m_;
};

/// Invertible linear automorphism of the plane.
class LinAuto {
public:
    explicit LinAuto(Mat3 m);
    const Mat3& matrix() const { return m_; }
    PPoint apply(const PPoint& p) const;
    LinAuto inverse() const;

private:
    Mat3 m_;
};

/// Rational self-map of the plane: three coprime homogeneous components of
/// equal degree, canonically scaled (the first nonzero component is integer
/// primitive with positive leading coefficient).
class PlaneRatMap {
public:
    static PlaneRatMap from_components(MPoly f0, MPoly f1, MPoly f2);
    static PlaneRatMap identity();
    static PlaneRatMap from_linear(const LinAuto& a);

    const MPoly& component(std::size_t i) const { return f_[i]; }
    int degree() const { return f_[0].is_zero() ? f_[1].total_degree() : f_[0].total_degree(); }
    bool is_identity() const;
    friend bool operator==(const PlaneRatMap& a, const PlaneRatMap& b) { return a.f_ == b.f_; }
    friend bool operator!=(const PlaneRatMap& a, const PlaneRatMap& b) { return !(a == b); }
    Json to_json() const;
    static PlaneRatMap from_json(const Json& j);

private:
    PlaneRatMap() = default;
    std::array<MPoly, 3> f_;
};

/// (x0:x1:x2) -> (x1x2 : x0x2 : x0x1).
PlaneRatMap std_quadratic();

/// The fixed matrix sending the canonical representatives of a, b, c to the
/// coordinate points: inverse of the column matrix (a|b|c). Deterministic.
LinAuto canonical_linauto(const PPoint& a, const PPoint& b, const PPoint& c);

/// T_abc: conjugate of the standard quadratic transformation by
/// canonical_linauto. Blows up {a,b,c}, contracts the three joining lines.
PlaneRatMap quadratic_transform(const PPoint& a, const PPoint& b, const PPoint& c);

/// outer after inner, with the common polynomial factor removed.
PlaneRatMap compose(const PlaneRatMap& outer, const PlaneRatMap& inner);

/// nullopt when all three components vanish at p (indeterminate point).
std::optional<PPoint> evaluate(const PlaneRatMap& phi, const PPoint& p);

struct PointImage {
    PPoint point;
};
struct CurveImage {
    MPoly equation;  // squarefree, primitive, homogeneous in proj_vars()
};
using LineImage = std::variant<PointImage, CurveImage>;

/// Set-theoretic closure of phi(L). Either a single point (L is contracted)
/// or the squarefree primitive equation of the image curve.
LineImage image_of_line(const PlaneRatMap& phi, const PLine& line);

/// Substitute the parametrization s*P + t*Q of the line into F; the result
/// is a binary form over variables ("s","t").
MPoly restrict_to_line(const MPoly& f, const PLine& line);

/// Common zeros of the three components; rational points only, degree <= 3.
std::vector<PPoint> base_points(const PlaneRatMap& phi);

}  // namespace cremona
