#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cremona/projective.hpp"

namespace cremona {

/// Local coordinates used by every chart's polynomials.
const std::vector<std::string>& chart_vars();  // {"u","v"}
/// Affine coordinates of the base plane chart used in curve input/output.
const std::vector<std::string>& base_vars();  // {"x","y"}

/// Blowup center: a plane point for the first blowup, chart coordinates on
/// an exceptional locus afterwards.
struct Center {
    int level = 0;  // this center is p_level, blown up by sigma_{level+1}
    std::optional<PPoint> plane_point;  // level 0 only
    std::string chart_id;               // level >= 1 only
    std::array<Rat, 2> coords{Rat(0), Rat(0)};
};

/// One affine chart of some level of the tower. Side A maps (u,v) to
/// (alpha+u, beta+u*v) in the parent chart and carries the exceptional locus
/// u = 0; side B maps (u,v) to (alpha+u*v, beta+v) and carries v = 0.
struct Chart {
    std::string id;
    int level = 0;  // the blowup that created it; 0 for the base chart
    std::string parent_id;
    bool side_a = true;
    std::array<Rat, 2> center{Rat(0), Rat(0)};  // in parent coordinates
    std::array<std::string, 2> coord_names{"x", "y"};
    MPoly exceptional;  // over chart_vars(); constant 1 for the base chart
};

/// Canonical representation of a point of an exceptional curve E_k: the
/// direction value in the A chart, or the single point only the B chart
/// sees. Used for Z-sets and center bookkeeping.
struct EPoint {
    int curve = 0;  // index k of E_k
    bool at_infinity = false;
    Rat dir{0};

    friend bool operator==(const EPoint& a, const EPoint& b) {
        return a.curve == b.curve && a.at_infinity == b.at_infinity &&
               (a.at_infinity || a.dir == b.dir);
    }
    friend bool operator<(const EPoint& a, const EPoint& b) {
        if (a.curve != b.curve) return a.curve < b.curve;
        if (a.at_infinity != b.at_infinity) return !a.at_infinity;
        if (a.at_infinity) return false;
        return a.dir < b.dir;
    }
    std::string str() const;
};

/// Result of carrying a base curve through the tower.
struct StrictTransformResult {
    /// Equation of the strict transform in every chart of the atlas.
    std::map<std::string, MPoly> chart_equation;
    /// multiplicity[j] = multiplicity of the curve's strict transform at the
    /// center p_j, i.e. the exceptional order divided out at blowup j+1.
    std::vector<int> multiplicities;
};

/// Tower of point blowups over the plane. Built once with blow_up calls;
/// all queries are pure.
class Tower {
public:
    Tower() = default;

    /// Number of blowups performed so far (n).
    int levels() const { return static_cast<int>(centers_.size()); }

    /// Validates and appends one blowup. The first center must be a plane
    /// point; later centers are chart points on an exceptional locus.
    void blow_up(const Center& c);

    const Chart& chart(const std::string& id) const;
    bool has_chart(const std::string& id) const;
    /// Deterministic order: base, L1A, L1B, L2A, ...
    std::vector<std::string> chart_ids() const;

    const Center& center(int j) const;  // p_j, 0 <= j < levels()
    /// Resolved location of p_j: chart id plus chart coordinates ("base"
    /// chart for j = 0).
    std::pair<std::string, std::array<Rat, 2>> center_location(int j) const;
    /// Canonical exceptional-point form of p_j for j >= 1.
    EPoint center_epoint(int j) const;

    int base_patch() const;  // index i with x_i = 1 in the base chart
    const PPoint& base_center() const;

    /// Strict transform equation of E_k in the given chart, if E_k is
    /// visible there.
    std::optional<MPoly> exceptional_equation(int k, const std::string& chart_id) const;
    /// Exceptional curves passing through a chart point, ascending indices.
    std::vector<int> curves_through(const std::string& chart_id,
                                    const std::array<Rat, 2>& pt) const;

    /// Polynomial expressions of the base-chart coordinates in terms of the
    /// chart coordinates (the composed blowdown).
    std::array<MPoly, 2> pushforward(const std::string& chart_id) const;

    /// Carry a squarefree base curve up to the given level.
    StrictTransformResult strict_transform(int level, const MPoly& curve) const;

    /// Z_i of the completed tower, i = 1..n (index i-1 in the result):
    /// points of E_i where its top-level strict transform meets the other
    /// exceptional strict transforms, pushed down to level i.
    std::vector<std::set<EPoint>> z_sets() const;

    /// Canonical form of a point lying on the exceptional locus of the
    /// chart's own blowup.
    EPoint epoint_of(const std::string& chart_id, const std::array<Rat, 2>& pt) const;

    Json to_json() const;
    static Tower from_json(const Json& j);

private:
    void track_curve(int curve_index, const std::string& chart_id, MPoly eq);
    std::vector<Center> centers_;
    std::vector<Chart> charts_;                      // in creation order
    std::map<std::string, std::size_t> chart_index_;
    // tracked strict transforms of exceptional curves: (curve k, chart id)
    std::map<std::pair<int, std::string>, MPoly> tracked_;
    int base_patch_ = 0;
    std::optional<PPoint> base_center_;
    std::array<Rat, 2> base_affine_{Rat(0), Rat(0)};
    std::set<EPoint> used_centers_;  // canonical reps of centers at level >= 1
};

}  // namespace cremona
