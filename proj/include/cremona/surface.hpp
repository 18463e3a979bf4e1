#pragma once

#include <utility>
#include <vector>

#include "cremona/jsonio.hpp"
#include "cremona/mpoly.hpp"

namespace cremona {

/// Variables of the ambient affine 3-space: X, Y, Z.
const std::vector<std::string>& surf_vars();
/// Variables of the projection plane: X, Y.
const std::vector<std::string>& surf_plane_vars();

/// Monic-in-Z hypersurface Z^d + A_{d-1}(X,Y) Z^{d-1} + ... + A_0(X,Y),
/// d >= 2. Irreducibility is the caller's assertion.
class HypersurfacePoly {
public:
    static HypersurfacePoly make(MPoly p);
    const MPoly& poly() const { return p_; }
    int z_degree() const { return p_.degree_in(2); }
    Json to_json() const;
    static HypersurfacePoly from_json(const Json& j);

private:
    MPoly p_;
};

struct DiscriminantLocus {
    MPoly disc;  // over X, Y
    bool is_constant = false;
};

/// Z-discriminant of P. A constant value contradicts irreducibility and is
/// surfaced as such by the caller.
DiscriminantLocus discriminant_locus(const HypersurfacePoly& p);

/// Number of distinct complex points of the fiber over (x0, y0): the degree
/// of the squarefree part of P(x0, y0, Z).
int fiber_cardinality(const HypersurfacePoly& p, const Rat& x0, const Rat& y0);

/// Subresultant polynomial S_k(f, g) with respect to var (determinant
/// polynomial definition). S_0 is the resultant.
MPoly subresultant(const MPoly& f, const MPoly& g, std::size_t var, int k);

struct SurfaceRamificationReport {
    int generic_fiber = 0;  // d
    std::vector<std::pair<std::pair<Rat, Rat>, int>> on_curve_fibers;
    std::vector<std::pair<std::pair<Rat, Rat>, int>> control_fibers;
    bool fiber_drops_on_curve = false;
    bool full_fiber_off_curve = false;
    bool double_root_pattern = false;  // first subresultant nonzero mod delta
};

/// Fiber-count evidence that the projection is ramified exactly over the
/// discriminant component V(delta). delta must divide the discriminant and
/// every sample must lie on V(delta) exactly.
SurfaceRamificationReport ramification_over_component(
    const HypersurfacePoly& p, const MPoly& delta,
    const std::vector<std::pair<Rat, Rat>>& samples);

/// Rational points on V(delta), found by enumerating X and extracting
/// rational roots in Y. Fails loudly when the budget is exhausted.
std::vector<std::pair<Rat, Rat>> sample_points_on_curve(const MPoly& delta, int count,
                                                        int budget);

/// Rational points where avoid does not vanish.
std::vector<std::pair<Rat, Rat>> sample_points_off_curve(const MPoly& avoid, int count,
                                                         int budget);

}  // namespace cremona
