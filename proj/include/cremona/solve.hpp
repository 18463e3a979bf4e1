#pragma once

#include <utility>
#include <vector>

#include "cremona/mpoly.hpp"

namespace cremona {

/// Product of the distinct irreducible factors, canonicalized. Works in any
/// number of variables (characteristic zero).
MPoly squarefree_part_multi(const MPoly& f);

/// Resultant of two binary forms in the variables s_idx, t_idx with respect
/// to their formal degrees (the forms are homogeneous in (s, t) of the given
/// degrees). Common roots at (0:1) are accounted for, unlike a plain
/// univariate resultant on the dehomogenization.
MPoly form_resultant(const MPoly& a, const MPoly& b, std::size_t s_idx, std::size_t t_idx,
                     int deg_a, int deg_b);

/// All rational common zeros of two bivariate polynomials in (vars[u_idx],
/// vars[v_idx]). The polynomials must be coprime (a one-dimensional common
/// locus raises DegeneracyError). In strict mode, any evidence of a
/// non-rational common zero raises UnsupportedFieldError instead of being
/// silently dropped; in quiet mode non-rational candidates are skipped.
std::vector<std::pair<Rat, Rat>> solve_bivariate(const MPoly& p, const MPoly& q,
                                                 std::size_t u_idx, std::size_t v_idx,
                                                 bool strict);

}  // namespace cremona
