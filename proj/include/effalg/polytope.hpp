#pragma once

#include "effalg/linalg.hpp"

#include <vector>

namespace effalg {

/// Bounded polyhedron { t : rows[i] . t <= rhs[i] } in a fixed dimension.
struct HPolytope {
    std::size_t dimension = 0;
    Matrix rows;
    RationalVector rhs;
};

/// Vertices by the double-description method on the homogenized cone
/// { (t, l) : rows.t - rhs*l <= 0, l >= 0 }. Result is duplicate-free and
/// sorted lexicographically. Throws std::invalid_argument if the polyhedron
/// is unbounded.
std::vector<RationalVector> vertices_double_description(const HPolytope& polytope);

/// Vertices by exhaustive search over sets of `dimension` linearly
/// independent tight constraints. Exponential; meant as a cross-check.
std::vector<RationalVector> vertices_active_set(const HPolytope& polytope);

bool contains(const HPolytope& polytope, const RationalVector& point);

/// Rank of the constraints tight at `point`; equals the dimension exactly
/// at vertices.
std::size_t active_rank(const HPolytope& polytope, const RationalVector& point);

} // namespace effalg
