#pragma once

#include "effalg/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace effalg {

/// Dense row-major matrix of exact rationals.
using Matrix = std::vector<RationalVector>;

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
std::vector<std::size_t> rref(Matrix& m, std::size_t columns);

std::size_t rank(Matrix m, std::size_t columns);

/// Solution set of A x = b written as x = particular + sum_j t_j directions[j].
struct AffineSolution {
    RationalVector particular;
    std::vector<RationalVector> directions;
};

/// nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& a, const RationalVector& b,
    std::size_t columns);

/// Unique solution of a square system, or nullopt when singular.
std::optional<RationalVector> solve_square(Matrix a, RationalVector b);

Rational dot(const RationalVector& x, const RationalVector& y);

} // namespace effalg
