#include "effalg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace effalg {

std::vector<std::size_t> rref(Matrix& m, std::size_t columns)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
        std::size_t pick = row;
        while (pick < m.size() && m[pick][col] == 0)
            ++pick;
        if (pick == m.size())
            continue;
        std::swap(m[row], m[pick]);
        Rational inv = 1 / m[row][col];
        for (auto& v : m[row])
            v *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            Rational f = m[r][col];
            for (std::size_t c = col; c < m[r].size(); ++c)
                m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m, std::size_t columns)
{
    return rref(m, columns).size();
}

std::optional<AffineSolution> solve_affine(const Matrix& a, const RationalVector& b,
    std::size_t columns)
{
    if (a.size() != b.size())
        throw std::invalid_argument("row count mismatch");
    Matrix aug = a;
    for (std::size_t r = 0; r < aug.size(); ++r) {
        if (aug[r].size() != columns)
            throw std::invalid_argument("column count mismatch");
        aug[r].push_back(b[r]);
    }
    auto pivots = rref(aug, columns);
    for (std::size_t r = pivots.size(); r < aug.size(); ++r)
        if (aug[r][columns] != 0)
            return std::nullopt;

    std::vector<char> is_pivot(columns, 0);
    for (auto p : pivots)
        is_pivot[p] = 1;

    AffineSolution sol;
    sol.particular.assign(columns, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        sol.particular[pivots[r]] = aug[r][columns];
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free])
            continue;
        RationalVector dir(columns, Rational(0));
        dir[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            dir[pivots[r]] = -aug[r][free];
        sol.directions.push_back(std::move(dir));
    }
    return sol;
}

std::optional<RationalVector> solve_square(Matrix a, RationalVector b)
{
    const std::size_t n = a.size();
    for (std::size_t r = 0; r < n; ++r)
        a[r].push_back(b[r]);
    auto pivots = rref(a, n);
    if (pivots.size() != n)
        return std::nullopt;
    RationalVector x(n);
    for (std::size_t r = 0; r < n; ++r)
        x[r] = a[r][n];
    return x;
}

Rational dot(const RationalVector& x, const RationalVector& y)
{
    Rational total = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        total += x[i] * y[i];
    return total;
}

} // namespace effalg
