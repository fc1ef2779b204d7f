#include "effalg/mv_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace effalg {

MvStructure mv_operations(const FiniteEffectAlgebra& algebra)
{
    const auto& grid = algebra.grid();
    if (!grid || !grid->is_full_box())
        throw std::invalid_argument("MV operations need a product-of-chains algebra");

    const std::size_t n = algebra.size();
    const auto& unit = grid->unit;
    MvStructure mv;
    mv.base_ = algebra;
    mv.oplus_.assign(n * n, kUndefined);
    mv.star_.assign(n, kUndefined);

    auto locate = [&](const std::vector<std::int64_t>& p) {
        auto found = grid->find(p);
        if (!found)
            throw std::logic_error("grid point outside the algebra");
        return *found;
    };

    std::vector<std::int64_t> point(unit.size());
    for (Index x = 0; x < n; ++x) {
        for (std::size_t k = 0; k < unit.size(); ++k)
            point[k] = unit[k] - grid->coords[x][k];
        mv.star_[x] = locate(point);
        for (Index y = 0; y < n; ++y) {
            for (std::size_t k = 0; k < unit.size(); ++k)
                point[k] = std::min(grid->coords[x][k] + grid->coords[y][k], unit[k]);
            mv.oplus_[x * n + y] = locate(point);
        }
    }

    mv.odot_.assign(n * n, kUndefined);
    mv.ominus_.assign(n * n, kUndefined);
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            mv.odot_[x * n + y] = mv.star_[mv.oplus_[mv.star_[x] * n + mv.star_[y]]];
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            mv.ominus_[x * n + y] = mv.odot_[x * n + mv.star_[y]];

    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            Index derived = algebra.leq(a, mv.star_[b]) ? mv.oplus_[a * n + b] : kUndefined;
            if (derived != algebra.sum(a, b))
                throw std::logic_error("derived partial sum disagrees with the base table at ("
                    + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    return mv;
}

} // namespace effalg
