#pragma once

#include "effalg/effect_algebra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace effalg {

enum class CatalogKind { Boolean, Chain, Product, EvenSubsets, MvProduct };

/// Description of a standard finite effect algebra.
///   Boolean k        characteristic functions of subsets of {1..k}
///   Chain n          {0, 1/n, ..., 1} with truncated sum
///   Product          coordinatewise partial sum of the factors
///   EvenSubsets m    characteristic functions of even subsets of {1..m}
///   MvProduct        product of chains, kept as an MV-algebra
struct CatalogSpec {
    CatalogKind kind = CatalogKind::Chain;
    int parameter = 1;
    std::vector<CatalogSpec> factors;
    std::vector<int> chains;

    static CatalogSpec boolean(int k);
    static CatalogSpec chain(int n);
    static CatalogSpec product(std::vector<CatalogSpec> factors);
    static CatalogSpec even_subsets(int m);
    static CatalogSpec mv_product(std::vector<int> chains);

    std::string name() const;
};

inline constexpr std::size_t kDefaultCatalogGuard = 256;

/// Throws std::invalid_argument on bad parameters or when the algebra would
/// exceed max_elements.
FiniteEffectAlgebra build_catalog(const CatalogSpec& spec,
    std::size_t max_elements = kDefaultCatalogGuard);

/// Algebra on a set of lattice points of [0,unit]: a + b is defined iff the
/// coordinatewise sum is again one of the points. The result is validated.
FiniteEffectAlgebra algebra_from_points(std::vector<std::int64_t> unit,
    std::vector<std::vector<std::int64_t>> points, std::vector<std::string> labels = {});

/// Direct product with coordinatewise partial sum.
FiniteEffectAlgebra product(const FiniteEffectAlgebra& x, const FiniteEffectAlgebra& y);

/// Index of the pair (a, b) inside product(x, y).
inline Index product_index(const FiniteEffectAlgebra& y, Index a, Index b)
{
    return a * y.size() + b;
}

} // namespace effalg
