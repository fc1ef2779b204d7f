#pragma once

#include "effalg/effect_algebra.hpp"

#include <vector>

namespace effalg {

/// Total MV operations on a lattice-ordered catalog algebra, computed in the
/// enveloping group Z^k: x (+) y = (x + y) ^ u, x* = u - x.
class MvStructure {
public:
    const FiniteEffectAlgebra& base() const { return base_; }
    std::size_t size() const { return base_.size(); }

    Index oplus(Index x, Index y) const { return oplus_[x * size() + y]; }
    Index odot(Index x, Index y) const { return odot_[x * size() + y]; }
    Index ominus(Index x, Index y) const { return ominus_[x * size() + y]; }
    Index star(Index x) const { return star_[x]; }
    Index vee(Index x, Index y) const { return base_.join(x, y); }
    Index wedge(Index x, Index y) const { return base_.meet(x, y); }

private:
    friend MvStructure mv_operations(const FiniteEffectAlgebra& algebra);

    FiniteEffectAlgebra base_;
    std::vector<Index> oplus_;
    std::vector<Index> odot_;
    std::vector<Index> ominus_;
    std::vector<Index> star_;
};

/// Requires a grid realization covering the whole box [0,u]; anything else
/// is rejected with std::invalid_argument. Verifies that the partial sum
/// derived from (+) (defined iff a <= b*) reproduces the base table.
MvStructure mv_operations(const FiniteEffectAlgebra& algebra);

} // namespace effalg
