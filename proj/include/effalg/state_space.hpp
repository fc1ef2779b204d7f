#pragma once

#include "effalg/effect_algebra.hpp"
#include "effalg/linalg.hpp"
#include "effalg/polytope.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace effalg {

enum class VertexMethod { DoubleDescription, ActiveSet };

struct StateOptions {
    VertexMethod method = VertexMethod::DoubleDescription;
    /// Also run the active-set search and throw std::logic_error if the two
    /// vertex sets differ.
    bool cross_check = false;
    std::size_t max_elements = 256;
};

/// All states of a finite algebra: vectors s indexed by element with
/// s(0) = 0, s(1) = 1, s(a + b) = s(a) + s(b) and 0 <= s(a) <= 1.
struct StatePolytope {
    std::size_t dimension = 0;
    Matrix equalities;
    RationalVector equality_rhs;
    /// Parametrization of the equality solutions; empty when infeasible.
    std::optional<AffineSolution> affine;
    /// The box constraints expressed in the free parameters.
    HPolytope reduced;
    /// Extremal states in lexicographic order.
    std::vector<RationalVector> vertices;

    std::size_t free_dimensions() const { return affine ? affine->directions.size() : 0; }
    bool empty() const { return vertices.empty(); }
    std::optional<std::size_t> vertex_index(const RationalVector& state) const;
};

StatePolytope compute_states(const FiniteEffectAlgebra& algebra, StateOptions options = {});

/// Exact check of every state constraint.
bool is_state(const FiniteEffectAlgebra& algebra, const RationalVector& values);

/// Per element a, the vector (s(a)) over the extremal states.
struct EvaluationImage {
    std::vector<RationalVector> hats;
};

EvaluationImage evaluation_image(const FiniteEffectAlgebra& algebra, const StatePolytope& states);

struct OrderDeterminingReport {
    bool order_determining = true;
    /// (a, b) with s(a) <= s(b) for every state but not a <= b.
    std::optional<std::pair<Index, Index>> order_witness;
    bool separating = true;
    /// Distinct (a, b) that no state tells apart.
    std::optional<std::pair<Index, Index>> separating_witness;
};

/// Works on any finite family of elements given their values on a set of
/// states and the true order among them.
OrderDeterminingReport order_determining_on(std::span<const RationalVector> hats,
    const std::function<bool(std::size_t, std::size_t)>& leq);

OrderDeterminingReport is_order_determining(const FiniteEffectAlgebra& algebra,
    const StatePolytope& states);

/// Whether a -> a^ is an isomorphism of E onto the image family ordered by
/// its own partial sum: injective, and a <= b iff b^ - a^ is again an image.
bool hat_is_order_isomorphism(const FiniteEffectAlgebra& algebra, const EvaluationImage& image);

/// Minimal n with s(E) inside {0, 1/n, ..., 1}.
std::int64_t discrete_profile(const RationalVector& state);

/// An element known only through its values on the extremal states.
struct ClanElement {
    std::string label;
    RationalVector values;
};

/// Returns the element of the ambient algebra whose value vector is exactly
/// `target`, or nullopt when no such element exists.
using PreimageSolver = std::function<std::optional<ClanElement>(const RationalVector& target)>;

struct ClanWitness {
    enum class Kind { Unit, Complement, Sum } kind = Kind::Sum;
    std::size_t f = 0;
    std::size_t g = 0;
    RationalVector target;
};

struct ClanReport {
    bool closed = true;
    std::optional<ClanWitness> witness;
    std::size_t pairs_checked = 0;
};

/// Checks that the family is closed under f -> 1 - f and under f + g when
/// f <= 1 - g at every extremal state, each result having a preimage.
/// Throws std::invalid_argument when no solver is supplied.
ClanReport clan_closure_witness(std::span<const ClanElement> elements,
    const PreimageSolver& solver);

/// Preimage lookup inside the evaluation image of a finite algebra.
PreimageSolver finite_preimage_solver(const FiniteEffectAlgebra& algebra,
    const EvaluationImage& image);

std::vector<ClanElement> clan_elements(const FiniteEffectAlgebra& algebra,
    const EvaluationImage& image);

} // namespace effalg
