#pragma once

#include "effalg/effect_algebra.hpp"
#include "effalg/internal_states.hpp"
#include "effalg/probes.hpp"
#include "effalg/state_space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace effalg {

/// Simplex spanned by finitely many labelled vertices. Points are convex
/// weight vectors over the vertices.
struct FiniteSimplex {
    std::vector<std::string> labels;

    std::size_t size() const { return labels.size(); }
    bool is_point(const RationalVector& weights) const;
    RationalVector vertex(std::size_t i) const;
};

/// Vertex-to-vertex function g, extended affinely by pushing weights forward.
struct VertexMap {
    std::vector<std::size_t> images;
    int n = 2;

    RationalVector apply(const RationalVector& weights) const;
    VertexMap power(int exponent) const;
    bool is_n_potent() const;
};

/// Affine functions on a finite simplex with values in [0,1], held as their
/// vertex values. Sums are partial (vertexwise sum <= 1); joins and meets are
/// vertexwise max and min.
class LazyAffineAlgebra {
public:
    explicit LazyAffineAlgebra(std::size_t vertices)
        : m_(vertices)
    {
    }

    std::size_t vertex_count() const { return m_; }
    bool contains(const RationalVector& f) const;
    std::optional<RationalVector> sum(const RationalVector& f, const RationalVector& g) const;
    RationalVector complement(const RationalVector& f) const;
    RationalVector join(const RationalVector& f, const RationalVector& g) const;
    RationalVector meet(const RationalVector& f, const RationalVector& g) const;
    bool leq(const RationalVector& f, const RationalVector& g) const;
    RationalVector zero() const { return RationalVector(m_, Rational(0)); }
    RationalVector one() const { return RationalVector(m_, Rational(1)); }
    /// Characteristic function of one vertex.
    RationalVector indicator(std::size_t vertex) const;

private:
    std::size_t m_;
};

/// Value of an affine function at a point of the simplex.
Rational evaluate(const RationalVector& f, const RationalVector& point);

/// f -> f o g on the lazy algebra.
struct PullbackOperator {
    VertexMap g;

    RationalVector apply(const RationalVector& f) const;
};

struct FunctorT {
    LazyAffineAlgebra algebra;
    PullbackOperator tau;
};

/// Throws std::invalid_argument unless g^n = g.
FunctorT functor_T(const FiniteSimplex& simplex, const VertexMap& g);

struct FunctorS {
    StatePolytope states;
    InducedStateMap g;
};

/// Throws std::invalid_argument unless f is an n-potent endomorphism.
FunctorS functor_S(const FiniteEffectAlgebra& algebra, const ElementMap& f, int n,
    ProbeSource& probes);

/// A state on the lazy algebra, written through its weights on the vertex
/// evaluations.
struct EvaluationState {
    RationalVector weights;

    Rational operator()(const RationalVector& f) const { return evaluate(f, weights); }
};

/// p(x)(f) = f(x).
EvaluationState evaluation_map(const FiniteSimplex& simplex, const RationalVector& point);

/// g'(s) = s o tau_g, reconstructed from the values of s o tau_g on the
/// vertex indicators of the lazy algebra.
EvaluationState induced_on_states(const FunctorT& t, const EvaluationState& s);

struct EvaluationReport {
    bool bijective_on_vertices = true;
    bool extremal_states_match = true;
    std::size_t chains_checked = 0;
};

/// Checks that p sends vertices to pairwise distinct extremal states and that
/// the extremal states of the finite subalgebras {0, 1/q, ..., 1}^V are
/// exactly the vertex evaluations, for q up to max_denominator.
EvaluationReport check_evaluation_map(const FiniteSimplex& simplex, int max_denominator = 2);

struct RoundTripReport {
    bool ok = true;
    std::string failure;
    /// Point (weights) where p o g and g' o p differ.
    std::optional<RationalVector> witness;
    std::size_t points_checked = 0;
    std::size_t functions_checked = 0;
};

/// S o T law: p o g = g' o p at every vertex and at random interior points;
/// also tau_g^n = tau_g, g'^n = g' and join/meet preservation on probes.
RoundTripReport round_trip_check(const FiniteSimplex& simplex, const VertexMap& g,
    ProbeSource& probes, std::size_t interior_points = 50);

/// T o S law on a finite object: a -> a^ is injective, order-reflecting,
/// additive and intertwines f with the pullback along the induced vertex
/// map. Requires f to satisfy ESP so that the induced map is a vertex map.
RoundTripReport embedding_check(const FiniteEffectAlgebra& algebra, const ElementMap& f, int n,
    ProbeSource& probes);

struct MorphismReport {
    bool ok = true;
    std::string law;
    std::optional<std::size_t> witness;
};

/// h : (E1, f1) -> (E2, f2): homomorphism, preserves existing joins and
/// meets, and h o f1 = f2 o h.
MorphismReport morphism_check(const FiniteEffectAlgebra& source, const ElementMap& source_op,
    const FiniteEffectAlgebra& target, const ElementMap& target_op, const ElementMap& h);

/// p : (simplex1, g1) -> (simplex2, g2), given by the image of each vertex
/// as a weight vector: extreme points go to extreme points and p o g1 = g2 o p.
MorphismReport morphism_check(const VertexMap& g1, const VertexMap& g2,
    const std::vector<RationalVector>& p);

/// S(h)(s) = s o h, a map from states of the target to states of the source.
RationalVector state_pullback(const ElementMap& h, const RationalVector& state);

} // namespace effalg
