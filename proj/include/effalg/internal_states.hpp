#pragma once

#include "effalg/effect_algebra.hpp"
#include "effalg/mv_algebra.hpp"
#include "effalg/probes.hpp"
#include "effalg/state_space.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace effalg {

/// Total self-map on element indices.
using ElementMap = std::vector<Index>;

ElementMap identity_map(std::size_t n);
/// (f o g)(a) = f(g(a)).
ElementMap compose(const ElementMap& f, const ElementMap& g);
ElementMap map_power(const ElementMap& f, int exponent);
bool is_n_potent(const ElementMap& f, int n);
/// Smallest n >= 2 with f^n = f, if any: one more than the lcm of the
/// cycle lengths on the image, provided the image consists of cycles.
std::optional<int> minimal_potency(const ElementMap& f);

/// Preserves 1 and every defined sum.
bool is_endomorphism(const FiniteEffectAlgebra& algebra, const ElementMap& f);

std::vector<Index> kernel(const FiniteEffectAlgebra& algebra, const ElementMap& f);

struct EnumerationOptions {
    std::size_t max_elements = 64;
    std::uint64_t max_nodes = 50'000'000;
};

/// All endomorphisms by backtracking in topological order, propagating
/// complements and pruning on every fully assigned sum. Sorted
/// lexicographically. Throws std::length_error when a guard trips.
std::vector<ElementMap> enumerate_endomorphisms(const FiniteEffectAlgebra& algebra,
    EnumerationOptions options = {});

struct Classification {
    bool endomorphism = false;
    /// Every n in [1, bound] with f^n = f.
    std::vector<int> potencies;
    std::optional<int> minimal_potency;
    bool state_operator = false;   // f^2 = f
    bool strong = false;           // f(f(a) v f(b)) = f(a) v f(b) for existing joins
    bool state_morphism = false;   // idempotent and preserves existing joins
    bool preserves_joins = false;
    bool preserves_meets = false;
    bool faithful = false;
    std::vector<Index> kernel;
};

/// `bound` = 0 means |E|.
Classification classify(const FiniteEffectAlgebra& algebra, const ElementMap& f, int bound = 0);

/// s o f as a value vector.
RationalVector precompose(const RationalVector& state, const ElementMap& f);

/// s o f is again extremal for every extremal s (vacuous without states).
bool check_esp(const ElementMap& f, const StatePolytope& states);

/// The affine map s -> s o f on the state polytope, checked on its vertices
/// and on random convex combinations of them.
struct InducedStateMap {
    int n = 1;
    std::vector<RationalVector> images;
    /// Vertex index of each image when the image is extremal.
    std::vector<std::optional<std::size_t>> vertex_images;
    bool images_are_states = true;
    bool n_potent_on_vertices = true;
    bool affine_on_probes = true;
    bool value_sets_included = true;
    std::size_t probes = 0;
    std::string failure;

    bool ok() const
    {
        return images_are_states && n_potent_on_vertices && affine_on_probes && value_sets_included;
    }
    /// The vertex map when every image is extremal.
    std::optional<std::vector<std::size_t>> vertex_map() const;
};

InducedStateMap induced_map(const FiniteEffectAlgebra& algebra, const ElementMap& f,
    const StatePolytope& states, int n, ProbeSource& probes, std::size_t probe_count = 100);

enum class ItemStatus { Holds, Vacuous, Fails, PreconditionViolated };

std::string to_string(ItemStatus s);

struct PropertyItem {
    std::string item;
    ItemStatus status = ItemStatus::Holds;
    std::string detail;
};

/// Checks, for an idempotent endomorphism:
///   strong-meets              strong => meets f(a) ^ f(b) are fixed by f
///   image-subalgebra          f(E) is the fixed-point set and a subalgebra;
///                             strong => joins f(a) v f(b) land in f(E)
///   rdp-inherited             RDP(E) => RDP(f(E))
///   faithful-monotone         faithful => a < b gives f(a) < f(b)
///   faithful-incomparable     faithful => f(a) = a or f(a), a incomparable
///   linear-faithful-identity  linear and faithful => f = id
///   antilattice-preserving    antilattice => existing joins and meets kept
///   faithful-strong           faithful => strong
struct OperatorPropertyReport {
    bool precondition_ok = true;
    std::vector<PropertyItem> items;
    /// Whether every existing meet is preserved; informational only.
    std::optional<bool> all_meets_preserved;

    bool all_hold() const;
};

OperatorPropertyReport operator_property_suite(const FiniteEffectAlgebra& algebra, const ElementMap& f);

/// Direct evaluation of the four state MV-algebra axioms:
///   zero            f(0) = 0
///   star            f(x*) = f(x)*
///   additivity      f(x (+) y) = f(x) (+) f(y (.) (x (.) y)*)
///   idempotent_sum  f(f(x) (+) f(y)) = f(x) (+) f(y)
struct MvAxioms {
    bool zero = true;
    bool star = true;
    bool additivity = true;
    bool idempotent_sum = true;

    bool all() const { return zero && star && additivity && idempotent_sum; }
};

MvAxioms evaluate_mv_axioms(const MvStructure& mv, const ElementMap& f);

/// MV endomorphism (preserves (+), * and 0) with f^2 = f.
bool is_mv_state_morphism(const MvStructure& mv, const ElementMap& f);

struct MvCorrespondenceReport {
    MvAxioms axioms;
    bool mv_state_operator = false;
    bool mv_state_morphism = false;
    bool effect_endomorphism = false;
    bool effect_strong = false;
    bool effect_state_morphism = false;
    bool esp = false;

    bool state_operator_equivalence() const { return mv_state_operator == effect_strong; }
    bool state_morphism_equivalence() const
    {
        return mv_state_morphism == (effect_state_morphism && esp);
    }
};

MvCorrespondenceReport mv_correspondence(const MvStructure& mv, const ElementMap& f,
    const StatePolytope& states);

struct ExhaustiveMvReport {
    std::uint64_t maps_covered = 0;
    std::uint64_t leaves_evaluated = 0;
    std::uint64_t mv_state_operators = 0;
    std::uint64_t mv_state_morphisms = 0;
    std::optional<ElementMap> counterexample;
};

/// Runs both equivalences over every unary self-map. Subtrees of partial
/// maps are skipped only when a fully assigned instance already refutes all
/// four predicates, so every map is accounted for.
ExhaustiveMvReport exhaustive_mv_correspondence(const MvStructure& mv, const StatePolytope& states);

} // namespace effalg
