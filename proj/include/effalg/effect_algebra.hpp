#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace effalg {

using Index = std::size_t;

inline constexpr Index kUndefined = static_cast<Index>(-1);

/// Partial sum entry a + b = c, by element index.
struct SumTriple {
    Index a = 0;
    Index b = 0;
    Index c = 0;

    friend bool operator==(const SumTriple&, const SumTriple&) = default;
    friend auto operator<=>(const SumTriple&, const SumTriple&) = default;
};

/// Unvalidated input: a partial sum table over n indices. Both orientations
/// of every commutative entry must be listed.
struct RawSumTable {
    std::size_t n = 0;
    std::vector<SumTriple> sums;
    std::vector<std::string> labels;
};

/// Lattice-point realization of an algebra as a subset of a box [0,u] in Z^k.
/// Present for catalog algebras and materialized interval algebras; used by
/// the MV operations and the group-homomorphism extension.
struct GridRealization {
    std::vector<std::int64_t> unit;
    std::vector<std::vector<std::int64_t>> coords;

    bool is_full_box() const;
    std::optional<Index> find(const std::vector<std::int64_t>& point) const;
};

enum class Axiom {
    TableShape,  // index out of range or a pair mapped to two results
    Commutativity,
    Associativity,
    Orthosupplement,
    ZeroOne,     // a + 1 defined for a != 0
    Convention,  // index 0 is not the zero or index n-1 is not the unit
};

std::string to_string(Axiom axiom);

struct AxiomViolation {
    Axiom axiom = Axiom::TableShape;
    std::vector<Index> witness;
    std::string message;
};

/// A validated finite effect algebra. Element 0 is the zero and element
/// n-1 the unit; immutable once constructed.
class FiniteEffectAlgebra {
public:
    std::size_t size() const { return n_; }
    Index zero() const { return 0; }
    Index one() const { return n_ - 1; }

    /// a + b, or kUndefined.
    Index sum(Index a, Index b) const { return sum_[a * n_ + b]; }
    bool defined(Index a, Index b) const { return sum(a, b) != kUndefined; }
    Index complement(Index a) const { return complement_[a]; }
    bool leq(Index a, Index b) const { return leq_[a * n_ + b] != 0; }
    bool less(Index a, Index b) const { return a != b && leq(a, b); }
    bool comparable(Index a, Index b) const { return leq(a, b) || leq(b, a); }
    /// b - a when a <= b, else kUndefined.
    Index minus(Index b, Index a) const { return minus_[b * n_ + a]; }
    /// Least upper bound / greatest lower bound when they exist.
    Index join(Index a, Index b) const { return join_[a * n_ + b]; }
    Index meet(Index a, Index b) const { return meet_[a * n_ + b]; }

    const std::string& label(Index a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<Index> find_label(const std::string& label) const;

    /// All defined entries, both orientations, sorted.
    std::vector<SumTriple> sum_triples() const;
    RawSumTable raw() const;

    const std::optional<GridRealization>& grid() const { return grid_; }
    FiniteEffectAlgebra with_grid(GridRealization grid) const;

    /// Elements sorted so that every element comes after everything below it.
    const std::vector<Index>& topological_order() const { return topo_; }

    bool is_linear() const;

    friend bool operator==(const FiniteEffectAlgebra& x, const FiniteEffectAlgebra& y)
    {
        return x.n_ == y.n_ && x.sum_ == y.sum_;
    }

private:
    friend struct AlgebraBuilder;

    std::size_t n_ = 0;
    std::vector<Index> sum_;
    std::vector<Index> complement_;
    std::vector<char> leq_;
    std::vector<Index> minus_;
    std::vector<Index> join_;
    std::vector<Index> meet_;
    std::vector<Index> topo_;
    std::vector<std::string> labels_;
    std::optional<GridRealization> grid_;
};

/// Either a validated algebra or the first violated axiom.
struct ValidationResult {
    std::optional<FiniteEffectAlgebra> algebra;
    std::optional<AxiomViolation> violation;

    bool ok() const { return algebra.has_value(); }
};

/// Checks the table against the effect-algebra axioms: commutativity,
/// partial associativity, unique orthosupplement, a + 1 defined only for
/// a = 0, and the index conventions (0 is the zero, n-1 is the unit).
ValidationResult validate_axioms(const RawSumTable& table);

/// Throws std::invalid_argument carrying the violation message.
FiniteEffectAlgebra make_algebra(const RawSumTable& table);

/// Builds the sub-effect-algebra on the given members. The subset must
/// contain 0 and 1 and be closed under complement and defined sums.
/// Members are renumbered in increasing index order.
std::optional<FiniteEffectAlgebra> subalgebra(const FiniteEffectAlgebra& algebra,
    const std::vector<Index>& members);

/// Relabels by a permutation fixing 0 and n-1; perm[old] = new.
FiniteEffectAlgebra permute(const FiniteEffectAlgebra& algebra, const std::vector<Index>& perm);

/// Searches for an isomorphism; returns map[index in x] = index in y.
std::optional<std::vector<Index>> find_isomorphism(const FiniteEffectAlgebra& x,
    const FiniteEffectAlgebra& y);

} // namespace effalg
