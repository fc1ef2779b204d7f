#pragma once

#include "effalg/effect_algebra.hpp"

#include <array>
#include <optional>
#include <vector>

namespace effalg {

struct RdpReport {
    /// x1 + x2 = y1 + y2 always refines through a 2x2 matrix.
    bool holds = true;
    /// (x1, x2, y1, y2) admitting no refinement.
    std::optional<std::array<Index, 4>> witness;
    /// x <= y1 + y2 always splits as x1 + x2 with x1 <= y1, x2 <= y2.
    bool splitting_holds = true;
    /// (x, y1, y2) that cannot be split.
    std::optional<std::array<Index, 3>> splitting_witness;

    bool formulations_agree() const { return holds == splitting_holds; }
};

RdpReport check_rdp(const FiniteEffectAlgebra& algebra);

/// Refinement c11, c12, c21, c22 of x1 + x2 = y1 + y2, if one exists.
std::optional<std::array<Index, 4>> find_refinement(const FiniteEffectAlgebra& algebra,
    Index x1, Index x2, Index y1, Index y2);

struct InterpolationReport {
    bool holds = true;
    /// (x1, x2, y1, y2) with every xi <= yj but nothing in between.
    std::optional<std::array<Index, 4>> witness;
};

/// Finite interpolation: x1, x2 <= y1, y2 gives some z with xi <= z <= yj.
/// On a finite poset this is all that countable interpolation asks.
InterpolationReport check_interpolation(const FiniteEffectAlgebra& algebra);

enum class LatticeClass { Lattice, Antilattice, Neither, Both };

std::string to_string(LatticeClass c);

struct LatticeReport {
    LatticeClass lattice_class = LatticeClass::Both;
    /// A pair with no join or no meet (shows "not a lattice").
    std::optional<std::array<Index, 2>> missing_bound;
    /// An incomparable pair with a join or meet (shows "not an antilattice").
    std::optional<std::array<Index, 2>> incomparable_bound;
};

LatticeReport classify_lattice(const FiniteEffectAlgebra& algebra);

/// Ideal as a membership mask.
struct Ideal {
    std::vector<char> members;
    bool riesz = false;
    /// Set only when an endomorphism was supplied.
    std::optional<bool> tau_ideal;

    std::vector<Index> elements() const;
};

bool is_ideal(const FiniteEffectAlgebra& algebra, const std::vector<char>& members);
bool is_riesz_ideal(const FiniteEffectAlgebra& algebra, const std::vector<char>& members);

/// Smallest ideal containing the seed elements.
std::vector<char> ideal_closure(const FiniteEffectAlgebra& algebra, std::vector<char> members);

inline constexpr std::size_t kDefaultIdealGuard = 64;

/// Every ideal, ordered by size then membership. Throws std::length_error
/// when |E| exceeds the guard.
std::vector<Ideal> enumerate_ideals(const FiniteEffectAlgebra& algebra,
    const std::vector<Index>* tau = nullptr, std::size_t max_elements = kDefaultIdealGuard);

struct StructureReport {
    RdpReport rdp;
    InterpolationReport interpolation;
    LatticeReport lattice;
    std::size_t ideal_count = 0;
    std::size_t riesz_ideal_count = 0;
};

StructureReport analyze_structure(const FiniteEffectAlgebra& algebra,
    std::size_t ideal_guard = kDefaultIdealGuard);

} // namespace effalg
