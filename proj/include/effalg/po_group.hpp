#pragma once

#include "effalg/effect_algebra.hpp"
#include "effalg/rational.hpp"
#include "effalg/state_space.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace effalg {

enum class Scalars { Integers, Rationals };
enum class GroupOrder { Product, Lex, Strict };

std::string to_string(Scalars s);
std::string to_string(GroupOrder o);

/// Z^k or Q^k with one of three orders:
///   Product  coordinatewise <=
///   Lex      lexicographic
///   Strict   x <= y iff x = y or x_i < y_i in every coordinate
struct PoGroupSpec {
    std::size_t rank = 1;
    Scalars scalars = Scalars::Integers;
    GroupOrder order = GroupOrder::Product;
};

using GroupElement = RationalVector;

/// Throws std::invalid_argument on rank mismatch or a non-integer entry in Z^k.
bool group_leq(const PoGroupSpec& spec, const GroupElement& x, const GroupElement& y);

/// Interval [0, u] with the group addition restricted to it.
class IntervalAlgebra {
public:
    IntervalAlgebra(PoGroupSpec spec, GroupElement unit);

    const PoGroupSpec& group() const { return spec_; }
    const GroupElement& unit() const { return unit_; }

    bool contains(const GroupElement& x) const;
    /// x + y when it stays inside the interval.
    std::optional<GroupElement> sum(const GroupElement& x, const GroupElement& y) const;
    GroupElement complement(const GroupElement& x) const;

private:
    PoGroupSpec spec_;
    GroupElement unit_;
};

bool interval_contains(const IntervalAlgebra& algebra, const GroupElement& x);

inline constexpr std::size_t kDefaultMaterializeGuard = 4096;

/// Lattice points of [0,u] for the product order on Z^k; sums defined iff
/// the coordinatewise sum stays below u. Throws std::invalid_argument for
/// other orders or scalar domains and std::length_error above the guard.
FiniteEffectAlgebra materialize(const IntervalAlgebra& algebra,
    std::size_t max_elements = kDefaultMaterializeGuard);

using IntegerMatrix = std::vector<std::vector<std::int64_t>>;

IntegerMatrix matrix_multiply(const IntegerMatrix& x, const IntegerMatrix& y);
IntegerMatrix matrix_power(const IntegerMatrix& m, int exponent);

struct ExtensionInconsistency {
    Index element = 0;
    std::vector<std::int64_t> via_matrix;
    std::vector<std::int64_t> via_map;
};

/// Group homomorphism on Z^k agreeing with an endomorphism of a materialized
/// interval algebra. Column j is the image of the j-th standard generator.
struct ExtensionReport {
    IntegerMatrix matrix;
    int n = 1;
    bool n_potent = false;        // matrix^n == matrix
    bool positive = false;        // nonnegative entries, so G+ maps into G+
    bool restriction_ok = false;  // matrix agrees with the map on [0,u]
    std::optional<ExtensionInconsistency> inconsistency;

    bool ok() const { return n_potent && positive && restriction_ok; }
};

/// Each generator is decomposed greedily into interval elements (largest
/// element below the remaining part first) and the images are summed.
/// Agreement with the map on every interval element is then verified.
ExtensionReport extend_endomorphism(const FiniteEffectAlgebra& materialized,
    const std::vector<Index>& tau, int n);

/// Closed-form extremal states x -> x_i / u_i of an interval in Q^k or Z^k
/// under the product or strict order with every u_i > 0. Returned as the
/// coefficient vectors of the linear functionals.
std::vector<RationalVector> coordinate_extremal_states(const IntervalAlgebra& algebra);

/// Values of an interval element on the coordinate extremal states.
ClanElement interval_clan_element(const IntervalAlgebra& algebra, const GroupElement& x,
    std::string label = {});

/// Unique group preimage of a value vector under the coordinate states,
/// accepted only when it lies in the interval.
PreimageSolver interval_preimage_solver(const IntervalAlgebra& algebra);

} // namespace effalg
