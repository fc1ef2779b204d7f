#include "effalg/po_group.hpp"

#include "effalg/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace effalg {

std::string to_string(Scalars s)
{
    return s == Scalars::Integers ? "Z" : "Q";
}

std::string to_string(GroupOrder o)
{
    switch (o) {
    case GroupOrder::Product:
        return "product";
    case GroupOrder::Lex:
        return "lex";
    case GroupOrder::Strict:
        return "strict";
    }
    return "unknown";
}

namespace {

void check_element(const PoGroupSpec& spec, const GroupElement& x)
{
    if (x.size() != spec.rank)
        throw std::invalid_argument("group element has rank " + std::to_string(x.size())
            + ", expected " + std::to_string(spec.rank));
    if (spec.scalars == Scalars::Integers)
        for (const auto& v : x)
            if (v.get_den() != 1)
                throw std::invalid_argument("non-integer entry " + to_string(v) + " in Z^k");
}

} // namespace

bool group_leq(const PoGroupSpec& spec, const GroupElement& x, const GroupElement& y)
{
    check_element(spec, x);
    check_element(spec, y);
    switch (spec.order) {
    case GroupOrder::Product:
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] > y[i])
                return false;
        return true;
    case GroupOrder::Lex:
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != y[i])
                return x[i] < y[i];
        return true;
    case GroupOrder::Strict:
        if (x == y)
            return true;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!(x[i] < y[i]))
                return false;
        return true;
    }
    return false;
}

IntervalAlgebra::IntervalAlgebra(PoGroupSpec spec, GroupElement unit)
    : spec_(spec)
    , unit_(std::move(unit))
{
    if (spec_.rank == 0)
        throw std::invalid_argument("group rank must be positive");
    if (!group_leq(spec_, GroupElement(spec_.rank, Rational(0)), unit_))
        throw std::invalid_argument("unit must be positive");
}

bool IntervalAlgebra::contains(const GroupElement& x) const
{
    return group_leq(spec_, GroupElement(spec_.rank, Rational(0)), x) && group_leq(spec_, x, unit_);
}

std::optional<GroupElement> IntervalAlgebra::sum(const GroupElement& x, const GroupElement& y) const
{
    if (!contains(x) || !contains(y))
        return std::nullopt;
    GroupElement total = x;
    for (std::size_t i = 0; i < total.size(); ++i)
        total[i] += y[i];
    if (!contains(total))
        return std::nullopt;
    return total;
}

GroupElement IntervalAlgebra::complement(const GroupElement& x) const
{
    GroupElement out = unit_;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= x[i];
    return out;
}

bool interval_contains(const IntervalAlgebra& algebra, const GroupElement& x)
{
    return algebra.contains(x);
}

FiniteEffectAlgebra materialize(const IntervalAlgebra& algebra, std::size_t max_elements)
{
    const auto& spec = algebra.group();
    if (spec.order != GroupOrder::Product || spec.scalars != Scalars::Integers)
        throw std::invalid_argument("only product-ordered Z^k intervals materialize");
    std::vector<std::int64_t> unit;
    std::size_t count = 1;
    for (const auto& v : algebra.unit()) {
        if (!v.get_num().fits_slong_p())
            throw std::length_error("unit coordinate too large");
        unit.push_back(v.get_num().get_si());
        count *= static_cast<std::size_t>(unit.back() + 1);
        if (count > max_elements)
            throw std::length_error("interval has more than " + std::to_string(max_elements)
                + " lattice points");
    }

    std::vector<std::vector<std::int64_t>> points{{}};
    for (auto u : unit) {
        std::vector<std::vector<std::int64_t>> next;
        for (const auto& p : points)
            for (std::int64_t v = 0; v <= u; ++v) {
                auto q = p;
                q.push_back(v);
                next.push_back(std::move(q));
            }
        points = std::move(next);
    }
    std::vector<std::string> labels;
    for (const auto& p : points) {
        std::string l = "(";
        for (std::size_t i = 0; i < p.size(); ++i)
            l += (i ? "," : "") + std::to_string(p[i]);
        labels.push_back(l + ")");
    }
    return algebra_from_points(std::move(unit), std::move(points), std::move(labels));
}

IntegerMatrix matrix_multiply(const IntegerMatrix& x, const IntegerMatrix& y)
{
    const std::size_t k = x.size();
    IntegerMatrix out(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < k; ++j)
                out[i][j] += x[i][l] * y[l][j];
    return out;
}

IntegerMatrix matrix_power(const IntegerMatrix& m, int exponent)
{
    if (exponent < 1)
        throw std::invalid_argument("exponent must be positive");
    IntegerMatrix out = m;
    for (int e = 1; e < exponent; ++e)
        out = matrix_multiply(out, m);
    return out;
}

ExtensionReport extend_endomorphism(const FiniteEffectAlgebra& e, const std::vector<Index>& tau, int n)
{
    const auto& grid = e.grid();
    if (!grid || !grid->is_full_box())
        throw std::invalid_argument("extension needs a materialized product-order interval");
    if (tau.size() != e.size())
        throw std::invalid_argument("map size does not match the algebra");
    const auto& unit = grid->unit;
    const std::size_t k = unit.size();

    ExtensionReport report;
    report.n = n;
    report.matrix.assign(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::int64_t> remaining(k, 0);
        remaining[j] = 1;
        std::vector<std::int64_t> image(k, 0);
        while (remaining != std::vector<std::int64_t>(k, 0)) {
            std::vector<std::int64_t> piece(k);
            for (std::size_t i = 0; i < k; ++i)
                piece[i] = std::min(remaining[i], unit[i]);
            if (piece == std::vector<std::int64_t>(k, 0))
                throw std::invalid_argument("unit does not generate the group");
            auto index = grid->find(piece);
            if (!index)
                throw std::logic_error("greedy piece outside the interval");
            const auto& mapped = grid->coords[tau[*index]];
            for (std::size_t i = 0; i < k; ++i) {
                image[i] += mapped[i];
                remaining[i] -= piece[i];
            }
        }
        for (std::size_t i = 0; i < k; ++i)
            report.matrix[i][j] = image[i];
    }

    report.restriction_ok = true;
    for (Index a = 0; a < e.size() && report.restriction_ok; ++a) {
        std::vector<std::int64_t> via(k, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                via[i] += report.matrix[i][j] * grid->coords[a][j];
        if (via != grid->coords[tau[a]]) {
            report.restriction_ok = false;
            report.inconsistency = ExtensionInconsistency{a, via, grid->coords[tau[a]]};
        }
    }
    report.n_potent = matrix_power(report.matrix, n) == report.matrix;
    report.positive = true;
    for (const auto& row : report.matrix)
        for (auto v : row)
            if (v < 0)
                report.positive = false;
    return report;
}

std::vector<RationalVector> coordinate_extremal_states(const IntervalAlgebra& algebra)
{
    const auto& spec = algebra.group();
    if (spec.order == GroupOrder::Lex)
        throw std::invalid_argument("no closed-form extremal states for the lexicographic order");
    std::vector<RationalVector> states;
    for (std::size_t i = 0; i < spec.rank; ++i) {
        if (algebra.unit()[i] <= 0)
            throw std::invalid_argument("coordinate states need every unit coordinate positive");
        RationalVector functional(spec.rank, Rational(0));
        functional[i] = 1 / algebra.unit()[i];
        states.push_back(std::move(functional));
    }
    return states;
}

ClanElement interval_clan_element(const IntervalAlgebra& algebra, const GroupElement& x,
    std::string label)
{
    ClanElement out;
    out.label = label.empty() ? to_string(x) : std::move(label);
    for (const auto& functional : coordinate_extremal_states(algebra))
        out.values.push_back(dot(functional, x));
    return out;
}

PreimageSolver interval_preimage_solver(const IntervalAlgebra& algebra)
{
    auto states = coordinate_extremal_states(algebra);
    return [algebra, states](const RationalVector& target) -> std::optional<ClanElement> {
        if (target.size() != states.size())
            return std::nullopt;
        GroupElement x(target.size());
        for (std::size_t i = 0; i < target.size(); ++i)
            x[i] = target[i] * algebra.unit()[i];
        if (algebra.group().scalars == Scalars::Integers)
            for (const auto& v : x)
                if (v.get_den() != 1)
                    return std::nullopt;
        if (!algebra.contains(x))
            return std::nullopt;
        return ClanElement{to_string(x), target};
    };
}

} // namespace effalg
