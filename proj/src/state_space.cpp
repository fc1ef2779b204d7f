#include "effalg/state_space.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace effalg {

std::optional<std::size_t> StatePolytope::vertex_index(const RationalVector& state) const
{
    auto it = std::lower_bound(vertices.begin(), vertices.end(), state);
    if (it == vertices.end() || *it != state)
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
}

StatePolytope compute_states(const FiniteEffectAlgebra& algebra, StateOptions options)
{
    const std::size_t n = algebra.size();
    if (n > options.max_elements)
        throw std::length_error("state polytope of " + std::to_string(n)
            + " elements exceeds the guard of " + std::to_string(options.max_elements));

    StatePolytope p;
    p.dimension = n;
    auto unit_row = [&](Index i) {
        RationalVector row(n, Rational(0));
        row[i] = 1;
        return row;
    };
    p.equalities.push_back(unit_row(algebra.zero()));
    p.equality_rhs.push_back(0);
    p.equalities.push_back(unit_row(algebra.one()));
    p.equality_rhs.push_back(1);
    for (Index a = 0; a < n; ++a)
        for (Index b = a; b < n; ++b) {
            Index c = algebra.sum(a, b);
            if (c == kUndefined)
                continue;
            RationalVector row(n, Rational(0));
            row[a] += 1;
            row[b] += 1;
            row[c] -= 1;
            p.equalities.push_back(std::move(row));
            p.equality_rhs.push_back(0);
        }

    p.affine = solve_affine(p.equalities, p.equality_rhs, n);
    if (!p.affine)
        return p;

    const auto& base = p.affine->particular;
    const auto& dirs = p.affine->directions;
    const std::size_t d = dirs.size();
    p.reduced.dimension = d;
    for (Index a = 0; a < n; ++a) {
        RationalVector coeff(d);
        for (std::size_t j = 0; j < d; ++j)
            coeff[j] = dirs[j][a];
        RationalVector negated = coeff;
        for (auto& v : negated)
            v = -v;
        p.reduced.rows.push_back(std::move(negated));
        p.reduced.rhs.push_back(base[a]);
        p.reduced.rows.push_back(std::move(coeff));
        p.reduced.rhs.push_back(1 - base[a]);
    }

    auto params = options.method == VertexMethod::DoubleDescription
        ? vertices_double_description(p.reduced)
        : vertices_active_set(p.reduced);
    if (options.cross_check) {
        auto other = options.method == VertexMethod::DoubleDescription
            ? vertices_active_set(p.reduced)
            : vertices_double_description(p.reduced);
        if (other != params)
            throw std::logic_error("vertex enumeration methods disagree");
    }

    for (const auto& t : params) {
        RationalVector s = base;
        for (std::size_t j = 0; j < d; ++j)
            if (t[j] != 0)
                for (Index a = 0; a < n; ++a)
                    s[a] += t[j] * dirs[j][a];
        p.vertices.push_back(std::move(s));
    }
    std::sort(p.vertices.begin(), p.vertices.end());
    p.vertices.erase(std::unique(p.vertices.begin(), p.vertices.end()), p.vertices.end());
    return p;
}

bool is_state(const FiniteEffectAlgebra& algebra, const RationalVector& values)
{
    const std::size_t n = algebra.size();
    if (values.size() != n)
        return false;
    if (values[algebra.one()] != 1)
        return false;
    for (Index a = 0; a < n; ++a) {
        if (values[a] < 0 || values[a] > 1)
            return false;
        for (Index b = 0; b < n; ++b) {
            Index c = algebra.sum(a, b);
            if (c != kUndefined && values[a] + values[b] != values[c])
                return false;
        }
    }
    return true;
}

EvaluationImage evaluation_image(const FiniteEffectAlgebra& algebra, const StatePolytope& states)
{
    EvaluationImage image;
    image.hats.resize(algebra.size());
    for (Index a = 0; a < algebra.size(); ++a)
        for (const auto& s : states.vertices)
            image.hats[a].push_back(s[a]);
    return image;
}

namespace {

bool pointwise_leq(const RationalVector& x, const RationalVector& y)
{
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > y[i])
            return false;
    return true;
}

} // namespace

OrderDeterminingReport order_determining_on(std::span<const RationalVector> hats,
    const std::function<bool(std::size_t, std::size_t)>& leq)
{
    OrderDeterminingReport report;
    for (std::size_t a = 0; a < hats.size(); ++a)
        for (std::size_t b = 0; b < hats.size(); ++b) {
            if (a == b)
                continue;
            if (report.order_determining && pointwise_leq(hats[a], hats[b]) && !leq(a, b)) {
                report.order_determining = false;
                report.order_witness = std::make_pair(a, b);
            }
            if (report.separating && a < b && hats[a] == hats[b]) {
                report.separating = false;
                report.separating_witness = std::make_pair(a, b);
            }
        }
    return report;
}

OrderDeterminingReport is_order_determining(const FiniteEffectAlgebra& algebra,
    const StatePolytope& states)
{
    auto image = evaluation_image(algebra, states);
    return order_determining_on(image.hats,
        [&](std::size_t a, std::size_t b) { return algebra.leq(a, b); });
}

bool hat_is_order_isomorphism(const FiniteEffectAlgebra& algebra, const EvaluationImage& image)
{
    const std::size_t n = algebra.size();
    std::map<RationalVector, Index> lookup;
    for (Index a = 0; a < n; ++a)
        if (!lookup.emplace(image.hats[a], a).second)
            return false;
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            RationalVector diff = image.hats[b];
            for (std::size_t i = 0; i < diff.size(); ++i)
                diff[i] -= image.hats[a][i];
            bool below_in_image = lookup.contains(diff);
            if (below_in_image != algebra.leq(a, b))
                return false;
        }
    return true;
}

std::int64_t discrete_profile(const RationalVector& state)
{
    return denominator_lcm(state);
}

ClanReport clan_closure_witness(std::span<const ClanElement> elements,
    const PreimageSolver& solver)
{
    if (!solver)
        throw std::invalid_argument("no preimage solver for the ambient algebra");
    ClanReport report;
    if (elements.empty())
        return report;
    const std::size_t k = elements.front().values.size();

    RationalVector ones(k, Rational(1));
    if (!solver(ones)) {
        report.closed = false;
        report.witness = ClanWitness{ClanWitness::Kind::Unit, 0, 0, ones};
        return report;
    }
    for (std::size_t f = 0; f < elements.size(); ++f) {
        RationalVector target(k);
        for (std::size_t i = 0; i < k; ++i)
            target[i] = 1 - elements[f].values[i];
        if (!solver(target)) {
            report.closed = false;
            report.witness = ClanWitness{ClanWitness::Kind::Complement, f, f, target};
            return report;
        }
    }
    for (std::size_t f = 0; f < elements.size(); ++f)
        for (std::size_t g = f; g < elements.size(); ++g) {
            RationalVector target(k);
            bool fits = true;
            for (std::size_t i = 0; i < k && fits; ++i) {
                target[i] = elements[f].values[i] + elements[g].values[i];
                fits = target[i] <= 1;
            }
            if (!fits)
                continue;
            ++report.pairs_checked;
            if (!solver(target)) {
                report.closed = false;
                report.witness = ClanWitness{ClanWitness::Kind::Sum, f, g, target};
                return report;
            }
        }
    return report;
}

std::vector<ClanElement> clan_elements(const FiniteEffectAlgebra& algebra,
    const EvaluationImage& image)
{
    std::vector<ClanElement> out;
    for (Index a = 0; a < algebra.size(); ++a)
        out.push_back({algebra.label(a), image.hats[a]});
    return out;
}

PreimageSolver finite_preimage_solver(const FiniteEffectAlgebra& algebra,
    const EvaluationImage& image)
{
    auto elements = clan_elements(algebra, image);
    return [elements](const RationalVector& target) -> std::optional<ClanElement> {
        for (const auto& e : elements)
            if (e.values == target)
                return e;
        return std::nullopt;
    };
}

} // namespace effalg
