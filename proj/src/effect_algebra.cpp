#include "effalg/effect_algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace effalg {

bool GridRealization::is_full_box() const
{
    std::size_t expected = 1;
    for (auto u : unit) {
        if (u < 0)
            return false;
        expected *= static_cast<std::size_t>(u + 1);
    }
    if (coords.size() != expected)
        return false;
    for (const auto& p : coords) {
        if (p.size() != unit.size())
            return false;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] < 0 || p[i] > unit[i])
                return false;
    }
    auto sorted = coords;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::optional<Index> GridRealization::find(const std::vector<std::int64_t>& point) const
{
    auto it = std::find(coords.begin(), coords.end(), point);
    if (it == coords.end())
        return std::nullopt;
    return static_cast<Index>(it - coords.begin());
}

std::string to_string(Axiom axiom)
{
    switch (axiom) {
    case Axiom::TableShape:
        return "table-shape";
    case Axiom::Commutativity:
        return "commutativity";
    case Axiom::Associativity:
        return "associativity";
    case Axiom::Orthosupplement:
        return "orthosupplement";
    case Axiom::ZeroOne:
        return "zero-one";
    case Axiom::Convention:
        return "convention";
    }
    return "unknown";
}

struct AlgebraBuilder {
    // Fills every derived table from a sum table that already passed the
    // axiom checks.
    static FiniteEffectAlgebra finish(std::size_t n, std::vector<Index> sum,
        std::vector<std::string> labels)
    {
        FiniteEffectAlgebra e;
        e.n_ = n;
        e.sum_ = std::move(sum);
        e.labels_ = std::move(labels);
        e.complement_.assign(n, kUndefined);
        e.leq_.assign(n * n, 0);
        e.minus_.assign(n * n, kUndefined);
        for (Index a = 0; a < n; ++a)
            for (Index c = 0; c < n; ++c) {
                Index b = e.sum_[a * n + c];
                if (b == kUndefined)
                    continue;
                e.leq_[a * n + b] = 1;
                e.minus_[b * n + a] = c;
                if (b == n - 1)
                    e.complement_[a] = c;
            }

        // Up-sets and down-sets as bitsets; c is the join of a and b iff
        // c bounds both and every common upper bound lies above c.
        const std::size_t words = (n + 63) / 64;
        std::vector<std::uint64_t> up(n * words, 0), down(n * words, 0);
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                if (e.leq(a, b)) {
                    up[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
                    down[b * words + a / 64] |= std::uint64_t{1} << (a % 64);
                }
        auto contains = [&](const std::vector<std::uint64_t>& sets, Index c,
                            const std::vector<std::uint64_t>& subset) {
            for (std::size_t w = 0; w < words; ++w)
                if ((subset[w] & ~sets[c * words + w]) != 0)
                    return false;
            return true;
        };
        e.join_.assign(n * n, kUndefined);
        e.meet_.assign(n * n, kUndefined);
        std::vector<std::uint64_t> common(words);
        for (Index a = 0; a < n; ++a)
            for (Index b = a; b < n; ++b) {
                for (std::size_t w = 0; w < words; ++w)
                    common[w] = up[a * words + w] & up[b * words + w];
                for (Index c = 0; c < n; ++c)
                    if (e.leq(a, c) && e.leq(b, c) && contains(up, c, common)) {
                        e.join_[a * n + b] = e.join_[b * n + a] = c;
                        break;
                    }
                for (std::size_t w = 0; w < words; ++w)
                    common[w] = down[a * words + w] & down[b * words + w];
                for (Index c = 0; c < n; ++c)
                    if (e.leq(c, a) && e.leq(c, b) && contains(down, c, common)) {
                        e.meet_[a * n + b] = e.meet_[b * n + a] = c;
                        break;
                    }
            }

        std::vector<std::size_t> below(n, 0);
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                below[a] += e.leq(b, a) ? 1 : 0;
        e.topo_.resize(n);
        std::iota(e.topo_.begin(), e.topo_.end(), Index{0});
        std::stable_sort(e.topo_.begin(), e.topo_.end(),
            [&](Index x, Index y) { return below[x] < below[y]; });
        return e;
    }
};

namespace {

ValidationResult fail(Axiom axiom, std::vector<Index> witness, std::string message)
{
    ValidationResult r;
    r.violation = AxiomViolation{axiom, std::move(witness), std::move(message)};
    return r;
}

std::string idx(Index i)
{
    return std::to_string(i);
}

} // namespace

ValidationResult validate_axioms(const RawSumTable& table)
{
    const std::size_t n = table.n;
    if (n == 0)
        return fail(Axiom::TableShape, {}, "algebra must have at least one element");
    if (!table.labels.empty() && table.labels.size() != n)
        return fail(Axiom::TableShape, {}, "label count does not match element count");

    std::vector<Index> sum(n * n, kUndefined);
    for (const auto& t : table.sums) {
        if (t.a >= n || t.b >= n || t.c >= n)
            return fail(Axiom::TableShape, {t.a, t.b, t.c}, "index out of range");
        Index& slot = sum[t.a * n + t.b];
        if (slot != kUndefined && slot != t.c)
            return fail(Axiom::TableShape, {t.a, t.b},
                "pair (" + idx(t.a) + "," + idx(t.b) + ") has two results");
        slot = t.c;
    }
    auto at = [&](Index a, Index b) { return sum[a * n + b]; };

    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (at(a, b) != at(b, a))
                return fail(Axiom::Commutativity, {a, b},
                    idx(a) + "+" + idx(b) + " and " + idx(b) + "+" + idx(a) + " disagree");

    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (Index c = 0; c < n; ++c) {
                Index ab = at(a, b);
                Index bc = at(b, c);
                Index left = ab == kUndefined ? kUndefined : at(ab, c);
                Index right = bc == kUndefined ? kUndefined : at(a, bc);
                if (left != right)
                    return fail(Axiom::Associativity, {a, b, c},
                        "(" + idx(a) + "+" + idx(b) + ")+" + idx(c) + " != " + idx(a) + "+("
                            + idx(b) + "+" + idx(c) + ")");
            }

    const Index one = n - 1;
    for (Index a = 0; a < n; ++a) {
        std::size_t count = 0;
        for (Index b = 0; b < n; ++b)
            count += at(a, b) == one ? 1 : 0;
        if (count != 1)
            return fail(Axiom::Orthosupplement, {a},
                "element " + idx(a) + " has " + std::to_string(count) + " orthosupplements");
    }

    for (Index a = 1; a < n; ++a)
        if (at(a, one) != kUndefined)
            return fail(Axiom::ZeroOne, {a}, idx(a) + "+1 is defined for a nonzero element");

    if (at(0, one) != one)
        return fail(Axiom::Convention, {0, one}, "index 0 is not the orthosupplement of index n-1");
    for (Index a = 0; a < n; ++a)
        if (at(0, a) != a)
            return fail(Axiom::Convention, {0, a}, "index 0 is not neutral for " + idx(a));

    std::vector<std::string> labels = table.labels;
    if (labels.empty())
        for (Index a = 0; a < n; ++a)
            labels.push_back(idx(a));

    ValidationResult r;
    r.algebra = AlgebraBuilder::finish(n, std::move(sum), std::move(labels));
    return r;
}

FiniteEffectAlgebra make_algebra(const RawSumTable& table)
{
    auto result = validate_axioms(table);
    if (!result.ok())
        throw std::invalid_argument("axiom " + to_string(result.violation->axiom)
            + " violated: " + result.violation->message);
    return std::move(*result.algebra);
}

std::optional<Index> FiniteEffectAlgebra::find_label(const std::string& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<Index>(it - labels_.begin());
}

std::vector<SumTriple> FiniteEffectAlgebra::sum_triples() const
{
    std::vector<SumTriple> out;
    for (Index a = 0; a < n_; ++a)
        for (Index b = 0; b < n_; ++b)
            if (defined(a, b))
                out.push_back({a, b, sum(a, b)});
    return out;
}

RawSumTable FiniteEffectAlgebra::raw() const
{
    return RawSumTable{n_, sum_triples(), labels_};
}

FiniteEffectAlgebra FiniteEffectAlgebra::with_grid(GridRealization grid) const
{
    if (grid.coords.size() != n_)
        throw std::invalid_argument("grid realization size mismatch");
    FiniteEffectAlgebra copy = *this;
    copy.grid_ = std::move(grid);
    return copy;
}

bool FiniteEffectAlgebra::is_linear() const
{
    for (Index a = 0; a < n_; ++a)
        for (Index b = a + 1; b < n_; ++b)
            if (!comparable(a, b))
                return false;
    return true;
}

std::optional<FiniteEffectAlgebra> subalgebra(const FiniteEffectAlgebra& algebra,
    const std::vector<Index>& members)
{
    const std::size_t n = algebra.size();
    std::vector<Index> renumber(n, kUndefined);
    std::vector<Index> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Index i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= n)
            return std::nullopt;
        renumber[sorted[i]] = i;
    }
    if (renumber[algebra.zero()] != 0 || renumber[algebra.one()] != sorted.size() - 1)
        return std::nullopt;

    RawSumTable raw;
    raw.n = sorted.size();
    for (Index a : sorted) {
        if (renumber[algebra.complement(a)] == kUndefined)
            return std::nullopt;
        raw.labels.push_back(algebra.label(a));
        for (Index b : sorted) {
            Index c = algebra.sum(a, b);
            if (c == kUndefined)
                continue;
            if (renumber[c] == kUndefined)
                return std::nullopt;
            raw.sums.push_back({renumber[a], renumber[b], renumber[c]});
        }
    }
    auto result = validate_axioms(raw);
    if (!result.ok())
        return std::nullopt;
    if (algebra.grid()) {
        GridRealization grid{algebra.grid()->unit, {}};
        for (Index a : sorted)
            grid.coords.push_back(algebra.grid()->coords[a]);
        return result.algebra->with_grid(std::move(grid));
    }
    return std::move(result.algebra);
}

FiniteEffectAlgebra permute(const FiniteEffectAlgebra& algebra, const std::vector<Index>& perm)
{
    const std::size_t n = algebra.size();
    if (perm.size() != n || perm[0] != 0 || perm[n - 1] != n - 1)
        throw std::invalid_argument("permutation must fix the zero and the unit");
    RawSumTable raw;
    raw.n = n;
    raw.labels.resize(n);
    for (Index a = 0; a < n; ++a)
        raw.labels[perm[a]] = algebra.label(a);
    for (const auto& t : algebra.sum_triples())
        raw.sums.push_back({perm[t.a], perm[t.b], perm[t.c]});
    auto result = make_algebra(raw);
    if (algebra.grid()) {
        GridRealization grid{algebra.grid()->unit, std::vector<std::vector<std::int64_t>>(n)};
        for (Index a = 0; a < n; ++a)
            grid.coords[perm[a]] = algebra.grid()->coords[a];
        return result.with_grid(std::move(grid));
    }
    return result;
}

namespace {

struct Signature {
    std::size_t below = 0;
    std::size_t above = 0;
    std::size_t summands = 0;
    bool self_complement = false;

    friend bool operator==(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const FiniteEffectAlgebra& e)
{
    const std::size_t n = e.size();
    std::vector<Signature> sig(n);
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            sig[a].below += e.leq(b, a) ? 1 : 0;
            sig[a].above += e.leq(a, b) ? 1 : 0;
            sig[a].summands += e.defined(a, b) ? 1 : 0;
        }
        sig[a].self_complement = e.complement(a) == a;
    }
    return sig;
}

} // namespace

std::optional<std::vector<Index>> find_isomorphism(const FiniteEffectAlgebra& x,
    const FiniteEffectAlgebra& y)
{
    const std::size_t n = x.size();
    if (n != y.size() || x.sum_triples().size() != y.sum_triples().size())
        return std::nullopt;
    auto sx = signatures(x);
    auto sy = signatures(y);

    std::vector<Index> map(n, kUndefined);
    std::vector<char> used(n, 0);
    const auto& order = x.topological_order();

    auto consistent = [&](Index a) {
        for (Index b = 0; b < n; ++b) {
            if (map[b] == kUndefined)
                continue;
            Index xs = x.sum(a, b);
            Index ys = y.sum(map[a], map[b]);
            if ((xs == kUndefined) != (ys == kUndefined))
                return false;
            if (xs != kUndefined && map[xs] != kUndefined && map[xs] != ys)
                return false;
        }
        Index xc = x.complement(a);
        return map[xc] == kUndefined || map[xc] == y.complement(map[a]);
    };

    std::function<bool(std::size_t)> search = [&](std::size_t depth) {
        if (depth == n) {
            for (Index a = 0; a < n; ++a)
                for (Index b = 0; b < n; ++b) {
                    Index xs = x.sum(a, b);
                    if (xs != kUndefined && y.sum(map[a], map[b]) != map[xs])
                        return false;
                }
            return true;
        }
        Index a = order[depth];
        for (Index c = 0; c < n; ++c) {
            if (used[c] || !(sx[a] == sy[c]))
                continue;
            map[a] = c;
            used[c] = 1;
            if (consistent(a) && search(depth + 1))
                return true;
            map[a] = kUndefined;
            used[c] = 0;
        }
        return false;
    };
    if (!search(0))
        return std::nullopt;
    return map;
}

} // namespace effalg
