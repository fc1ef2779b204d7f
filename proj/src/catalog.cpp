#include "effalg/catalog.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace effalg {

CatalogSpec CatalogSpec::boolean(int k)
{
    return CatalogSpec{CatalogKind::Boolean, k, {}, {}};
}

CatalogSpec CatalogSpec::chain(int n)
{
    return CatalogSpec{CatalogKind::Chain, n, {}, {}};
}

CatalogSpec CatalogSpec::product(std::vector<CatalogSpec> factors)
{
    return CatalogSpec{CatalogKind::Product, 0, std::move(factors), {}};
}

CatalogSpec CatalogSpec::even_subsets(int m)
{
    return CatalogSpec{CatalogKind::EvenSubsets, m, {}, {}};
}

CatalogSpec CatalogSpec::mv_product(std::vector<int> chains)
{
    return CatalogSpec{CatalogKind::MvProduct, 0, {}, std::move(chains)};
}

std::string CatalogSpec::name() const
{
    switch (kind) {
    case CatalogKind::Boolean:
        return "boolean(" + std::to_string(parameter) + ")";
    case CatalogKind::Chain:
        return "chain(" + std::to_string(parameter) + ")";
    case CatalogKind::EvenSubsets:
        return "even_subsets(" + std::to_string(parameter) + ")";
    case CatalogKind::Product: {
        std::string out = "product(";
        for (std::size_t i = 0; i < factors.size(); ++i)
            out += (i ? ", " : "") + factors[i].name();
        return out + ")";
    }
    case CatalogKind::MvProduct: {
        std::string out = "mv_product(";
        for (std::size_t i = 0; i < chains.size(); ++i)
            out += (i ? ", " : "") + std::to_string(chains[i]);
        return out + ")";
    }
    }
    return "unknown";
}

FiniteEffectAlgebra algebra_from_points(std::vector<std::int64_t> unit,
    std::vector<std::vector<std::int64_t>> points, std::vector<std::string> labels)
{
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
        [&](std::size_t x, std::size_t y) { return points[x] < points[y]; });
    std::vector<std::vector<std::int64_t>> sorted;
    std::vector<std::string> sorted_labels;
    for (auto i : order) {
        if (!sorted.empty() && sorted.back() == points[i])
            continue;
        sorted.push_back(points[i]);
        if (!labels.empty())
            sorted_labels.push_back(labels[i]);
    }

    std::map<std::vector<std::int64_t>, Index> position;
    for (Index i = 0; i < sorted.size(); ++i)
        position.emplace(sorted[i], i);

    RawSumTable raw;
    raw.n = sorted.size();
    raw.labels = std::move(sorted_labels);
    std::vector<std::int64_t> total(unit.size());
    for (Index a = 0; a < sorted.size(); ++a)
        for (Index b = 0; b < sorted.size(); ++b) {
            for (std::size_t k = 0; k < unit.size(); ++k)
                total[k] = sorted[a][k] + sorted[b][k];
            auto it = position.find(total);
            if (it != position.end())
                raw.sums.push_back({a, b, it->second});
        }
    auto algebra = make_algebra(raw);
    return algebra.with_grid(GridRealization{std::move(unit), std::move(sorted)});
}

namespace {

std::string subset_label(const std::vector<std::int64_t>& bits)
{
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) {
            out += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        }
    return out + "}";
}

std::string chain_label(std::int64_t k, std::int64_t n)
{
    auto g = std::gcd(k, n);
    if (g == 0)
        return "0";
    k /= g;
    n /= g;
    return n == 1 ? std::to_string(k) : std::to_string(k) + "/" + std::to_string(n);
}

FiniteEffectAlgebra subsets(int k, bool even_only)
{
    std::vector<std::vector<std::int64_t>> points;
    std::vector<std::string> labels;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        if (even_only && std::popcount(mask) % 2 != 0)
            continue;
        std::vector<std::int64_t> bits(k);
        for (int i = 0; i < k; ++i)
            bits[i] = static_cast<std::int64_t>((mask >> i) & 1);
        labels.push_back(subset_label(bits));
        points.push_back(std::move(bits));
    }
    return algebra_from_points(std::vector<std::int64_t>(k, 1), std::move(points), std::move(labels));
}

FiniteEffectAlgebra chains(const std::vector<int>& lengths)
{
    std::vector<std::vector<std::int64_t>> points{{}};
    std::vector<std::string> labels{""};
    for (int len : lengths) {
        std::vector<std::vector<std::int64_t>> next;
        std::vector<std::string> next_labels;
        for (std::size_t p = 0; p < points.size(); ++p)
            for (std::int64_t v = 0; v <= len; ++v) {
                auto q = points[p];
                q.push_back(v);
                next.push_back(std::move(q));
                next_labels.push_back(labels[p] + (labels[p].empty() ? "" : ",")
                    + chain_label(v, len));
            }
        points = std::move(next);
        labels = std::move(next_labels);
    }
    if (lengths.size() > 1)
        for (auto& l : labels)
            l = "(" + l + ")";
    std::vector<std::int64_t> unit(lengths.begin(), lengths.end());
    return algebra_from_points(std::move(unit), std::move(points), std::move(labels));
}

std::size_t predicted_size(const CatalogSpec& spec)
{
    auto cap = [](std::size_t x) { return std::min<std::size_t>(x, std::size_t{1} << 40); };
    switch (spec.kind) {
    case CatalogKind::Boolean:
        return cap(std::size_t{1} << std::min(spec.parameter, 40));
    case CatalogKind::Chain:
        return static_cast<std::size_t>(spec.parameter) + 1;
    case CatalogKind::EvenSubsets:
        return cap(std::size_t{1} << std::min(spec.parameter - 1, 40));
    case CatalogKind::Product: {
        std::size_t total = 1;
        for (const auto& f : spec.factors)
            total = cap(total * predicted_size(f));
        return total;
    }
    case CatalogKind::MvProduct: {
        std::size_t total = 1;
        for (int c : spec.chains)
            total = cap(total * static_cast<std::size_t>(c + 1));
        return total;
    }
    }
    return 0;
}

void check_parameters(const CatalogSpec& spec)
{
    switch (spec.kind) {
    case CatalogKind::Boolean:
    case CatalogKind::Chain:
        if (spec.parameter < 1)
            throw std::invalid_argument(spec.name() + ": parameter must be positive");
        break;
    case CatalogKind::EvenSubsets:
        if (spec.parameter < 2 || spec.parameter % 2 != 0)
            throw std::invalid_argument(spec.name() + ": m must be a positive even number");
        break;
    case CatalogKind::Product:
        if (spec.factors.empty())
            throw std::invalid_argument("product needs at least one factor");
        for (const auto& f : spec.factors)
            check_parameters(f);
        break;
    case CatalogKind::MvProduct:
        if (spec.chains.empty())
            throw std::invalid_argument("mv_product needs at least one chain");
        for (int c : spec.chains)
            if (c < 1)
                throw std::invalid_argument(spec.name() + ": chain lengths must be positive");
        break;
    }
}

FiniteEffectAlgebra build_unchecked(const CatalogSpec& spec)
{
    switch (spec.kind) {
    case CatalogKind::Boolean:
        return subsets(spec.parameter, false);
    case CatalogKind::EvenSubsets:
        return subsets(spec.parameter, true);
    case CatalogKind::Chain:
        return chains({spec.parameter});
    case CatalogKind::MvProduct:
        return chains(spec.chains);
    case CatalogKind::Product: {
        FiniteEffectAlgebra result = build_unchecked(spec.factors.front());
        for (std::size_t i = 1; i < spec.factors.size(); ++i)
            result = product(result, build_unchecked(spec.factors[i]));
        return result;
    }
    }
    throw std::invalid_argument("unknown catalog kind");
}

} // namespace

FiniteEffectAlgebra build_catalog(const CatalogSpec& spec, std::size_t max_elements)
{
    check_parameters(spec);
    auto size = predicted_size(spec);
    if (size > max_elements)
        throw std::length_error(spec.name() + " has " + std::to_string(size)
            + " elements, above the guard of " + std::to_string(max_elements));
    return build_unchecked(spec);
}

FiniteEffectAlgebra product(const FiniteEffectAlgebra& x, const FiniteEffectAlgebra& y)
{
    const std::size_t nx = x.size();
    const std::size_t ny = y.size();
    RawSumTable raw;
    raw.n = nx * ny;
    for (Index a = 0; a < nx; ++a)
        for (Index b = 0; b < ny; ++b)
            raw.labels.push_back("(" + x.label(a) + "," + y.label(b) + ")");
    for (const auto& s : x.sum_triples())
        for (const auto& t : y.sum_triples())
            raw.sums.push_back({s.a * ny + t.a, s.b * ny + t.b, s.c * ny + t.c});
    auto result = make_algebra(raw);
    if (!x.grid() || !y.grid())
        return result;
    GridRealization grid;
    grid.unit = x.grid()->unit;
    grid.unit.insert(grid.unit.end(), y.grid()->unit.begin(), y.grid()->unit.end());
    for (Index a = 0; a < nx; ++a)
        for (Index b = 0; b < ny; ++b) {
            auto p = x.grid()->coords[a];
            const auto& q = y.grid()->coords[b];
            p.insert(p.end(), q.begin(), q.end());
            grid.coords.push_back(std::move(p));
        }
    return result.with_grid(std::move(grid));
}

} // namespace effalg
