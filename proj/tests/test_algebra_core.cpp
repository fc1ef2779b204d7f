#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "effalg/catalog.hpp"
#include "effalg/mv_algebra.hpp"
#include "effalg/rational.hpp"
#include "oracles.hpp"

#include <random>

using namespace effalg;

namespace {

RawSumTable chain3_table()
{
    RawSumTable t;
    t.n = 4;
    for (Index a = 0; a < 4; ++a)
        for (Index b = 0; b < 4; ++b)
            if (a + b <= 3)
                t.sums.push_back({a, b, a + b});
    return t;
}

std::vector<CatalogSpec> small_catalog()
{
    return {CatalogSpec::boolean(1), CatalogSpec::boolean(2), CatalogSpec::boolean(3),
        CatalogSpec::chain(1), CatalogSpec::chain(2), CatalogSpec::chain(3), CatalogSpec::chain(5),
        CatalogSpec::even_subsets(4), CatalogSpec::mv_product({2, 1}),
        CatalogSpec::product({CatalogSpec::chain(2), CatalogSpec::chain(2)}),
        CatalogSpec::product({CatalogSpec::chain(1), CatalogSpec::chain(3)})};
}

} // namespace

TEST_CASE("rationals parse and print canonically")
{
    CHECK(parse_rational("3/10") == Rational(3, 10));
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(RationalVector{Rational(1), Rational(1, 2)}) == "(1, 1/2)");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK(denominator_lcm({Rational(1, 2), Rational(1, 3), Rational(0)}) == 6);
}

TEST_CASE("boolean(2) is valid")
{
    auto e = build_catalog(CatalogSpec::boolean(2));
    CHECK(e.size() == 4);
    CHECK(validate_axioms(e.raw()).ok());
    CHECK(oracle::satisfies_axioms(e.raw()));
}

TEST_CASE("a + 1 defined for a nonzero violates the zero-one law")
{
    auto raw = build_catalog(CatalogSpec::chain(2)).raw();
    raw.sums.push_back({1, 2, 2});
    raw.sums.push_back({2, 1, 2});
    auto result = validate_axioms(raw);
    REQUIRE_FALSE(result.ok());
    CHECK(result.violation->axiom != Axiom::TableShape);
    CHECK_FALSE(oracle::satisfies_axioms(raw));

    // Isolate the zero-one law on a table that passes the other checks.
    RawSumTable t;
    t.n = 2;
    t.sums = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    auto r = validate_axioms(t);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violation->axiom == Axiom::ZeroOne);
    CHECK(r.violation->witness == std::vector<Index>{1});
}

TEST_CASE("chain of length 3 from a hand-written table")
{
    auto raw = chain3_table();
    REQUIRE(validate_axioms(raw).ok());
    auto e = make_algebra(raw);
    CHECK(e == build_catalog(CatalogSpec::chain(3)));
    CHECK(e.is_linear());
}

TEST_CASE("asymmetric tables are rejected rather than symmetrized")
{
    auto raw = chain3_table();
    raw.sums.erase(std::find(raw.sums.begin(), raw.sums.end(), SumTriple{1, 2, 3}));
    auto r = validate_axioms(raw);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violation->axiom == Axiom::Commutativity);
    CHECK_THROWS_AS(make_algebra(raw), std::invalid_argument);
}

TEST_CASE("conflicting entries and out-of-range indices")
{
    auto raw = chain3_table();
    raw.sums.push_back({1, 1, 3});
    CHECK(validate_axioms(raw).violation->axiom == Axiom::TableShape);
    auto bad = chain3_table();
    bad.sums.push_back({0, 7, 0});
    CHECK(validate_axioms(bad).violation->axiom == Axiom::TableShape);
}

TEST_CASE("catalog sizes")
{
    auto c2 = build_catalog(CatalogSpec::chain(2));
    CHECK(c2.size() == 3);
    CHECK(c2.sum(1, 1) == c2.one());
    CHECK(c2.label(1) == "1/2");

    auto even = build_catalog(CatalogSpec::even_subsets(4));
    CHECK(even.size() == 8);
    int pairs = 0;
    for (Index a = 0; a < even.size(); ++a)
        if (std::count(even.label(a).begin(), even.label(a).end(), ',') == 1)
            ++pairs;
    CHECK(pairs == 6);

    CHECK(build_catalog(CatalogSpec::boolean(3)).size() == 8);
    CHECK(build_catalog(CatalogSpec::mv_product({2, 3})).size() == 12);
    CHECK_THROWS_AS(build_catalog(CatalogSpec::even_subsets(3)), std::invalid_argument);
    CHECK_THROWS_AS(build_catalog(CatalogSpec::chain(0)), std::invalid_argument);
    CHECK_THROWS_AS(build_catalog(CatalogSpec::boolean(9)), std::length_error);
}

TEST_CASE("chain(1) x chain(1) is boolean(2) up to isomorphism")
{
    auto p = build_catalog(CatalogSpec::product({CatalogSpec::chain(1), CatalogSpec::chain(1)}));
    auto b = build_catalog(CatalogSpec::boolean(2));
    auto iso = find_isomorphism(p, b);
    REQUIRE(iso);
    for (Index a = 0; a < p.size(); ++a)
        for (Index c = 0; c < p.size(); ++c) {
            Index s = p.sum(a, c);
            CHECK(b.sum((*iso)[a], (*iso)[c]) == (s == kUndefined ? kUndefined : (*iso)[s]));
        }
    CHECK_FALSE(find_isomorphism(b, build_catalog(CatalogSpec::chain(3))));
}

TEST_CASE("derived order and operations agree with the brute-force oracle")
{
    for (const auto& spec : small_catalog()) {
        auto e = build_catalog(spec);
        oracle::Table t(e.raw());
        CAPTURE(spec.name());
        CHECK(oracle::satisfies_axioms(e.raw()));
        for (Index a = 0; a < e.size(); ++a) {
            CHECK(e.sum(a, e.complement(a)) == e.one());
            for (Index b = 0; b < e.size(); ++b) {
                CHECK(e.leq(a, b) == oracle::leq(t, a, b));
                if (e.leq(a, b))
                    CHECK(e.sum(a, e.minus(b, a)) == b);
                std::vector<Index> upper;
                for (Index c = 0; c < e.size(); ++c)
                    if (oracle::leq(t, a, c) && oracle::leq(t, b, c))
                        upper.push_back(c);
                std::vector<Index> least;
                for (Index c : upper)
                    if (std::all_of(upper.begin(), upper.end(),
                            [&](Index d) { return oracle::leq(t, c, d); }))
                        least.push_back(c);
                CHECK(e.join(a, b) == (least.empty() ? kUndefined : least.front()));
            }
        }
    }
}

TEST_CASE("mutation fuzz: validator agrees with the oracle")
{
    std::mt19937_64 rng(20261015);
    std::size_t rejected = 0, total = 0;
    for (const auto& spec : small_catalog()) {
        auto base = build_catalog(spec).raw();
        for (int k = 0; k < 50; ++k) {
            auto raw = base;
            std::uniform_int_distribution<Index> pick(0, raw.n - 1);
            switch (k % 5) {
            case 0: {
                if (raw.sums.empty())
                    break;
                auto victim = raw.sums[rng() % raw.sums.size()];
                std::erase_if(raw.sums, [&](const SumTriple& t) {
                    return (t.a == victim.a && t.b == victim.b) || (t.a == victim.b && t.b == victim.a);
                });
                break;
            }
            case 1: {
                Index a = pick(rng), b = pick(rng), c = pick(rng);
                raw.sums.push_back({a, b, c});
                if (a != b)
                    raw.sums.push_back({b, a, c});
                break;
            }
            case 2: {
                if (raw.sums.empty())
                    break;
                raw.sums.erase(raw.sums.begin() + static_cast<long>(rng() % raw.sums.size()));
                break;
            }
            case 3: {
                Index a = pick(rng), b = pick(rng), c = pick(rng);
                for (auto& t : raw.sums)
                    if ((t.a == a && t.b == b) || (t.a == b && t.b == a))
                        t.c = c;
                break;
            }
            default: {
                Index a = pick(rng), b = pick(rng), c = pick(rng);
                raw.sums.push_back({a, b, c});
                break;
            }
            }
            auto verdict = validate_axioms(raw);
            CAPTURE(spec.name());
            CAPTURE(k);
            CHECK(verdict.ok() == oracle::satisfies_axioms(raw));
            if (!verdict.ok()) {
                ++rejected;
                CHECK_FALSE(verdict.violation->message.empty());
            }
            ++total;
        }
    }
    CHECK(total == 50 * small_catalog().size());
    CHECK(rejected > total / 4);
}

TEST_CASE("subalgebra and permutation")
{
    auto b3 = build_catalog(CatalogSpec::boolean(3));
    auto bits = [&](Index a) { return b3.label(a); };
    (void)bits;
    std::vector<Index> members{0, b3.one()};
    auto trivial = subalgebra(b3, members);
    REQUIRE(trivial);
    CHECK(trivial->size() == 2);
    CHECK_FALSE(subalgebra(b3, {0, 1, b3.one()}));

    std::vector<Index> perm(b3.size());
    for (Index a = 0; a < b3.size(); ++a)
        perm[a] = a;
    std::swap(perm[1], perm[2]);
    auto p = permute(b3, perm);
    CHECK(find_isomorphism(p, b3));
    CHECK(p.sum(perm[1], perm[b3.complement(1)]) == p.one());
}

TEST_CASE("MV operations on grid algebras")
{
    auto mv = mv_operations(build_catalog(CatalogSpec::chain(4)));
    const auto& e = mv.base();
    for (Index x = 0; x < e.size(); ++x) {
        CHECK(mv.star(x) == e.complement(x));
        for (Index y = 0; y < e.size(); ++y) {
            CHECK(mv.oplus(x, y) == std::min<Index>(x + y, 4));
            CHECK(mv.odot(x, y) == (x + y >= 4 ? x + y - 4 : 0));
            CHECK(mv.vee(x, y) == std::max(x, y));
        }
    }
    CHECK_THROWS_AS(mv_operations(build_catalog(CatalogSpec::even_subsets(4))), std::invalid_argument);
}
