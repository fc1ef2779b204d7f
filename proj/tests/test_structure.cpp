#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "effalg/catalog.hpp"
#include "effalg/internal_states.hpp"
#include "effalg/po_group.hpp"
#include "effalg/structure.hpp"

using namespace effalg;

namespace {

// Direct quantifier expansion of the Riesz decomposition property.
bool rdp_brute_force(const FiniteEffectAlgebra& e)
{
    const std::size_t n = e.size();
    for (Index x1 = 0; x1 < n; ++x1)
        for (Index x2 = 0; x2 < n; ++x2) {
            Index s = e.sum(x1, x2);
            if (s == kUndefined)
                continue;
            for (Index y1 = 0; y1 < n; ++y1)
                for (Index y2 = 0; y2 < n; ++y2) {
                    if (e.sum(y1, y2) != s)
                        continue;
                    bool found = false;
                    for (Index c11 = 0; c11 < n && !found; ++c11)
                        for (Index c12 = 0; c12 < n && !found; ++c12)
                            for (Index c21 = 0; c21 < n && !found; ++c21)
                                for (Index c22 = 0; c22 < n && !found; ++c22)
                                    found = e.sum(c11, c12) == x1 && e.sum(c21, c22) == x2
                                        && e.sum(c11, c21) == y1 && e.sum(c12, c22) == y2;
                    if (!found)
                        return false;
                }
        }
    return true;
}

bool verifies_rdp_witness(const FiniteEffectAlgebra& e, const std::array<Index, 4>& w)
{
    return e.sum(w[0], w[1]) != kUndefined && e.sum(w[0], w[1]) == e.sum(w[2], w[3])
        && !find_refinement(e, w[0], w[1], w[2], w[3]);
}

Index by_label(const FiniteEffectAlgebra& e, const std::string& label)
{
    auto found = e.find_label(label);
    REQUIRE(found);
    return *found;
}

} // namespace

TEST_CASE("RDP on the catalog against the brute-force oracle")
{
    std::vector<CatalogSpec> specs{CatalogSpec::boolean(1), CatalogSpec::boolean(2),
        CatalogSpec::boolean(3), CatalogSpec::even_subsets(4), CatalogSpec::mv_product({2, 1})};
    for (int n = 1; n <= 8; ++n)
        specs.push_back(CatalogSpec::chain(n));
    for (const auto& spec : specs) {
        auto e = build_catalog(spec);
        auto report = check_rdp(e);
        CAPTURE(spec.name());
        CHECK(report.holds == rdp_brute_force(e));
        CHECK(report.formulations_agree());
        bool expected = spec.kind != CatalogKind::EvenSubsets;
        CHECK(report.holds == expected);
    }
}

TEST_CASE("even_subsets(4) fails RDP with a checkable witness")
{
    auto e = build_catalog(CatalogSpec::even_subsets(4));
    auto report = check_rdp(e);
    REQUIRE_FALSE(report.holds);
    REQUIRE(report.witness);
    CHECK(verifies_rdp_witness(e, *report.witness));
    REQUIRE(report.splitting_witness);

    // The two-element subsets {1,2} and {1,3} are present, {1} is not.
    CHECK(e.find_label("{1,2}"));
    CHECK(e.find_label("{1,3}"));
    CHECK_FALSE(e.find_label("{1}"));
    Index a = by_label(e, "{1,2}"), b = by_label(e, "{3,4}");
    Index c = by_label(e, "{1,3}"), d = by_label(e, "{2,4}");
    CHECK(e.sum(a, b) == e.one());
    CHECK(e.sum(c, d) == e.one());
    CHECK(verifies_rdp_witness(e, {a, b, c, d}));
}

namespace {

bool interpolation_brute_force(const FiniteEffectAlgebra& e)
{
    const std::size_t n = e.size();
    for (Index x1 = 0; x1 < n; ++x1)
        for (Index x2 = 0; x2 < n; ++x2)
            for (Index y1 = 0; y1 < n; ++y1)
                for (Index y2 = 0; y2 < n; ++y2) {
                    if (!(e.leq(x1, y1) && e.leq(x1, y2) && e.leq(x2, y1) && e.leq(x2, y2)))
                        continue;
                    bool found = false;
                    for (Index z = 0; z < n && !found; ++z)
                        found = e.leq(x1, z) && e.leq(x2, z) && e.leq(z, y1) && e.leq(z, y2);
                    if (!found)
                        return false;
                }
    return true;
}

} // namespace

TEST_CASE("interpolation")
{
    CHECK(check_interpolation(build_catalog(CatalogSpec::boolean(2))).holds);
    for (int n = 1; n <= 6; ++n)
        CHECK(check_interpolation(build_catalog(CatalogSpec::chain(n))).holds);
    for (const auto& spec : {CatalogSpec::boolean(3), CatalogSpec::even_subsets(4),
             CatalogSpec::even_subsets(6), CatalogSpec::mv_product({2, 1})}) {
        auto e = build_catalog(spec);
        CAPTURE(spec.name());
        CHECK(check_interpolation(e).holds == interpolation_brute_force(e));
    }
    // even_subsets(4) is the height-two lattice with six atoms, so every
    // lower pair has an interpolant even though RDP fails.
    CHECK(check_interpolation(build_catalog(CatalogSpec::even_subsets(4))).holds);
}

TEST_CASE("even_subsets(6) fails interpolation")
{
    // {1,2}, {1,3} <= {1,2,3,4}, {1,2,3,5}, and only {1,2,3} lies in between.
    auto e = build_catalog(CatalogSpec::even_subsets(6));
    auto r = check_interpolation(e);
    REQUIRE_FALSE(r.holds);
    const auto& w = *r.witness;
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 4; ++j)
            CHECK(e.leq(w[i], w[j]));
    for (Index z = 0; z < e.size(); ++z)
        CHECK_FALSE((e.leq(w[0], z) && e.leq(w[1], z) && e.leq(z, w[2]) && e.leq(z, w[3])));
    Index a = by_label(e, "{1,2}"), b = by_label(e, "{1,3}");
    Index c = by_label(e, "{1,2,3,4}"), d = by_label(e, "{1,2,3,5}");
    for (Index z = 0; z < e.size(); ++z)
        CHECK_FALSE((e.leq(a, z) && e.leq(b, z) && e.leq(z, c) && e.leq(z, d)));
}

TEST_CASE("ideals")
{
    auto b2 = build_catalog(CatalogSpec::boolean(2));
    auto ideals = enumerate_ideals(b2);
    // {0}, {0,a}, {0,a'}, E
    CHECK(ideals.size() == 4);
    for (const auto& i : ideals) {
        CHECK(is_ideal(b2, i.members));
        CHECK(i.riesz);
    }
    auto c3 = build_catalog(CatalogSpec::chain(3));
    CHECK(enumerate_ideals(c3).size() == 2);
    std::vector<char> seed(c3.size(), 0);
    seed[1] = 1;
    auto closure = ideal_closure(c3, seed);
    CHECK(std::count(closure.begin(), closure.end(), 1) == static_cast<long>(c3.size()));

    auto tau = std::vector<Index>{0, 0, 3, 3};
    REQUIRE(is_endomorphism(b2, tau));
    auto with_tau = enumerate_ideals(b2, &tau);
    for (const auto& i : with_tau)
        CHECK(i.tau_ideal.has_value());
    CHECK_THROWS_AS(enumerate_ideals(build_catalog(CatalogSpec::chain(70)), nullptr, 64),
        std::length_error);
}

TEST_CASE("group order comparisons")
{
    PoGroupSpec strict{2, Scalars::Rationals, GroupOrder::Strict};
    PoGroupSpec product{2, Scalars::Integers, GroupOrder::Product};
    PoGroupSpec lex{2, Scalars::Integers, GroupOrder::Lex};
    CHECK_FALSE(group_leq(strict, {Rational(1), Rational(7, 10)}, {Rational(1), Rational(1)}));
    CHECK(group_leq(strict, {Rational(1, 2), Rational(7, 10)}, {Rational(1), Rational(1)}));
    CHECK(group_leq(product, {Rational(0), Rational(1)}, {Rational(1), Rational(1)}));
    CHECK(group_leq(lex, {Rational(0), Rational(5)}, {Rational(1), Rational(0)}));
    for (const auto& s : {strict, product, lex})
        CHECK(group_leq(s, {Rational(1), Rational(2)}, {Rational(1), Rational(2)}));
    CHECK_THROWS_AS(group_leq(product, {Rational(1, 2), Rational(0)}, {Rational(1), Rational(1)}),
        std::invalid_argument);
    CHECK_THROWS_AS(group_leq(product, {Rational(1)}, {Rational(1), Rational(1)}), std::invalid_argument);
}

TEST_CASE("interval membership")
{
    IntervalAlgebra strict({2, Scalars::Rationals, GroupOrder::Strict}, {Rational(1), Rational(1)});
    CHECK(strict.contains({Rational(3, 10), Rational(3, 10)}));
    CHECK_FALSE(strict.contains({Rational(1), Rational(7, 10)}));
    CHECK(strict.contains(strict.unit()));
    CHECK(interval_contains(strict, {Rational(0), Rational(0)}));
    auto sum = strict.sum({Rational(3, 10), Rational(3, 10)}, {Rational(7, 10), Rational(4, 10)});
    CHECK_FALSE(sum);
}

TEST_CASE("materialized intervals")
{
    auto b = materialize(IntervalAlgebra({2, Scalars::Integers, GroupOrder::Product},
        {Rational(1), Rational(1)}));
    CHECK(find_isomorphism(b, build_catalog(CatalogSpec::boolean(2))));
    for (int n = 1; n <= 5; ++n) {
        auto c = materialize(IntervalAlgebra({1, Scalars::Integers, GroupOrder::Product}, {Rational(n)}));
        CHECK(c == build_catalog(CatalogSpec::chain(n)));
    }
    auto six = materialize(IntervalAlgebra({2, Scalars::Integers, GroupOrder::Product},
        {Rational(2), Rational(1)}));
    CHECK(six.size() == 6);
    CHECK(rdp_brute_force(six));
    CHECK(check_rdp(six).holds);
    CHECK_THROWS_AS(materialize(IntervalAlgebra({2, Scalars::Integers, GroupOrder::Lex},
                        {Rational(1), Rational(1)})),
        std::invalid_argument);
}

TEST_CASE("extension of endomorphisms to group homomorphisms")
{
    auto e = materialize(IntervalAlgebra({2, Scalars::Integers, GroupOrder::Product},
        {Rational(1), Rational(1)}));
    auto at = [&](std::int64_t x, std::int64_t y) { return *e.grid()->find({x, y}); };
    ElementMap id = identity_map(e.size());
    auto r = extend_endomorphism(e, id, 2);
    CHECK(r.ok());
    CHECK(r.matrix == IntegerMatrix{{1, 0}, {0, 1}});

    ElementMap swap(e.size());
    for (Index a = 0; a < e.size(); ++a) {
        const auto& c = e.grid()->coords[a];
        swap[a] = at(c[1], c[0]);
    }
    auto s = extend_endomorphism(e, swap, 3);
    CHECK(s.ok());
    CHECK(s.matrix == IntegerMatrix{{0, 1}, {1, 0}});
    CHECK(matrix_power(s.matrix, 3) == s.matrix);
    CHECK_FALSE(extend_endomorphism(e, swap, 2).n_potent);

    ElementMap diag(e.size());
    for (Index a = 0; a < e.size(); ++a) {
        const auto& c = e.grid()->coords[a];
        diag[a] = at(c[0], c[0]);
    }
    REQUIRE(is_endomorphism(e, diag));
    auto d = extend_endomorphism(e, diag, 2);
    CHECK(d.ok());
    CHECK(d.matrix == IntegerMatrix{{1, 0}, {1, 0}});
    CHECK(matrix_multiply(d.matrix, d.matrix) == d.matrix);
}

TEST_CASE("coordinate extremal states and the strict clan")
{
    IntervalAlgebra strict({2, Scalars::Rationals, GroupOrder::Strict}, {Rational(1), Rational(1)});
    auto states = coordinate_extremal_states(strict);
    CHECK(states.size() == 2);
    auto a = interval_clan_element(strict, {Rational(3, 10), Rational(3, 10)}, "a");
    CHECK(a.values == RationalVector{Rational(3, 10), Rational(3, 10)});
    auto solver = interval_preimage_solver(strict);
    CHECK_FALSE(solver({Rational(1), Rational(7, 10)}));
    auto back = solver({Rational(3, 10), Rational(3, 10)});
    REQUIRE(back);
    CHECK(back->values == a.values);
    IntervalAlgebra lex({2, Scalars::Integers, GroupOrder::Lex}, {Rational(1), Rational(1)});
    CHECK_THROWS(coordinate_extremal_states(lex));
}
