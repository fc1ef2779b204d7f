#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "effalg/catalog.hpp"
#include "effalg/internal_states.hpp"
#include "effalg/mv_algebra.hpp"

using namespace effalg;

namespace {

// Every total self-map, in lexicographic order, filtered by the definition.
std::vector<ElementMap> endomorphisms_brute_force(const FiniteEffectAlgebra& e)
{
    const std::size_t n = e.size();
    std::vector<ElementMap> out;
    ElementMap f(n, 0);
    while (true) {
        bool ok = f[e.one()] == e.one();
        for (Index a = 0; a < n && ok; ++a)
            for (Index b = 0; b < n && ok; ++b) {
                Index c = e.sum(a, b);
                if (c != kUndefined)
                    ok = e.sum(f[a], f[b]) == f[c];
            }
        if (ok)
            out.push_back(f);
        Index i = 0;
        while (i < n && f[i] == n - 1)
            f[i++] = 0;
        if (i == n)
            break;
        ++f[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct ProductF {
    FiniteEffectAlgebra f = build_catalog(CatalogSpec::chain(2));
    FiniteEffectAlgebra e = product(f, f);
    ElementMap tau1, tau2, swap;
    ProductF()
    {
        tau1.resize(9);
        tau2.resize(9);
        swap.resize(9);
        for (Index a = 0; a < 3; ++a)
            for (Index b = 0; b < 3; ++b) {
                tau1[product_index(f, a, b)] = product_index(f, a, a);
                tau2[product_index(f, a, b)] = product_index(f, b, b);
                swap[product_index(f, a, b)] = product_index(f, b, a);
            }
    }
};

const ElementMap kSwap{0, 2, 1, 3};

} // namespace

TEST_CASE("map utilities")
{
    CHECK(compose({1, 0, 2}, {2, 2, 0}) == ElementMap{2, 2, 1});
    CHECK(map_power(kSwap, 2) == identity_map(4));
    CHECK(is_n_potent(kSwap, 3));
    CHECK_FALSE(is_n_potent(kSwap, 2));
    CHECK(minimal_potency(kSwap) == 3);
    CHECK(minimal_potency(identity_map(4)) == 2);
    CHECK(minimal_potency(ElementMap{1, 2, 0, 3}) == 4);
    CHECK_FALSE(minimal_potency(ElementMap{1, 2, 2}));
}

TEST_CASE("boolean(2) endomorphism census")
{
    auto e = build_catalog(CatalogSpec::boolean(2));
    auto found = enumerate_endomorphisms(e);
    CHECK(found == endomorphisms_brute_force(e));
    REQUIRE(found.size() == 4);
    int operators = 0;
    for (const auto& f : found) {
        auto c = classify(e, f);
        if (c.state_operator) {
            ++operators;
            for (Index a = 0; a < 4; ++a)
                CHECK((f[a] == 0 || f[a] == a || f[a] == 3));
        }
    }
    CHECK(operators == 3);
    auto c = classify(e, kSwap);
    CHECK(c.endomorphism);
    CHECK_FALSE(c.state_operator);
    CHECK(c.minimal_potency == 3);
    CHECK(std::find(c.potencies.begin(), c.potencies.end(), 2) == c.potencies.end());
}

TEST_CASE("enumeration matches brute force on small catalog algebras")
{
    for (const auto& spec : {CatalogSpec::chain(1), CatalogSpec::chain(2), CatalogSpec::chain(3),
             CatalogSpec::boolean(1), CatalogSpec::mv_product({1, 2})}) {
        auto e = build_catalog(spec);
        CAPTURE(spec.name());
        CHECK(enumerate_endomorphisms(e) == endomorphisms_brute_force(e));
    }
    CHECK(enumerate_endomorphisms(build_catalog(CatalogSpec::chain(2))).size() == 1);
    CHECK_THROWS_AS(enumerate_endomorphisms(build_catalog(CatalogSpec::boolean(3)), {4}),
        std::length_error);
}

TEST_CASE("identity is always an endomorphism and a state-morphism-operator")
{
    for (const auto& spec : {CatalogSpec::chain(3), CatalogSpec::boolean(3), CatalogSpec::even_subsets(4)}) {
        auto e = build_catalog(spec);
        auto all = enumerate_endomorphisms(e);
        CHECK(std::find(all.begin(), all.end(), identity_map(e.size())) != all.end());
        auto c = classify(e, identity_map(e.size()));
        CHECK(c.state_morphism);
        CHECK(c.strong);
        CHECK(c.faithful);
    }
}

TEST_CASE("coordinate operators on chain(2) x chain(2)")
{
    ProductF p;
    auto states = compute_states(p.e);
    for (const auto* tau : {&p.tau1, &p.tau2}) {
        auto c = classify(p.e, *tau);
        CHECK(c.state_morphism);
        CHECK(c.strong);
        CHECK_FALSE(c.faithful);
        CHECK(check_esp(*tau, states));
    }
    ProbeSource probes(7);
    auto g = induced_map(p.e, p.tau1, states, 2, probes);
    CHECK(g.ok());
    auto vm = g.vertex_map();
    REQUIRE(vm);
    RationalVector m1(9);
    for (Index a = 0; a < 3; ++a)
        for (Index b = 0; b < 3; ++b)
            m1[product_index(p.f, a, b)] = Rational(a) / 2;
    auto m1_index = states.vertex_index(m1);
    REQUIRE(m1_index);
    CHECK((*vm)[0] == *m1_index);
    CHECK((*vm)[1] == *m1_index);

    auto s = induced_map(p.e, p.swap, states, 3, probes);
    CHECK(s.ok());
    REQUIRE(s.vertex_map());
    CHECK((*s.vertex_map())[0] == 1);
    CHECK((*s.vertex_map())[1] == 0);

    auto id = induced_map(p.e, identity_map(9), states, 2, probes);
    CHECK(*id.vertex_map() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("ESP is vacuous without states")
{
    StatePolytope none;
    CHECK(check_esp(identity_map(3), none));
}

TEST_CASE("faithful idempotents on chains are the identity")
{
    for (int n = 1; n <= 6; ++n) {
        auto e = build_catalog(CatalogSpec::chain(n));
        for (const auto& f : enumerate_endomorphisms(e)) {
            auto c = classify(e, f);
            if (c.state_operator && c.faithful)
                CHECK(f == identity_map(e.size()));
        }
    }
}

TEST_CASE("idempotent operator properties on the catalog")
{
    std::vector<FiniteEffectAlgebra> algebras{build_catalog(CatalogSpec::boolean(2)),
        build_catalog(CatalogSpec::boolean(3)), build_catalog(CatalogSpec::chain(4)),
        build_catalog(CatalogSpec::even_subsets(4)), ProductF{}.e};
    for (const auto& e : algebras)
        for (const auto& f : enumerate_endomorphisms(e)) {
            auto r = operator_property_suite(e, f);
            if (!classify(e, f).state_operator) {
                CHECK_FALSE(r.precondition_ok);
                continue;
            }
            CHECK(r.items.size() == 8);
            for (const auto& item : r.items) {
                CAPTURE(item.item);
                CAPTURE(item.detail);
                CHECK(item.status != ItemStatus::Fails);
            }
            CHECK(r.all_hold());
        }
}

TEST_CASE("MV axioms on chain(2)")
{
    auto mv = mv_operations(build_catalog(CatalogSpec::chain(2)));
    auto states = compute_states(mv.base());
    auto id = mv_correspondence(mv, identity_map(3), states);
    CHECK(id.axioms.all());
    CHECK(id.effect_strong);
    CHECK(id.mv_state_morphism);

    ElementMap collapse{0, 0, 2};
    auto r = mv_correspondence(mv, collapse, states);
    CHECK_FALSE(r.axioms.additivity);
    CHECK_FALSE(r.effect_endomorphism);
    CHECK_FALSE(r.mv_state_operator);
    CHECK(r.state_operator_equivalence());
}

TEST_CASE("MV correspondence for the coordinate operator")
{
    ProductF p;
    auto mv = mv_operations(build_catalog(CatalogSpec::mv_product({2, 2})));
    REQUIRE(mv.base() == p.e);
    auto states = compute_states(p.e);
    auto r = mv_correspondence(mv, p.tau1, states);
    CHECK(r.mv_state_operator);
    CHECK(r.mv_state_morphism);
    CHECK(r.effect_state_morphism);
    CHECK(r.esp);
    CHECK(r.state_operator_equivalence());
    CHECK(r.state_morphism_equivalence());
    CHECK(is_mv_state_morphism(mv, p.tau1));
}

TEST_CASE("exhaustive MV correspondence on small chains")
{
    for (int n = 1; n <= 3; ++n) {
        auto mv = mv_operations(build_catalog(CatalogSpec::chain(n)));
        auto states = compute_states(mv.base());
        auto r = exhaustive_mv_correspondence(mv, states);
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < mv.size(); ++i)
            total *= mv.size();
        CHECK(r.maps_covered == total);
        CHECK_FALSE(r.counterexample);
        CHECK(r.mv_state_operators >= 1);
    }
}

TEST_CASE("pruned MV search agrees with map-by-map evaluation")
{
    for (const auto& spec : {CatalogSpec::chain(2), CatalogSpec::chain(3), CatalogSpec::mv_product({1, 1}),
             CatalogSpec::mv_product({1, 2})}) {
        auto mv = mv_operations(build_catalog(spec));
        auto states = compute_states(mv.base());
        const std::size_t n = mv.size();
        std::uint64_t operators = 0, morphisms = 0, maps = 0;
        ElementMap f(n, 0);
        while (true) {
            auto r = mv_correspondence(mv, f, states);
            CHECK(r.state_operator_equivalence());
            CHECK(r.state_morphism_equivalence());
            operators += r.mv_state_operator ? 1 : 0;
            morphisms += r.mv_state_morphism ? 1 : 0;
            ++maps;
            Index i = 0;
            while (i < n && f[i] == n - 1)
                f[i++] = 0;
            if (i == n)
                break;
            ++f[i];
        }
        auto report = exhaustive_mv_correspondence(mv, states);
        CAPTURE(spec.name());
        CHECK(report.maps_covered == maps);
        CHECK(report.mv_state_operators == operators);
        CHECK(report.mv_state_morphisms == morphisms);
    }
}
