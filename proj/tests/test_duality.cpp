#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "effalg/catalog.hpp"
#include "effalg/duality.hpp"

using namespace effalg;

namespace {

FiniteSimplex simplex(std::size_t m)
{
    FiniteSimplex s;
    for (std::size_t i = 0; i < m; ++i)
        s.labels.push_back("v" + std::to_string(i + 1));
    return s;
}

RationalVector q(std::initializer_list<Rational> values)
{
    return RationalVector(values);
}

} // namespace

TEST_CASE("states of (boolean(2), id) form a segment")
{
    ProbeSource probes(1);
    auto e = build_catalog(CatalogSpec::boolean(2));
    auto s = functor_S(e, identity_map(4), 2, probes);
    CHECK(s.states.vertices.size() == 2);
    CHECK(s.g.vertex_map() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("states of the coordinate operator")
{
    ProbeSource probes(2);
    auto f = build_catalog(CatalogSpec::chain(2));
    auto e = product(f, f);
    ElementMap tau1(9);
    for (Index a = 0; a < 3; ++a)
        for (Index b = 0; b < 3; ++b)
            tau1[product_index(f, a, b)] = product_index(f, a, a);
    auto s = functor_S(e, tau1, 2, probes);
    REQUIRE(s.states.vertices.size() == 2);
    auto vm = s.g.vertex_map();
    REQUIRE(vm);
    CHECK((*vm)[0] == (*vm)[1]);
    CHECK(s.states.vertices[(*vm)[0]][product_index(f, 2, 0)] == 1);
}

TEST_CASE("complement swap on boolean(2) exchanges the vertices")
{
    ProbeSource probes(3);
    auto e = build_catalog(CatalogSpec::boolean(2));
    auto s = functor_S(e, {0, 2, 1, 3}, 3, probes);
    CHECK(s.g.vertex_map() == std::vector<std::size_t>{1, 0});
    CHECK(s.g.ok());
    CHECK_THROWS_AS(functor_S(e, {0, 2, 1, 3}, 2, probes), std::invalid_argument);
}

TEST_CASE("pull-back operator")
{
    auto t = functor_T(simplex(3), VertexMap{{0, 1, 2}, 2});
    auto f = q({Rational(1, 3), 0, 1});
    CHECK(t.tau.apply(f) == f);

    auto c = functor_T(simplex(3), VertexMap{{2, 2, 2}, 2});
    CHECK(c.tau.apply(f) == q({1, 1, 1}));

    auto s = functor_T(simplex(2), VertexMap{{1, 0}, 3});
    auto g = q({Rational(1, 3), Rational(2, 3)});
    CHECK(s.tau.apply(g) == q({Rational(2, 3), Rational(1, 3)}));
    CHECK(s.tau.apply(s.tau.apply(s.tau.apply(g))) == s.tau.apply(g));
    CHECK_THROWS_AS(functor_T(simplex(2), VertexMap{{1, 0}, 2}), std::invalid_argument);
}

TEST_CASE("lazy affine algebra")
{
    LazyAffineAlgebra a(2);
    CHECK(a.contains(q({0, Rational(1, 2)})));
    CHECK_FALSE(a.contains(q({0, 2})));
    CHECK_FALSE(a.sum(q({Rational(2, 3), 0}), q({Rational(1, 2), 0})));
    CHECK(*a.sum(q({Rational(1, 3), 0}), q({Rational(1, 2), 1})) == q({Rational(5, 6), 1}));
    CHECK(a.complement(q({Rational(1, 4), 1})) == q({Rational(3, 4), 0}));
    CHECK(a.join(q({1, 0}), q({0, 1})) == a.one());
    CHECK(a.meet(q({1, 0}), q({0, 1})) == a.zero());
    CHECK(a.leq(a.zero(), a.indicator(1)));
}

TEST_CASE("evaluation map")
{
    CHECK(check_evaluation_map(simplex(1)).bijective_on_vertices);
    auto r = check_evaluation_map(simplex(3));
    CHECK(r.bijective_on_vertices);
    CHECK(r.extremal_states_match);
    CHECK(r.chains_checked >= 1);
    auto mid = evaluation_map(simplex(2), q({Rational(1, 2), Rational(1, 2)}));
    CHECK(mid(q({1, 0})) == Rational(1, 2));
    CHECK(mid(q({0, 1})) == Rational(1, 2));
    CHECK_THROWS_AS(evaluation_map(simplex(2), q({1, 1})), std::invalid_argument);
}

TEST_CASE("round trips")
{
    ProbeSource probes(4);
    CHECK(round_trip_check(simplex(3), VertexMap{{0, 1, 2}, 2}, probes).ok);
    auto c = round_trip_check(simplex(3), VertexMap{{2, 2, 2}, 2}, probes);
    CHECK(c.ok);
    CHECK(c.points_checked == 53);
    auto t = functor_T(simplex(3), VertexMap{{2, 2, 2}, 2});
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(induced_on_states(t, evaluation_map(simplex(3), simplex(3).vertex(i))).weights
            == simplex(3).vertex(2));
    CHECK(round_trip_check(simplex(2), VertexMap{{1, 0}, 3}, probes).ok);
    CHECK_FALSE(round_trip_check(simplex(2), VertexMap{{1, 0}, 2}, probes).ok);
}

TEST_CASE("embedding of a finite algebra into its state functions")
{
    ProbeSource probes(5);
    auto e = build_catalog(CatalogSpec::boolean(2));
    CHECK(embedding_check(e, {0, 2, 1, 3}, 3, probes).ok);
    CHECK(embedding_check(e, {0, 0, 3, 3}, 2, probes).ok);
    auto c = build_catalog(CatalogSpec::chain(3));
    CHECK(embedding_check(c, identity_map(4), 2, probes).ok);
}

TEST_CASE("morphisms in the algebra category")
{
    auto f = build_catalog(CatalogSpec::chain(2));
    auto e = product(f, f);
    ElementMap tau1(9), tau2(9);
    for (Index a = 0; a < 3; ++a)
        for (Index b = 0; b < 3; ++b) {
            tau1[product_index(f, a, b)] = product_index(f, a, a);
            tau2[product_index(f, a, b)] = product_index(f, b, b);
        }
    CHECK(morphism_check(e, tau1, e, tau1, identity_map(9)).ok);
    CHECK(morphism_check(e, tau1, e, tau1, tau1).ok);
    auto r = morphism_check(e, tau2, e, tau2, tau1);
    CHECK_FALSE(r.ok);
    CHECK(r.law == "commuting square");
    CHECK(r.witness == product_index(f, 0, 1));
}

TEST_CASE("morphisms in the simplex category")
{
    VertexMap id{{0, 1}, 2};
    CHECK(morphism_check(id, id, {q({1, 0}), q({0, 1})}).ok);
    VertexMap swap{{1, 0}, 3};
    CHECK(morphism_check(swap, swap, {q({0, 1}), q({1, 0})}).ok);
    auto r = morphism_check(swap, id, {q({1, 0}), q({0, 1})});
    CHECK_FALSE(r.ok);
    CHECK_FALSE(morphism_check(id, id, {q({Rational(1, 2), Rational(1, 2)}), q({0, 1})}).ok);
    CHECK(state_pullback({0, 0, 2}, q({0, Rational(1, 2), 1})) == q({0, 0, 1}));
}
