#include "effalg/duality.hpp"

#include "effalg/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace effalg {

bool FiniteSimplex::is_point(const RationalVector& weights) const
{
    if (weights.size() != size())
        return false;
    Rational total = 0;
    for (const auto& w : weights) {
        if (w < 0)
            return false;
        total += w;
    }
    return total == 1;
}

RationalVector FiniteSimplex::vertex(std::size_t i) const
{
    RationalVector w(size(), Rational(0));
    w.at(i) = 1;
    return w;
}

RationalVector VertexMap::apply(const RationalVector& weights) const
{
    RationalVector out(weights.size(), Rational(0));
    for (std::size_t i = 0; i < weights.size(); ++i)
        out[images[i]] += weights[i];
    return out;
}

VertexMap VertexMap::power(int exponent) const
{
    if (exponent < 1)
        throw std::invalid_argument("exponent must be positive");
    VertexMap out = *this;
    for (int e = 1; e < exponent; ++e)
        for (auto& v : out.images)
            v = images[v];
    return out;
}

bool VertexMap::is_n_potent() const
{
    return n >= 1 && power(n).images == images;
}

bool LazyAffineAlgebra::contains(const RationalVector& f) const
{
    if (f.size() != m_)
        return false;
    return std::all_of(f.begin(), f.end(), [](const Rational& v) { return v >= 0 && v <= 1; });
}

std::optional<RationalVector> LazyAffineAlgebra::sum(const RationalVector& f,
    const RationalVector& g) const
{
    RationalVector out(m_);
    for (std::size_t i = 0; i < m_; ++i) {
        out[i] = f[i] + g[i];
        if (out[i] > 1)
            return std::nullopt;
    }
    return out;
}

RationalVector LazyAffineAlgebra::complement(const RationalVector& f) const
{
    RationalVector out(m_);
    for (std::size_t i = 0; i < m_; ++i)
        out[i] = 1 - f[i];
    return out;
}

RationalVector LazyAffineAlgebra::join(const RationalVector& f, const RationalVector& g) const
{
    RationalVector out(m_);
    for (std::size_t i = 0; i < m_; ++i)
        out[i] = std::max(f[i], g[i]);
    return out;
}

RationalVector LazyAffineAlgebra::meet(const RationalVector& f, const RationalVector& g) const
{
    RationalVector out(m_);
    for (std::size_t i = 0; i < m_; ++i)
        out[i] = std::min(f[i], g[i]);
    return out;
}

bool LazyAffineAlgebra::leq(const RationalVector& f, const RationalVector& g) const
{
    for (std::size_t i = 0; i < m_; ++i)
        if (f[i] > g[i])
            return false;
    return true;
}

RationalVector LazyAffineAlgebra::indicator(std::size_t vertex) const
{
    RationalVector out(m_, Rational(0));
    out.at(vertex) = 1;
    return out;
}

Rational evaluate(const RationalVector& f, const RationalVector& point)
{
    return dot(f, point);
}

RationalVector PullbackOperator::apply(const RationalVector& f) const
{
    RationalVector out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = f[g.images[i]];
    return out;
}

FunctorT functor_T(const FiniteSimplex& simplex, const VertexMap& g)
{
    if (g.images.size() != simplex.size())
        throw std::invalid_argument("vertex map size does not match the simplex");
    for (auto v : g.images)
        if (v >= simplex.size())
            throw std::invalid_argument("vertex map leaves the simplex");
    if (!g.is_n_potent())
        throw std::invalid_argument("vertex map is not " + std::to_string(g.n) + "-potent");
    return FunctorT{LazyAffineAlgebra(simplex.size()), PullbackOperator{g}};
}

FunctorS functor_S(const FiniteEffectAlgebra& algebra, const ElementMap& f, int n,
    ProbeSource& probes)
{
    if (!is_endomorphism(algebra, f))
        throw std::invalid_argument("map is not an endomorphism");
    if (!is_n_potent(f, n))
        throw std::invalid_argument("map is not " + std::to_string(n) + "-potent");
    FunctorS s;
    s.states = compute_states(algebra);
    s.g = induced_map(algebra, f, s.states, n, probes);
    return s;
}

EvaluationState evaluation_map(const FiniteSimplex& simplex, const RationalVector& point)
{
    if (!simplex.is_point(point))
        throw std::invalid_argument("weights do not describe a point of the simplex");
    return EvaluationState{point};
}

EvaluationState induced_on_states(const FunctorT& t, const EvaluationState& s)
{
    EvaluationState out;
    for (std::size_t j = 0; j < t.algebra.vertex_count(); ++j)
        out.weights.push_back(s(t.tau.apply(t.algebra.indicator(j))));
    return out;
}

EvaluationReport check_evaluation_map(const FiniteSimplex& simplex, int max_denominator)
{
    EvaluationReport report;
    const std::size_t m = simplex.size();
    std::vector<RationalVector> evaluations;
    for (std::size_t i = 0; i < m; ++i)
        evaluations.push_back(evaluation_map(simplex, simplex.vertex(i)).weights);
    auto sorted = evaluations;
    std::sort(sorted.begin(), sorted.end());
    report.bijective_on_vertices = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

    for (int q = 1; q <= max_denominator; ++q) {
        std::size_t size = 1;
        for (std::size_t i = 0; i < m; ++i)
            size *= static_cast<std::size_t>(q + 1);
        if (size > 64)
            break;
        auto sub = build_catalog(CatalogSpec::mv_product(std::vector<int>(m, q)));
        auto states = compute_states(sub);
        std::vector<RationalVector> expected;
        for (std::size_t i = 0; i < m; ++i) {
            RationalVector values;
            for (const auto& c : sub.grid()->coords)
                values.push_back(evaluate(RationalVector(c.begin(), c.end()), evaluations[i]) / q);
            expected.push_back(std::move(values));
        }
        std::sort(expected.begin(), expected.end());
        if (expected != states.vertices)
            report.extremal_states_match = false;
        ++report.chains_checked;
    }
    return report;
}

RoundTripReport round_trip_check(const FiniteSimplex& simplex, const VertexMap& g,
    ProbeSource& probes, std::size_t interior_points)
{
    RoundTripReport report;
    if (!g.is_n_potent()) {
        report.ok = false;
        report.failure = "vertex map is not n-potent";
        return report;
    }
    auto t = functor_T(simplex, g);
    const std::size_t m = simplex.size();

    auto fail = [&](std::string why, std::optional<RationalVector> at) {
        if (!report.ok)
            return;
        report.ok = false;
        report.failure = std::move(why);
        report.witness = std::move(at);
    };

    std::vector<RationalVector> points;
    for (std::size_t i = 0; i < m; ++i)
        points.push_back(simplex.vertex(i));
    for (std::size_t k = 0; k < interior_points; ++k)
        points.push_back(probes.convex_weights(m));

    for (const auto& x : points) {
        auto lhs = evaluation_map(simplex, g.apply(x));
        auto rhs = induced_on_states(t, evaluation_map(simplex, x));
        if (lhs.weights != rhs.weights)
            fail("p o g differs from g' o p", x);
        auto f = probes.unit_vector(m);
        if (lhs(f) != rhs(f))
            fail("p o g and g' o p disagree on a probe function", x);
        ++report.points_checked;
    }

    for (std::size_t i = 0; i < m; ++i) {
        auto s = evaluation_map(simplex, simplex.vertex(i));
        auto once = induced_on_states(t, s);
        auto iterate = s;
        for (int k = 0; k < g.n; ++k)
            iterate = induced_on_states(t, iterate);
        if (iterate.weights != once.weights)
            fail("g'^n differs from g'", simplex.vertex(i));
    }

    for (std::size_t k = 0; k < interior_points; ++k) {
        auto f = probes.unit_vector(m);
        auto h = probes.unit_vector(m);
        const auto& alg = t.algebra;
        auto tf = t.tau.apply(f);
        auto iterate = f;
        for (int e = 0; e < g.n; ++e)
            iterate = t.tau.apply(iterate);
        if (iterate != tf)
            fail("tau_g^n differs from tau_g", f);
        if (!alg.contains(tf))
            fail("tau_g leaves the algebra", f);
        if (t.tau.apply(alg.join(f, h)) != alg.join(tf, t.tau.apply(h)))
            fail("tau_g does not preserve a join", f);
        if (t.tau.apply(alg.meet(f, h)) != alg.meet(tf, t.tau.apply(h)))
            fail("tau_g does not preserve a meet", f);
        auto s = alg.sum(f, alg.complement(alg.join(f, h)));
        if (s && t.tau.apply(*s) != *alg.sum(tf, t.tau.apply(alg.complement(alg.join(f, h)))))
            fail("tau_g does not preserve a sum", f);
        ++report.functions_checked;
    }
    if (t.tau.apply(t.algebra.one()) != t.algebra.one())
        fail("tau_g does not preserve the unit", std::nullopt);
    return report;
}

RoundTripReport embedding_check(const FiniteEffectAlgebra& algebra, const ElementMap& f, int n,
    ProbeSource& probes)
{
    RoundTripReport report;
    auto s = functor_S(algebra, f, n, probes);
    auto fail = [&](std::string why) {
        if (report.ok) {
            report.ok = false;
            report.failure = std::move(why);
        }
    };
    if (s.states.empty()) {
        fail("algebra has no states");
        return report;
    }
    auto od = is_order_determining(algebra, s.states);
    if (!od.separating)
        fail("a -> a^ is not injective");
    if (!od.order_determining)
        fail("a -> a^ does not reflect the order");
    if (!s.g.ok())
        fail("induced state map failed: " + s.g.failure);
    auto vertex_map = s.g.vertex_map();
    if (!vertex_map) {
        fail("induced map does not send extremal states to extremal states");
        return report;
    }

    auto image = evaluation_image(algebra, s.states);
    LazyAffineAlgebra lazy(s.states.vertices.size());
    PullbackOperator tau_g{VertexMap{*vertex_map, n}};
    for (Index a = 0; a < algebra.size(); ++a) {
        if (!lazy.contains(image.hats[a]))
            fail("a^ is not a [0,1]-valued function");
        if (tau_g.apply(image.hats[a]) != image.hats[f[a]])
            fail("tau_g(a^) differs from f(a)^ at element " + algebra.label(a));
        for (Index b = 0; b < algebra.size(); ++b) {
            Index c = algebra.sum(a, b);
            if (c == kUndefined)
                continue;
            auto total = lazy.sum(image.hats[a], image.hats[b]);
            if (!total || *total != image.hats[c])
                fail("a^ + b^ differs from (a+b)^");
        }
        ++report.functions_checked;
    }
    report.points_checked = s.states.vertices.size();
    return report;
}

namespace {

bool is_homomorphism(const FiniteEffectAlgebra& source, const FiniteEffectAlgebra& target,
    const ElementMap& h, std::optional<std::size_t>& witness)
{
    if (h[source.one()] != target.one()) {
        witness = source.one();
        return false;
    }
    for (Index a = 0; a < source.size(); ++a)
        for (Index b = 0; b < source.size(); ++b) {
            Index c = source.sum(a, b);
            if (c != kUndefined && target.sum(h[a], h[b]) != h[c]) {
                witness = a;
                return false;
            }
        }
    return true;
}

} // namespace

MorphismReport morphism_check(const FiniteEffectAlgebra& source, const ElementMap& source_op,
    const FiniteEffectAlgebra& target, const ElementMap& target_op, const ElementMap& h)
{
    MorphismReport report;
    if (h.size() != source.size()
        || std::any_of(h.begin(), h.end(), [&](Index v) { return v >= target.size(); })) {
        report.ok = false;
        report.law = "map";
        return report;
    }
    if (!is_homomorphism(source, target, h, report.witness)) {
        report.ok = false;
        report.law = "homomorphism";
        return report;
    }
    for (Index a = 0; a < source.size(); ++a)
        for (Index b = 0; b < source.size(); ++b) {
            Index j = source.join(a, b);
            if (j != kUndefined && target.join(h[a], h[b]) != h[j]) {
                report = {false, "joins", a};
                return report;
            }
            Index m = source.meet(a, b);
            if (m != kUndefined && target.meet(h[a], h[b]) != h[m]) {
                report = {false, "meets", a};
                return report;
            }
        }
    for (Index a = 0; a < source.size(); ++a)
        if (h[source_op[a]] != target_op[h[a]]) {
            report = {false, "commuting square", a};
            return report;
        }
    return report;
}

MorphismReport morphism_check(const VertexMap& g1, const VertexMap& g2,
    const std::vector<RationalVector>& p)
{
    MorphismReport report;
    if (p.size() != g1.images.size()) {
        report = {false, "map", std::nullopt};
        return report;
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        bool unit = p[i].size() == g2.images.size()
            && std::count(p[i].begin(), p[i].end(), Rational(1)) == 1
            && std::count(p[i].begin(), p[i].end(), Rational(0))
                == static_cast<std::ptrdiff_t>(p[i].size()) - 1;
        if (!unit) {
            report = {false, "extreme points", i};
            return report;
        }
    }
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[g1.images[i]] != g2.apply(p[i])) {
            report = {false, "commuting square", i};
            return report;
        }
    return report;
}

RationalVector state_pullback(const ElementMap& h, const RationalVector& state)
{
    return precompose(state, h);
}

} // namespace effalg
