#include "effalg/internal_states.hpp"

#include "effalg/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace effalg {

ElementMap identity_map(std::size_t n)
{
    ElementMap id(n);
    std::iota(id.begin(), id.end(), Index{0});
    return id;
}

ElementMap compose(const ElementMap& f, const ElementMap& g)
{
    ElementMap out(g.size());
    for (Index a = 0; a < g.size(); ++a)
        out[a] = f[g[a]];
    return out;
}

ElementMap map_power(const ElementMap& f, int exponent)
{
    if (exponent < 1)
        throw std::invalid_argument("exponent must be positive");
    ElementMap out = f;
    for (int e = 1; e < exponent; ++e)
        out = compose(f, out);
    return out;
}

bool is_n_potent(const ElementMap& f, int n)
{
    return map_power(f, n) == f;
}

std::optional<int> minimal_potency(const ElementMap& f)
{
    // f^n = f iff every f(a) lies on a cycle whose length divides n - 1.
    std::int64_t period = 1;
    for (Index a = 0; a < f.size(); ++a) {
        Index start = f[a];
        Index x = f[start];
        std::int64_t length = 1;
        while (x != start && length <= static_cast<std::int64_t>(f.size())) {
            x = f[x];
            ++length;
        }
        if (x != start)
            return std::nullopt;
        period = std::lcm(period, length);
        if (period > 1'000'000)
            return std::nullopt;
    }
    return static_cast<int>(period + 1);
}

bool is_endomorphism(const FiniteEffectAlgebra& e, const ElementMap& f)
{
    if (f.size() != e.size() || f[e.one()] != e.one())
        return false;
    for (Index a = 0; a < e.size(); ++a) {
        if (f[a] >= e.size())
            return false;
        for (Index b = 0; b < e.size(); ++b) {
            Index c = e.sum(a, b);
            if (c != kUndefined && e.sum(f[a], f[b]) != f[c])
                return false;
        }
    }
    return true;
}

std::vector<Index> kernel(const FiniteEffectAlgebra& e, const ElementMap& f)
{
    std::vector<Index> out;
    for (Index a = 0; a < e.size(); ++a)
        if (f[a] == e.zero())
            out.push_back(a);
    return out;
}

std::vector<ElementMap> enumerate_endomorphisms(const FiniteEffectAlgebra& e,
    EnumerationOptions options)
{
    const std::size_t n = e.size();
    if (n > options.max_elements)
        throw std::length_error("endomorphism search over " + std::to_string(n)
            + " elements exceeds the guard of " + std::to_string(options.max_elements));

    std::vector<std::vector<std::array<Index, 2>>> parts(n);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (e.defined(a, b))
                parts[e.sum(a, b)].push_back({a, b});

    ElementMap f(n, kUndefined);
    std::vector<ElementMap> found;
    std::uint64_t nodes = 0;

    // Checks every sum instance touching v whose three images are known.
    auto consistent = [&](Index v) {
        for (Index b = 0; b < n; ++b) {
            Index c = e.sum(v, b);
            if (c == kUndefined || f[b] == kUndefined)
                continue;
            Index image = e.sum(f[v], f[b]);
            if (image == kUndefined)
                return false;
            if (f[c] != kUndefined && f[c] != image)
                return false;
        }
        for (const auto& p : parts[v])
            if (f[p[0]] != kUndefined && f[p[1]] != kUndefined && e.sum(f[p[0]], f[p[1]]) != f[v])
                return false;
        return true;
    };

    auto assign = [&](Index v, Index value, std::vector<Index>& trail) {
        if (f[v] != kUndefined)
            return f[v] == value;
        f[v] = value;
        trail.push_back(v);
        return consistent(v);
    };

    const auto& order = e.topological_order();
    auto search = [&](auto&& self, std::size_t depth) -> void {
        if (++nodes > options.max_nodes)
            throw std::length_error("endomorphism search exceeded the node guard");
        while (depth < n && f[order[depth]] != kUndefined)
            ++depth;
        if (depth == n) {
            if (is_endomorphism(e, f))
                found.push_back(f);
            return;
        }
        Index v = order[depth];
        for (Index c = 0; c < n; ++c) {
            std::vector<Index> trail;
            bool ok = assign(v, c, trail) && assign(e.complement(v), e.complement(c), trail);
            if (ok)
                self(self, depth + 1);
            for (auto t : trail)
                f[t] = kUndefined;
        }
    };

    std::vector<Index> trail;
    if (assign(e.zero(), e.zero(), trail) && assign(e.one(), e.one(), trail))
        search(search, 0);
    std::sort(found.begin(), found.end());
    return found;
}

namespace {

bool preserves_joins(const FiniteEffectAlgebra& e, const ElementMap& f)
{
    for (Index a = 0; a < e.size(); ++a)
        for (Index b = a + 1; b < e.size(); ++b) {
            Index j = e.join(a, b);
            if (j != kUndefined && e.join(f[a], f[b]) != f[j])
                return false;
        }
    return true;
}

bool preserves_meets(const FiniteEffectAlgebra& e, const ElementMap& f)
{
    for (Index a = 0; a < e.size(); ++a)
        for (Index b = a + 1; b < e.size(); ++b) {
            Index m = e.meet(a, b);
            if (m != kUndefined && e.meet(f[a], f[b]) != f[m])
                return false;
        }
    return true;
}

bool satisfies_strong_condition(const FiniteEffectAlgebra& e, const ElementMap& f)
{
    for (Index a = 0; a < e.size(); ++a)
        for (Index b = a; b < e.size(); ++b) {
            Index j = e.join(f[a], f[b]);
            if (j != kUndefined && f[j] != j)
                return false;
        }
    return true;
}

} // namespace

Classification classify(const FiniteEffectAlgebra& e, const ElementMap& f, int bound)
{
    Classification c;
    c.endomorphism = is_endomorphism(e, f);
    if (bound <= 0)
        bound = static_cast<int>(e.size());
    ElementMap power = f;
    for (int k = 1; k <= bound; ++k) {
        if (power == f)
            c.potencies.push_back(k);
        power = compose(f, power);
    }
    c.minimal_potency = minimal_potency(f);
    bool idempotent = compose(f, f) == f;
    c.preserves_joins = preserves_joins(e, f);
    c.preserves_meets = preserves_meets(e, f);
    c.state_operator = c.endomorphism && idempotent;
    c.strong = c.endomorphism && satisfies_strong_condition(e, f);
    c.state_morphism = c.state_operator && c.preserves_joins;
    c.kernel = kernel(e, f);
    c.faithful = c.kernel.size() == 1;
    return c;
}

RationalVector precompose(const RationalVector& state, const ElementMap& f)
{
    RationalVector out(f.size());
    for (Index a = 0; a < f.size(); ++a)
        out[a] = state[f[a]];
    return out;
}

bool check_esp(const ElementMap& f, const StatePolytope& states)
{
    for (const auto& s : states.vertices)
        if (!states.vertex_index(precompose(s, f)))
            return false;
    return true;
}

std::optional<std::vector<std::size_t>> InducedStateMap::vertex_map() const
{
    std::vector<std::size_t> out;
    for (const auto& v : vertex_images) {
        if (!v)
            return std::nullopt;
        out.push_back(*v);
    }
    return out;
}

InducedStateMap induced_map(const FiniteEffectAlgebra& e, const ElementMap& f,
    const StatePolytope& states, int n, ProbeSource& probes, std::size_t probe_count)
{
    InducedStateMap g;
    g.n = n;
    const auto& vertices = states.vertices;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        auto image = precompose(vertices[i], f);
        if (g.images_are_states && !is_state(e, image)) {
            g.images_are_states = false;
            g.failure = "image of vertex " + std::to_string(i) + " is not a state";
        }

        RationalVector iterate = vertices[i];
        for (int k = 0; k < n; ++k)
            iterate = precompose(iterate, f);
        if (g.n_potent_on_vertices && iterate != image) {
            g.n_potent_on_vertices = false;
            g.failure = "g^n differs from g at vertex " + std::to_string(i);
        }

        std::set<Rational> values(vertices[i].begin(), vertices[i].end());
        for (const auto& v : image)
            if (g.value_sets_included && !values.contains(v)) {
                g.value_sets_included = false;
                g.failure = "g(s) takes value " + to_string(v) + " outside s(E) at vertex "
                    + std::to_string(i);
            }

        g.vertex_images.push_back(states.vertex_index(image));
        g.images.push_back(std::move(image));
    }

    if (vertices.empty())
        return g;
    for (std::size_t p = 0; p < probe_count; ++p) {
        auto w = probes.convex_weights(vertices.size());
        RationalVector point(e.size(), Rational(0));
        RationalVector expected(e.size(), Rational(0));
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (Index a = 0; a < e.size(); ++a) {
                point[a] += w[i] * vertices[i][a];
                expected[a] += w[i] * g.images[i][a];
            }
        ++g.probes;
        if (precompose(point, f) != expected) {
            g.affine_on_probes = false;
            g.failure = "affinity fails on probe " + std::to_string(p);
            break;
        }
    }
    return g;
}

std::string to_string(ItemStatus s)
{
    switch (s) {
    case ItemStatus::Holds:
        return "holds";
    case ItemStatus::Vacuous:
        return "vacuous";
    case ItemStatus::Fails:
        return "fails";
    case ItemStatus::PreconditionViolated:
        return "precondition-violated";
    }
    return "unknown";
}

bool OperatorPropertyReport::all_hold() const
{
    if (!precondition_ok)
        return false;
    return std::none_of(items.begin(), items.end(),
        [](const PropertyItem& i) { return i.status == ItemStatus::Fails; });
}

OperatorPropertyReport operator_property_suite(const FiniteEffectAlgebra& e, const ElementMap& f)
{
    static const char* names[] = {"strong-meets", "image-subalgebra", "rdp-inherited",
        "faithful-monotone", "faithful-incomparable", "linear-faithful-identity",
        "antilattice-preserving", "faithful-strong"};
    OperatorPropertyReport report;
    const std::size_t n = e.size();
    bool endo = is_endomorphism(e, f);
    bool idempotent = f.size() == n && compose(f, f) == f;
    if (!endo || !idempotent) {
        report.precondition_ok = false;
        for (auto name : names)
            report.items.push_back({name, ItemStatus::PreconditionViolated,
                endo ? "map is not idempotent" : "map is not an endomorphism"});
        return report;
    }

    auto c = classify(e, f);
    auto verdict = [](bool hypothesis, bool conclusion) {
        if (!hypothesis)
            return ItemStatus::Vacuous;
        return conclusion ? ItemStatus::Holds : ItemStatus::Fails;
    };
    auto idx = [](Index a) { return std::to_string(a); };

    {
        bool ok = true;
        std::string detail;
        for (Index a = 0; a < n && ok; ++a)
            for (Index b = 0; b < n && ok; ++b) {
                Index m = e.meet(f[a], f[b]);
                if (m != kUndefined && f[m] != m) {
                    ok = false;
                    detail = "meet of f(" + idx(a) + "), f(" + idx(b) + ") not fixed";
                }
            }
        report.items.push_back({"strong-meets", verdict(c.strong, ok), detail});
        report.all_meets_preserved = c.preserves_meets;
    }
    std::vector<Index> image;
    {
        std::vector<char> in_image(n, 0);
        for (Index a = 0; a < n; ++a)
            in_image[f[a]] = 1;
        std::string detail;
        bool ok = true;
        for (Index a = 0; a < n && ok; ++a) {
            if (in_image[a] != (f[a] == a ? 1 : 0)) {
                ok = false;
                detail = "image and fixed points differ at " + idx(a);
            }
            if (in_image[a])
                image.push_back(a);
        }
        if (ok && !subalgebra(e, image)) {
            ok = false;
            detail = "image is not a subalgebra";
        }
        if (ok && c.strong)
            for (Index a = 0; a < n && ok; ++a)
                for (Index b = 0; b < n && ok; ++b) {
                    Index j = e.join(f[a], f[b]);
                    if (j != kUndefined && !in_image[j]) {
                        ok = false;
                        detail = "join of f(" + idx(a) + "), f(" + idx(b) + ") outside f(E)";
                    }
                }
        report.items.push_back({"image-subalgebra", ok ? ItemStatus::Holds : ItemStatus::Fails, detail});
    }
    {
        bool rdp = check_rdp(e).holds;
        bool inherited = true;
        if (rdp) {
            auto sub = subalgebra(e, image);
            inherited = sub && check_rdp(*sub).holds;
        }
        report.items.push_back({"rdp-inherited", verdict(rdp, inherited), inherited ? "" : "f(E) lacks RDP"});
    }
    // faithful maps are strictly monotone and move elements off their cone
    {
        bool ok4 = true;
        bool ok5 = true;
        std::string d4, d5;
        for (Index a = 0; a < n; ++a) {
            for (Index b = 0; b < n; ++b)
                if (ok4 && e.less(a, b) && !e.less(f[a], f[b])) {
                    ok4 = false;
                    d4 = idx(a) + " < " + idx(b) + " but images are not strictly ordered";
                }
            if (ok5 && f[a] != a && e.comparable(f[a], a)) {
                ok5 = false;
                d5 = "f(" + idx(a) + ") is comparable with " + idx(a);
            }
        }
        report.items.push_back({"faithful-monotone", verdict(c.faithful, ok4), d4});
        report.items.push_back({"faithful-incomparable", verdict(c.faithful, ok5), d5});
    }
    report.items.push_back({"linear-faithful-identity", verdict(c.faithful && e.is_linear(), f == identity_map(n)), ""});
    {
        auto cls = classify_lattice(e).lattice_class;
        bool antilattice = cls == LatticeClass::Antilattice || cls == LatticeClass::Both;
        report.items.push_back(
            {"antilattice-preserving", verdict(antilattice, c.preserves_joins && c.preserves_meets), ""});
    }
    report.items.push_back({"faithful-strong", verdict(c.faithful, c.strong), ""});
    return report;
}

namespace {

/// Instances refuted by the assigned part of a (possibly partial) map.
struct Refutations {
    bool zero = false;
    bool star = false;
    bool additivity = false;
    bool idempotent_sum = false;
    bool oplus_hom = false;
    bool idempotent = false;
    bool endomorphism = false;
    bool strong_condition = false;
    bool joins = false;

    bool mv_state_operator() const { return zero || star || additivity || idempotent_sum; }
    bool mv_state_morphism() const { return zero || star || oplus_hom || idempotent; }
    bool strong() const { return endomorphism || strong_condition; }
    bool state_morphism() const { return endomorphism || idempotent || joins; }
    bool everything() const
    {
        return mv_state_operator() && mv_state_morphism() && strong() && state_morphism();
    }
};

Refutations refute(const MvStructure& mv, const ElementMap& f)
{
    const auto& e = mv.base();
    const std::size_t n = e.size();
    auto known = [&](Index a) { return f[a] != kUndefined; };
    Refutations r;
    r.zero = known(0) && f[0] != 0;
    r.endomorphism = known(e.one()) && f[e.one()] != e.one();
    for (Index x = 0; x < n; ++x) {
        if (known(x) && known(mv.star(x)) && f[mv.star(x)] != mv.star(f[x]))
            r.star = true;
        if (known(x) && known(f[x]) && f[f[x]] != f[x])
            r.idempotent = true;
        for (Index y = 0; y < n; ++y) {
            Index s = mv.oplus(x, y);
            Index w = mv.odot(y, mv.star(mv.odot(x, y)));
            if (known(s) && known(x) && known(w) && f[s] != mv.oplus(f[x], f[w]))
                r.additivity = true;
            if (known(x) && known(y)) {
                Index v = mv.oplus(f[x], f[y]);
                if (known(v) && f[v] != v)
                    r.idempotent_sum = true;
                if (known(s) && f[s] != v)
                    r.oplus_hom = true;
                Index j = e.join(f[x], f[y]);
                if (j != kUndefined && known(j) && f[j] != j)
                    r.strong_condition = true;
                Index c = e.sum(x, y);
                if (c != kUndefined && known(c) && e.sum(f[x], f[y]) != f[c])
                    r.endomorphism = true;
                Index xy = e.join(x, y);
                if (xy != kUndefined && known(xy) && e.join(f[x], f[y]) != f[xy])
                    r.joins = true;
            }
        }
    }
    return r;
}

} // namespace

MvAxioms evaluate_mv_axioms(const MvStructure& mv, const ElementMap& f)
{
    auto r = refute(mv, f);
    return MvAxioms{!r.zero, !r.star, !r.additivity, !r.idempotent_sum};
}

bool is_mv_state_morphism(const MvStructure& mv, const ElementMap& f)
{
    return !refute(mv, f).mv_state_morphism();
}

MvCorrespondenceReport mv_correspondence(const MvStructure& mv, const ElementMap& f,
    const StatePolytope& states)
{
    MvCorrespondenceReport report;
    auto r = refute(mv, f);
    report.axioms = MvAxioms{!r.zero, !r.star, !r.additivity, !r.idempotent_sum};
    report.mv_state_operator = report.axioms.all();
    report.mv_state_morphism = !r.mv_state_morphism();
    auto c = classify(mv.base(), f);
    report.effect_endomorphism = c.endomorphism;
    report.effect_strong = c.strong;
    report.effect_state_morphism = c.state_morphism;
    report.esp = c.endomorphism && check_esp(f, states);
    return report;
}

ExhaustiveMvReport exhaustive_mv_correspondence(const MvStructure& mv, const StatePolytope& states)
{
    const std::size_t n = mv.size();
    ExhaustiveMvReport report;
    ElementMap f(n, kUndefined);

    std::vector<std::uint64_t> subtree(n + 1, 1);
    for (std::size_t k = 1; k <= n; ++k)
        subtree[k] = subtree[k - 1] * n;

    auto search = [&](auto&& self, Index depth) -> void {
        if (report.counterexample)
            return;
        if (depth == n) {
            ++report.leaves_evaluated;
            ++report.maps_covered;
            auto result = mv_correspondence(mv, f, states);
            report.mv_state_operators += result.mv_state_operator ? 1 : 0;
            report.mv_state_morphisms += result.mv_state_morphism ? 1 : 0;
            if (!result.state_operator_equivalence() || !result.state_morphism_equivalence())
                report.counterexample = f;
            return;
        }
        for (Index c = 0; c < n; ++c) {
            f[depth] = c;
            if (refute(mv, f).everything())
                report.maps_covered += subtree[n - depth - 1];
            else
                self(self, depth + 1);
        }
        f[depth] = kUndefined;
    };
    search(search, 0);
    return report;
}

} // namespace effalg
