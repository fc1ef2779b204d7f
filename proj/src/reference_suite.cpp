#include "effalg/reference_suite.hpp"

#include "effalg/duality.hpp"
#include "effalg/internal_states.hpp"
#include "effalg/mv_algebra.hpp"
#include "effalg/po_group.hpp"
#include "effalg/state_space.hpp"
#include "effalg/structure.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace effalg {

namespace {

using Point = std::vector<std::int64_t>;

std::string join_counts(std::initializer_list<std::pair<const char*, std::uint64_t>> items)
{
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, value] : items) {
        out << (first ? "" : ", ") << value << ' ' << name;
        first = false;
    }
    return out.str();
}

// All total self-maps on k points, as a callback per map.
void for_each_map(std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    std::vector<std::size_t> f(k, 0);
    while (true) {
        visit(f);
        std::size_t i = 0;
        while (i < k && f[i] + 1 == k)
            f[i++] = 0;
        if (i == k)
            return;
        ++f[i];
    }
}

SuiteCheck make_check(int id, std::string title)
{
    SuiteCheck c;
    c.id = id;
    c.title = std::move(title);
    return c;
}

FiniteSimplex make_simplex(std::size_t m)
{
    FiniteSimplex s;
    for (std::size_t i = 0; i < m; ++i)
        s.labels.push_back("v" + std::to_string(i + 1));
    return s;
}

SuiteCheck strict_interval_preimage()
{
    auto c = make_check(1, "Strict interval: a^ + b^ has no preimage");
    IntervalAlgebra strict({2, Scalars::Rationals, GroupOrder::Strict}, {Rational(1), Rational(1)});
    GroupElement a{Rational(3, 10), Rational(3, 10)};
    GroupElement b{Rational(7, 10), Rational(4, 10)};
    auto states = coordinate_extremal_states(strict);
    auto a_hat = interval_clan_element(strict, a, "a").values;
    auto b_hat = interval_clan_element(strict, b, "b").values;
    RationalVector sum(a_hat.size());
    for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] = a_hat[i] + b_hat[i];
    auto multiset = sum;
    std::sort(multiset.begin(), multiset.end());
    auto preimage = interval_preimage_solver(strict)(sum);

    std::vector<ClanElement> family{interval_clan_element(strict, a, "a"),
        interval_clan_element(strict, b, "b")};
    auto clan = clan_closure_witness(family, interval_preimage_solver(strict));

    bool constant = std::all_of(a_hat.begin(), a_hat.end(),
        [](const Rational& v) { return v == Rational(3, 10); });
    c.passed = states.size() == 2 && constant
        && multiset == RationalVector{Rational(7, 10), Rational(1)} && !preimage
        && !strict.sum(a, b) && !strict.contains({Rational(1), Rational(7, 10)}) && !clan.closed;
    c.detail = std::to_string(states.size()) + " extremal states, a^ = " + to_string(a_hat)
        + ", a^ + b^ values " + to_string(multiset) + ", preimage "
        + (preimage ? "found" : "absent");
    return c;
}

// Refinement search by direct quantification, independent of find_refinement.
bool refines(const FiniteEffectAlgebra& e, const std::array<Index, 4>& w)
{
    const std::size_t n = e.size();
    for (Index c11 = 0; c11 < n; ++c11)
        for (Index c12 = 0; c12 < n; ++c12) {
            if (e.sum(c11, c12) != w[0])
                continue;
            for (Index c21 = 0; c21 < n; ++c21)
                for (Index c22 = 0; c22 < n; ++c22)
                    if (e.sum(c21, c22) == w[1] && e.sum(c11, c21) == w[2] && e.sum(c12, c22) == w[3])
                        return true;
        }
    return false;
}

SuiteCheck rdp_failure()
{
    auto c = make_check(2, "RDP fails on even_subsets(4), holds on boolean(k<=3) and chain(n<=8)");
    auto even = build_catalog(CatalogSpec::even_subsets(4));
    auto report = check_rdp(even);
    bool witness_ok = false;
    if (report.witness) {
        const auto& w = *report.witness;
        witness_ok = even.sum(w[0], w[1]) != kUndefined && even.sum(w[0], w[1]) == even.sum(w[2], w[3])
            && !refines(even, w);
    }
    bool others = true;
    for (int k = 1; k <= 3; ++k)
        others = others && check_rdp(build_catalog(CatalogSpec::boolean(k))).holds;
    for (int n = 1; n <= 8; ++n)
        others = others && check_rdp(build_catalog(CatalogSpec::chain(n))).holds;
    c.passed = !report.holds && witness_ok && others;
    c.detail = "witness ";
    if (report.witness) {
        const auto& w = *report.witness;
        c.detail += even.label(w[0]) + " + " + even.label(w[1]) + " = " + even.label(w[2]) + " + "
            + even.label(w[3]);
    } else {
        c.detail += "missing";
    }
    c.detail += others ? "; all positive cases hold" : "; a positive case failed";
    return c;
}

SuiteCheck boolean_census()
{
    auto c = make_check(3, "Endomorphism census on boolean(2)");
    auto e = build_catalog(CatalogSpec::boolean(2));
    auto found = enumerate_endomorphisms(e);

    std::vector<ElementMap> oracle;
    for_each_map(e.size(), [&](const std::vector<std::size_t>& f) {
        bool ok = f[e.one()] == e.one();
        for (Index a = 0; a < e.size() && ok; ++a)
            for (Index b = 0; b < e.size() && ok; ++b)
                if (e.sum(a, b) != kUndefined)
                    ok = e.sum(f[a], f[b]) == f[e.sum(a, b)];
        if (ok)
            oracle.push_back(f);
    });
    std::sort(oracle.begin(), oracle.end());

    std::size_t operators = 0;
    bool shape_ok = true;
    for (const auto& f : found)
        if (classify(e, f).state_operator) {
            ++operators;
            for (Index a = 0; a < e.size(); ++a)
                shape_ok = shape_ok && (f[a] == 0 || f[a] == a || f[a] == e.one());
        }
    ElementMap swap(e.size());
    for (Index a = 0; a < e.size(); ++a)
        swap[a] = (a == 0 || a == e.one()) ? a : e.complement(a);
    bool swap_ok = is_endomorphism(e, swap) && is_n_potent(swap, 3) && !is_n_potent(swap, 2);
    c.passed = found.size() == 4 && found == oracle && operators == 3 && shape_ok && swap_ok;
    c.detail = join_counts({{"endomorphisms", found.size()}, {"oracle maps", oracle.size()},
        {"state-operators", operators}});
    c.detail += swap_ok ? "; swap 3-potent, not 2-potent" : "; swap check failed";
    return c;
}

SuiteCheck coordinate_operators()
{
    auto c = make_check(4, "Coordinate operators on chain(2) x chain(2)");
    auto f = build_catalog(CatalogSpec::chain(2));
    auto e = product(f, f);
    ElementMap tau1(e.size()), tau2(e.size());
    RationalVector m1(e.size()), m2(e.size());
    for (Index a = 0; a < f.size(); ++a)
        for (Index b = 0; b < f.size(); ++b) {
            Index i = product_index(f, a, b);
            tau1[i] = product_index(f, a, a);
            tau2[i] = product_index(f, b, b);
            m1[i] = Rational(static_cast<long>(a)) / 2;
            m2[i] = Rational(static_cast<long>(b)) / 2;
        }
    auto states = compute_states(e);
    bool ok = states.vertices.size() == 2 && states.vertex_index(m1) && states.vertex_index(m2);
    for (const auto* tau : {&tau1, &tau2}) {
        auto cl = classify(e, *tau);
        ok = ok && cl.state_morphism && check_esp(*tau, states);
    }
    ProbeSource probes(11);
    auto g = induced_map(e, tau1, states, 2, probes);
    auto vm = g.vertex_map();
    auto m1_index = states.vertex_index(m1);
    bool collapse = vm && m1_index && std::all_of(vm->begin(), vm->end(),
        [&](std::size_t v) { return v == *m1_index; });
    c.passed = ok && g.ok() && collapse;
    c.detail = std::to_string(states.vertices.size()) + " vertices; tau1, tau2 "
        + (ok ? "state-morphism with ESP" : "misclassified") + "; g for tau1 "
        + (collapse ? "constant at m1" : "not constant at m1");
    return c;
}

SuiteCheck operator_properties(const SuiteOptions& options)
{
    auto c = make_check(5, "Idempotent operator properties on small catalog algebras and random tables");
    auto family = property_family(options);
    std::uint64_t idempotents = 0, counterexamples = 0;
    std::string first;
    for (const auto& e : family)
        for (const auto& f : enumerate_endomorphisms(e)) {
            if (!is_n_potent(f, 2))
                continue;
            ++idempotents;
            auto report = operator_property_suite(e, f);
            for (const auto& item : report.items)
                if (item.status == ItemStatus::Fails || item.status == ItemStatus::PreconditionViolated) {
                    ++counterexamples;
                    if (first.empty())
                        first = "item " + item.item + ": " + item.detail;
                }
            if (!report.precondition_ok)
                ++counterexamples;
        }
    c.passed = counterexamples == 0 && idempotents > 0;
    c.detail = join_counts({{"algebras", family.size()}, {"idempotent endomorphisms", idempotents},
        {"counterexamples", counterexamples}});
    if (!first.empty())
        c.detail += "; first: " + first;
    return c;
}

SuiteCheck mv_equivalence()
{
    auto c = make_check(6, "MV-state-operator axioms versus effect-algebra classification");
    std::vector<CatalogSpec> specs;
    for (int n = 1; n <= 6; ++n)
        specs.push_back(CatalogSpec::chain(n));
    specs.push_back(CatalogSpec::mv_product({2, 2}));
    bool ok = true;
    std::uint64_t maps = 0, operators = 0, morphisms = 0;
    for (const auto& spec : specs) {
        auto mv = mv_operations(build_catalog(spec));
        auto report = exhaustive_mv_correspondence(mv, compute_states(mv.base()));
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < mv.size(); ++i)
            total *= mv.size();
        ok = ok && !report.counterexample && report.maps_covered == total;
        maps += report.maps_covered;
        operators += report.mv_state_operators;
        morphisms += report.mv_state_morphisms;
    }
    c.passed = ok;
    c.detail = join_counts({{"maps covered", maps}, {"MV-state-operators", operators},
        {"MV-state-morphisms", morphisms}});
    return c;
}

SuiteCheck induced_maps(const SuiteOptions& options)
{
    auto c = make_check(7, "Induced state maps of n-state-operators");
    auto family = property_family(options);
    ProbeSource probes(options.seed ^ 0x5eedULL);
    std::uint64_t checked = 0, failures = 0, stateless = 0;
    std::string first;
    for (const auto& e : family) {
        auto states = compute_states(e);
        for (const auto& f : enumerate_endomorphisms(e)) {
            auto n = minimal_potency(f);
            if (!n)
                continue;
            if (states.empty()) {
                ++stateless;
                continue;
            }
            auto g = induced_map(e, f, states, *n, probes, options.probe_count);
            ++checked;
            if (!g.ok() || g.probes != options.probe_count) {
                ++failures;
                if (first.empty())
                    first = g.failure;
            }
        }
    }
    c.passed = failures == 0 && checked > 0;
    c.detail = join_counts({{"operators checked", checked}, {"without states", stateless},
        {"failures", failures}});
    if (!first.empty())
        c.detail += "; first: " + first;
    return c;
}

SuiteCheck duality_round_trip(const SuiteOptions& options)
{
    auto c = make_check(8, "Duality round trip on finite simplices");
    ProbeSource probes(options.seed ^ 0xd0a1ULL);
    std::uint64_t pairs = 0, failures = 0, points = 0;
    std::string first;
    for (std::size_t m = 1; m <= 5; ++m) {
        auto simplex = make_simplex(m);
        for_each_map(m, [&](const std::vector<std::size_t>& images) {
            for (int n : {2, 3}) {
                VertexMap g{images, n};
                if (!g.is_n_potent())
                    continue;
                auto r = round_trip_check(simplex, g, probes, options.interior_points);
                ++pairs;
                points += r.points_checked;
                if (!r.ok || r.points_checked != m + options.interior_points) {
                    ++failures;
                    if (first.empty())
                        first = r.failure;
                }
            }
        });
    }
    c.passed = failures == 0 && pairs > 0;
    c.detail = join_counts({{"(g, n) pairs", pairs}, {"points", points}, {"failures", failures}});
    if (!first.empty())
        c.detail += "; first: " + first;
    return c;
}

SuiteCheck group_extension()
{
    auto c = make_check(9, "Extension of n-potent endomorphisms to Z^2");
    std::uint64_t extended = 0, failures = 0;
    for (const auto& unit : {GroupElement{Rational(1), Rational(1)}, GroupElement{Rational(2), Rational(1)}}) {
        auto e = materialize(IntervalAlgebra({2, Scalars::Integers, GroupOrder::Product}, unit));
        for (const auto& f : enumerate_endomorphisms(e)) {
            auto n = minimal_potency(f);
            if (!n)
                continue;
            auto r = extend_endomorphism(e, f, *n);
            ++extended;
            if (!r.ok() || matrix_power(r.matrix, *n) != r.matrix)
                ++failures;
        }
    }
    c.passed = failures == 0 && extended > 0;
    c.detail = join_counts({{"endomorphisms extended", extended}, {"failures", failures}});
    return c;
}

SuiteCheck vertex_oracle()
{
    auto c = make_check(10, "Double description versus the active-set oracle");
    std::uint64_t compared = 0, mismatches = 0, vertices = 0;
    std::string first;
    for (const auto& spec : standard_catalog(64)) {
        auto e = build_catalog(spec);
        auto dd = compute_states(e, {VertexMethod::DoubleDescription});
        if (dd.free_dimensions() > 10)
            continue;
        auto as = compute_states(e, {VertexMethod::ActiveSet});
        ++compared;
        vertices += dd.vertices.size();
        if (dd.vertices != as.vertices) {
            ++mismatches;
            if (first.empty())
                first = spec.name();
        }
    }
    c.passed = mismatches == 0 && compared > 0;
    c.detail = join_counts({{"algebras", compared}, {"vertices", vertices}, {"mismatches", mismatches}});
    if (!first.empty())
        c.detail += "; first: " + first;
    return c;
}

constexpr double kLimits[kCheckCount] = {1, 5, 1, 1, 60, 120, 30, 60, 5, 60};

} // namespace

std::vector<CatalogSpec> standard_catalog(std::size_t max_elements)
{
    std::vector<CatalogSpec> all;
    for (int k = 1; k <= 6; ++k)
        all.push_back(CatalogSpec::boolean(k));
    for (int n = 1; n <= 8; ++n)
        all.push_back(CatalogSpec::chain(n));
    for (int m : {2, 4, 6})
        all.push_back(CatalogSpec::even_subsets(m));
    for (int a = 1; a <= 3; ++a)
        for (int b = a; b <= 3; ++b)
            all.push_back(CatalogSpec::mv_product({a, b}));
    for (int a = 1; a <= 2; ++a)
        for (int b = a; b <= 2; ++b)
            for (int d = b; d <= 3; ++d)
                all.push_back(CatalogSpec::mv_product({a, b, d}));
    all.push_back(CatalogSpec::product({CatalogSpec::even_subsets(4), CatalogSpec::chain(1)}));

    std::vector<CatalogSpec> kept;
    for (const auto& spec : all)
        if (build_catalog(spec, 1u << 12).size() <= max_elements)
            kept.push_back(spec);
    return kept;
}

std::vector<FiniteEffectAlgebra> random_interval_tables(ProbeSource& probes, std::size_t count,
    std::size_t max_elements)
{
    std::vector<FiniteEffectAlgebra> out;
    auto& rng = probes.engine();
    while (out.size() < count) {
        std::size_t k = 1 + probes.index(3);
        Point unit(k);
        for (auto& u : unit)
            u = 1 + static_cast<std::int64_t>(probes.index(3));

        auto random_point = [&]() {
            Point p(k);
            for (std::size_t i = 0; i < k; ++i)
                p[i] = static_cast<std::int64_t>(probes.index(static_cast<std::size_t>(unit[i]) + 1));
            return p;
        };
        std::set<Point> members{Point(k, 0), unit};
        std::size_t generators = 1 + probes.index(3);
        for (std::size_t g = 0; g < generators; ++g)
            members.insert(random_point());

        bool too_big = false;
        for (bool grew = true; grew && !too_big;) {
            grew = false;
            std::vector<Point> current(members.begin(), members.end());
            for (const auto& x : current) {
                Point complement(k);
                for (std::size_t i = 0; i < k; ++i)
                    complement[i] = unit[i] - x[i];
                grew |= members.insert(complement).second;
                for (const auto& y : current) {
                    Point s(k);
                    bool inside = true;
                    for (std::size_t i = 0; i < k; ++i) {
                        s[i] = x[i] + y[i];
                        inside = inside && s[i] <= unit[i];
                    }
                    if (inside)
                        grew |= members.insert(s).second;
                }
            }
            too_big = members.size() > max_elements;
        }
        if (too_big || members.size() < 3)
            continue;

        auto algebra = algebra_from_points(unit, {members.begin(), members.end()});
        std::vector<Index> perm(algebra.size());
        std::iota(perm.begin(), perm.end(), Index{0});
        if (perm.size() > 3)
            std::shuffle(perm.begin() + 1, perm.end() - 1, rng);
        auto table = permute(algebra, perm).raw();
        table.labels.clear();
        auto validated = validate_axioms(table);
        if (!validated.ok())
            throw std::logic_error("generated table failed validation: " + validated.violation->message);
        out.push_back(std::move(*validated.algebra));
    }
    return out;
}

std::vector<FiniteEffectAlgebra> property_family(const SuiteOptions& options)
{
    std::vector<FiniteEffectAlgebra> family;
    for (const auto& spec : standard_catalog(9))
        family.push_back(build_catalog(spec));
    ProbeSource probes(options.seed);
    for (auto& e : random_interval_tables(probes, options.random_tables))
        family.push_back(std::move(e));
    return family;
}

SuiteCheck run_check(int id, const SuiteOptions& options)
{
    auto start = std::chrono::steady_clock::now();
    SuiteCheck c;
    switch (id) {
    case 1: c = strict_interval_preimage(); break;
    case 2: c = rdp_failure(); break;
    case 3: c = boolean_census(); break;
    case 4: c = coordinate_operators(); break;
    case 5: c = operator_properties(options); break;
    case 6: c = mv_equivalence(); break;
    case 7: c = induced_maps(options); break;
    case 8: c = duality_round_trip(options); break;
    case 9: c = group_extension(); break;
    case 10: c = vertex_oracle(); break;
    default: throw std::invalid_argument("no check with id " + std::to_string(id));
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.limit_seconds = kLimits[id - 1];
    return c;
}

std::vector<SuiteCheck> run_reference_suite(const SuiteOptions& options)
{
    std::vector<SuiteCheck> out;
    for (int id = 1; id <= kCheckCount; ++id)
        out.push_back(run_check(id, options));
    return out;
}

} // namespace effalg
