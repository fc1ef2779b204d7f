#include "effalg/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace effalg {

std::optional<std::array<Index, 4>> find_refinement(const FiniteEffectAlgebra& e,
    Index x1, Index x2, Index y1, Index y2)
{
    // Choosing c11 fixes c12 = x1 - c11, c21 = y1 - c11, c22 = x2 - c21.
    for (Index c11 = 0; c11 < e.size(); ++c11) {
        if (!e.leq(c11, x1) || !e.leq(c11, y1))
            continue;
        Index c12 = e.minus(x1, c11);
        Index c21 = e.minus(y1, c11);
        if (!e.leq(c21, x2))
            continue;
        Index c22 = e.minus(x2, c21);
        if (e.sum(c12, c22) == y2)
            return std::array<Index, 4>{c11, c12, c21, c22};
    }
    return std::nullopt;
}

RdpReport check_rdp(const FiniteEffectAlgebra& e)
{
    const std::size_t n = e.size();
    RdpReport report;

    std::vector<std::vector<std::array<Index, 2>>> decompositions(n);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (e.defined(a, b))
                decompositions[e.sum(a, b)].push_back({a, b});

    for (Index z = 0; z < n && report.holds; ++z)
        for (const auto& x : decompositions[z]) {
            for (const auto& y : decompositions[z])
                if (!find_refinement(e, x[0], x[1], y[0], y[1])) {
                    report.holds = false;
                    report.witness = std::array<Index, 4>{x[0], x[1], y[0], y[1]};
                    break;
                }
            if (!report.holds)
                break;
        }

    for (Index z = 0; z < n && report.splitting_holds; ++z)
        for (const auto& y : decompositions[z]) {
            for (Index x = 0; x < n && report.splitting_holds; ++x) {
                if (!e.leq(x, z))
                    continue;
                bool split = false;
                for (Index x1 = 0; x1 < n && !split; ++x1) {
                    if (!e.leq(x1, x) || !e.leq(x1, y[0]))
                        continue;
                    split = e.leq(e.minus(x, x1), y[1]);
                }
                if (!split) {
                    report.splitting_holds = false;
                    report.splitting_witness = std::array<Index, 3>{x, y[0], y[1]};
                }
            }
            if (!report.splitting_holds)
                break;
        }
    return report;
}

InterpolationReport check_interpolation(const FiniteEffectAlgebra& e)
{
    const std::size_t n = e.size();
    InterpolationReport report;
    for (Index x1 = 0; x1 < n; ++x1)
        for (Index x2 = x1; x2 < n; ++x2) {
            std::vector<Index> upper;
            for (Index y = 0; y < n; ++y)
                if (e.leq(x1, y) && e.leq(x2, y))
                    upper.push_back(y);
            for (std::size_t i = 0; i < upper.size(); ++i)
                for (std::size_t j = i; j < upper.size(); ++j) {
                    Index y1 = upper[i];
                    Index y2 = upper[j];
                    bool found = false;
                    for (Index z : upper)
                        if (e.leq(z, y1) && e.leq(z, y2)) {
                            found = true;
                            break;
                        }
                    if (!found) {
                        report.holds = false;
                        report.witness = std::array<Index, 4>{x1, x2, y1, y2};
                        return report;
                    }
                }
        }
    return report;
}

std::string to_string(LatticeClass c)
{
    switch (c) {
    case LatticeClass::Lattice:
        return "lattice";
    case LatticeClass::Antilattice:
        return "antilattice";
    case LatticeClass::Neither:
        return "neither";
    case LatticeClass::Both:
        return "both";
    }
    return "unknown";
}

LatticeReport classify_lattice(const FiniteEffectAlgebra& e)
{
    const std::size_t n = e.size();
    LatticeReport report;
    for (Index a = 0; a < n; ++a)
        for (Index b = a + 1; b < n; ++b) {
            bool has_join = e.join(a, b) != kUndefined;
            bool has_meet = e.meet(a, b) != kUndefined;
            if (!report.missing_bound && (!has_join || !has_meet))
                report.missing_bound = std::array<Index, 2>{a, b};
            if (!report.incomparable_bound && !e.comparable(a, b) && (has_join || has_meet))
                report.incomparable_bound = std::array<Index, 2>{a, b};
        }
    bool lattice = !report.missing_bound;
    bool antilattice = !report.incomparable_bound;
    if (lattice && antilattice)
        report.lattice_class = LatticeClass::Both;
    else if (lattice)
        report.lattice_class = LatticeClass::Lattice;
    else if (antilattice)
        report.lattice_class = LatticeClass::Antilattice;
    else
        report.lattice_class = LatticeClass::Neither;
    return report;
}

std::vector<Index> Ideal::elements() const
{
    std::vector<Index> out;
    for (Index a = 0; a < members.size(); ++a)
        if (members[a])
            out.push_back(a);
    return out;
}

bool is_ideal(const FiniteEffectAlgebra& e, const std::vector<char>& members)
{
    const std::size_t n = e.size();
    if (members.size() != n || !members[e.zero()])
        return false;
    for (Index y = 0; y < n; ++y) {
        if (!members[y])
            continue;
        for (Index x = 0; x < n; ++x) {
            if (e.leq(x, y) && !members[x])
                return false;
            if (members[x] && e.defined(x, y) && !members[e.sum(x, y)])
                return false;
        }
    }
    return true;
}

bool is_riesz_ideal(const FiniteEffectAlgebra& e, const std::vector<char>& members)
{
    const std::size_t n = e.size();
    for (Index x = 0; x < n; ++x) {
        if (!members[x])
            continue;
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b) {
                Index s = e.sum(a, b);
                if (s == kUndefined || !e.leq(x, s))
                    continue;
                bool split = false;
                for (Index a1 = 0; a1 < n && !split; ++a1) {
                    if (!members[a1] || !e.leq(a1, a) || !e.leq(a1, x))
                        continue;
                    Index b1 = e.minus(x, a1);
                    split = members[b1] && e.leq(b1, b);
                }
                if (!split)
                    return false;
            }
    }
    return true;
}

std::vector<char> ideal_closure(const FiniteEffectAlgebra& e, std::vector<char> members)
{
    const std::size_t n = e.size();
    members.resize(n, 0);
    members[e.zero()] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Index y = 0; y < n; ++y) {
            if (!members[y])
                continue;
            for (Index x = 0; x < n; ++x) {
                if (!members[x] && e.leq(x, y)) {
                    members[x] = 1;
                    changed = true;
                }
                if (members[x] && e.defined(x, y) && !members[e.sum(x, y)]) {
                    members[e.sum(x, y)] = 1;
                    changed = true;
                }
            }
        }
    }
    return members;
}

std::vector<Ideal> enumerate_ideals(const FiniteEffectAlgebra& e, const std::vector<Index>* tau,
    std::size_t max_elements)
{
    const std::size_t n = e.size();
    if (n > max_elements)
        throw std::length_error("ideal enumeration over " + std::to_string(n)
            + " elements exceeds the guard of " + std::to_string(max_elements));

    // Every ideal is reached from {0} by repeatedly adjoining one element and
    // closing, so a breadth-first search over closures finds them all.
    std::set<std::vector<char>> seen;
    std::vector<std::vector<char>> frontier{ideal_closure(e, {})};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        std::vector<std::vector<char>> next;
        for (const auto& ideal : frontier)
            for (Index x = 0; x < n; ++x) {
                if (ideal[x])
                    continue;
                auto grown = ideal;
                grown[x] = 1;
                grown = ideal_closure(e, std::move(grown));
                if (seen.insert(grown).second)
                    next.push_back(std::move(grown));
            }
        frontier = std::move(next);
    }

    std::vector<Ideal> out;
    for (const auto& members : seen) {
        Ideal ideal{members, is_riesz_ideal(e, members), std::nullopt};
        if (tau) {
            bool closed = true;
            for (Index a = 0; a < n && closed; ++a)
                if (members[a] && !members[(*tau)[a]])
                    closed = false;
            ideal.tau_ideal = closed;
        }
        out.push_back(std::move(ideal));
    }
    std::stable_sort(out.begin(), out.end(), [](const Ideal& x, const Ideal& y) {
        auto cx = std::count(x.members.begin(), x.members.end(), 1);
        auto cy = std::count(y.members.begin(), y.members.end(), 1);
        if (cx != cy)
            return cx < cy;
        return x.members > y.members;
    });
    return out;
}

StructureReport analyze_structure(const FiniteEffectAlgebra& algebra, std::size_t ideal_guard)
{
    StructureReport report;
    report.rdp = check_rdp(algebra);
    report.interpolation = check_interpolation(algebra);
    report.lattice = classify_lattice(algebra);
    auto ideals = enumerate_ideals(algebra, nullptr, ideal_guard);
    report.ideal_count = ideals.size();
    for (const auto& i : ideals)
        report.riesz_ideal_count += i.riesz ? 1 : 0;
    return report;
}

} // namespace effalg
