#pragma once

#include "effalg/effect_algebra.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

// Brute-force reference implementations, written against the raw table only.
namespace oracle {

using effalg::Index;
using effalg::RawSumTable;

struct Table {
    std::size_t n = 0;
    std::map<std::pair<Index, Index>, Index> sums;
    bool well_formed = true;

    explicit Table(const RawSumTable& raw)
        : n(raw.n)
    {
        for (const auto& t : raw.sums) {
            if (t.a >= n || t.b >= n || t.c >= n) {
                well_formed = false;
                continue;
            }
            auto [it, fresh] = sums.emplace(std::make_pair(t.a, t.b), t.c);
            if (!fresh && it->second != t.c)
                well_formed = false;
        }
    }

    std::optional<Index> sum(Index a, Index b) const
    {
        auto it = sums.find({a, b});
        if (it == sums.end())
            return std::nullopt;
        return it->second;
    }
};

inline bool satisfies_axioms(const RawSumTable& raw)
{
    Table t(raw);
    const std::size_t n = t.n;
    if (!t.well_formed || n < 1)
        return false;
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (t.sum(a, b) != t.sum(b, a))
                return false;
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (Index c = 0; c < n; ++c) {
                auto ab = t.sum(a, b);
                auto bc = t.sum(b, c);
                std::optional<Index> left, right;
                if (ab)
                    left = t.sum(*ab, c);
                if (bc)
                    right = t.sum(a, *bc);
                if (left && right != left)
                    return false;
            }
    const Index unit = n - 1;
    for (Index a = 0; a < n; ++a) {
        int complements = 0;
        for (Index b = 0; b < n; ++b)
            if (t.sum(a, b) == unit)
                ++complements;
        if (complements != 1)
            return false;
        if (t.sum(a, unit) && a != 0)
            return false;
        if (t.sum(0, a) != a)
            return false;
    }
    return true;
}

inline bool leq(const Table& t, Index a, Index b)
{
    for (Index c = 0; c < t.n; ++c)
        if (t.sum(a, c) == b)
            return true;
    return false;
}

} // namespace oracle
