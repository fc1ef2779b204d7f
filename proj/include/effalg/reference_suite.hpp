#pragma once

#include "effalg/catalog.hpp"
#include "effalg/probes.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace effalg {

/// Outcome of one reproduction or property check.
struct SuiteCheck {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;
    bool within_limit() const { return seconds < limit_seconds; }
};

struct SuiteOptions {
    std::uint64_t seed = 20261015;
    std::size_t random_tables = 200;
    std::size_t interior_points = 50;
    std::size_t probe_count = 100;
};

inline constexpr int kCheckCount = 10;

/// Fixed family of catalog algebras, filtered by size:
/// boolean(1..6), chain(1..8), even_subsets(2, 4, 6), products of two or
/// three chains of length at most 3, and even_subsets(4) x chain(1).
std::vector<CatalogSpec> standard_catalog(std::size_t max_elements);

/// Random sub-effect-algebras of intervals [0,u] in Z^k (k <= 3), generated
/// from a few random points, closed under complement and defined sums,
/// relabelled by a random permutation and validated from the raw table.
std::vector<FiniteEffectAlgebra> random_interval_tables(ProbeSource& probes, std::size_t count,
    std::size_t max_elements = 16);

/// Catalog algebras with at most 9 elements followed by the random tables.
std::vector<FiniteEffectAlgebra> property_family(const SuiteOptions& options);

SuiteCheck run_check(int id, const SuiteOptions& options = {});
std::vector<SuiteCheck> run_reference_suite(const SuiteOptions& options = {});

} // namespace effalg
