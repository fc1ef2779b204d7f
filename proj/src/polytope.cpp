#include "effalg/polytope.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace effalg {

namespace {

void sort_unique(std::vector<RationalVector>& points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

struct Ray {
    RationalVector y;
    std::vector<char> tight; // over all homogenized rows, valid for processed ones
};

void normalize(RationalVector& y)
{
    Rational scale = 0;
    if (y.back() != 0) {
        scale = abs(y.back());
    } else {
        for (const auto& v : y)
            if (v != 0) {
                scale = abs(v);
                break;
            }
    }
    if (scale == 0)
        return;
    for (auto& v : y)
        v /= scale;
}

} // namespace

bool contains(const HPolytope& polytope, const RationalVector& point)
{
    for (std::size_t i = 0; i < polytope.rows.size(); ++i)
        if (dot(polytope.rows[i], point) > polytope.rhs[i])
            return false;
    return true;
}

std::size_t active_rank(const HPolytope& polytope, const RationalVector& point)
{
    Matrix active;
    for (std::size_t i = 0; i < polytope.rows.size(); ++i)
        if (dot(polytope.rows[i], point) == polytope.rhs[i])
            active.push_back(polytope.rows[i]);
    return rank(std::move(active), polytope.dimension);
}

std::vector<RationalVector> vertices_double_description(const HPolytope& polytope)
{
    const std::size_t d = polytope.dimension;
    if (d == 0) {
        for (const auto& r : polytope.rhs)
            if (r < 0)
                return {};
        return {RationalVector{}};
    }

    // Homogenized rows h with constraint h . y <= 0, y = (t, l).
    const std::size_t dim = d + 1;
    Matrix h;
    for (std::size_t i = 0; i < polytope.rows.size(); ++i) {
        RationalVector row = polytope.rows[i];
        row.push_back(-polytope.rhs[i]);
        h.push_back(std::move(row));
    }
    RationalVector nonneg(dim, Rational(0));
    nonneg[d] = -1;
    h.push_back(nonneg);
    const std::size_t m = h.size();

    // Initial simplicial cone from dim independent rows.
    std::vector<std::size_t> basis;
    Matrix echelon;
    for (std::size_t i = 0; i < m && basis.size() < dim; ++i) {
        Matrix trial = echelon;
        trial.push_back(h[i]);
        if (rank(trial, dim) == trial.size()) {
            echelon = std::move(trial);
            basis.push_back(i);
        }
    }
    if (basis.size() < dim)
        throw std::invalid_argument("polyhedron is unbounded: constraint matrix is rank deficient");

    // Rays are the columns of -B^{-1}: B r_j = -e_j.
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < dim; ++j) {
        Matrix b;
        RationalVector rhs(dim, Rational(0));
        rhs[j] = -1;
        for (auto i : basis)
            b.push_back(h[i]);
        auto y = solve_square(b, rhs);
        if (!y)
            throw std::logic_error("initial basis is singular");
        Ray ray{std::move(*y), std::vector<char>(m, 0)};
        for (std::size_t k = 0; k < dim; ++k)
            ray.tight[basis[k]] = k != j ? 1 : 0;
        normalize(ray.y);
        rays.push_back(std::move(ray));
    }

    std::vector<char> processed(m, 0);
    for (auto i : basis)
        processed[i] = 1;

    for (std::size_t row = 0; row < m; ++row) {
        if (processed[row])
            continue;
        std::vector<Rational> value(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            value[r] = dot(h[row], rays[r].y);
            if (value[r] > 0) {
                pos.push_back(r);
            } else {
                if (value[r] < 0) {
                    neg.push_back(r);
                } else {
                    rays[r].tight[row] = 1;
                }
            }
        }

        for (auto p : pos)
            for (auto q : neg) {
                // Combinatorial adjacency: the common tight set must have
                // enough rows and not be contained in any third ray's.
                std::vector<std::size_t> common;
                for (std::size_t k = 0; k < m; ++k)
                    if (processed[k] && rays[p].tight[k] && rays[q].tight[k])
                        common.push_back(k);
                if (common.size() + 2 < dim)
                    continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q)
                        continue;
                    bool covers = true;
                    for (auto k : common)
                        if (!rays[r].tight[k]) {
                            covers = false;
                            break;
                        }
                    if (covers)
                        adjacent = false;
                }
                if (!adjacent)
                    continue;
                Ray combined;
                combined.y.resize(dim);
                for (std::size_t k = 0; k < dim; ++k)
                    combined.y[k] = value[p] * rays[q].y[k] - value[q] * rays[p].y[k];
                normalize(combined.y);
                combined.tight.assign(m, 0);
                for (auto k : common)
                    combined.tight[k] = 1;
                combined.tight[row] = 1;
                next.push_back(std::move(combined));
            }

        for (std::size_t r = 0; r < rays.size(); ++r)
            if (value[r] <= 0)
                next.push_back(std::move(rays[r]));
        rays = std::move(next);
        processed[row] = 1;
    }

    std::vector<RationalVector> vertices;
    for (const auto& ray : rays) {
        if (ray.y[d] == 0)
            throw std::invalid_argument("polyhedron is unbounded: recession ray found");
        RationalVector t(ray.y.begin(), ray.y.begin() + static_cast<std::ptrdiff_t>(d));
        for (auto& v : t)
            v /= ray.y[d];
        vertices.push_back(std::move(t));
    }
    sort_unique(vertices);
    return vertices;
}

std::vector<RationalVector> vertices_active_set(const HPolytope& polytope)
{
    const std::size_t d = polytope.dimension;
    // Rows scaled so the first nonzero coefficient is +-1, duplicates dropped.
    Matrix rows;
    RationalVector rhs;
    for (std::size_t i = 0; i < polytope.rows.size(); ++i) {
        auto lead = std::find_if(polytope.rows[i].begin(), polytope.rows[i].end(),
            [](const Rational& v) { return v != 0; });
        if (lead == polytope.rows[i].end()) {
            if (polytope.rhs[i] < 0)
                return {};
            continue;
        }
        Rational scale = abs(*lead);
        RationalVector row = polytope.rows[i];
        for (auto& v : row)
            v /= scale;
        Rational r = polytope.rhs[i] / scale;
        bool duplicate = false;
        for (std::size_t j = 0; j < rows.size() && !duplicate; ++j)
            duplicate = rows[j] == row && rhs[j] == r;
        if (!duplicate) {
            rows.push_back(std::move(row));
            rhs.push_back(std::move(r));
        }
    }
    if (d == 0)
        return {RationalVector{}};

    // Reduced echelon form of the chosen rows augmented with their rhs.
    struct Frame {
        Matrix rows;
        std::vector<std::size_t> pivots;
    };
    std::vector<RationalVector> vertices;
    std::vector<Frame> frames{Frame{}};

    auto extend = [&](const Frame& frame, std::size_t k) -> std::optional<Frame> {
        RationalVector row = rows[k];
        row.push_back(rhs[k]);
        for (std::size_t i = 0; i < frame.rows.size(); ++i) {
            Rational f = row[frame.pivots[i]];
            if (f != 0)
                for (std::size_t c = 0; c <= d; ++c)
                    row[c] -= f * frame.rows[i][c];
        }
        std::size_t pivot = 0;
        while (pivot < d && row[pivot] == 0)
            ++pivot;
        if (pivot == d)
            return std::nullopt;
        Rational lead = row[pivot];
        for (auto& v : row)
            v /= lead;
        Frame next = frame;
        for (auto& r : next.rows) {
            Rational f = r[pivot];
            if (f != 0)
                for (std::size_t c = 0; c <= d; ++c)
                    r[c] -= f * row[c];
        }
        next.rows.push_back(std::move(row));
        next.pivots.push_back(pivot);
        return next;
    };

    // d - 1 independent tight rows cut out a line; the vertices on it are the
    // endpoints of its feasible segment.
    auto scan_line = [&](const Frame& frame) {
        std::vector<char> is_pivot(d, 0);
        for (auto p : frame.pivots)
            is_pivot[p] = 1;
        std::size_t free = 0;
        while (is_pivot[free])
            ++free;
        RationalVector p(d, Rational(0)), dir(d, Rational(0));
        dir[free] = 1;
        for (std::size_t i = 0; i < frame.rows.size(); ++i) {
            p[frame.pivots[i]] = frame.rows[i][d];
            dir[frame.pivots[i]] = -frame.rows[i][free];
        }
        std::optional<Rational> lo, hi;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Rational alpha = dot(rows[i], dir);
            Rational beta = rhs[i] - dot(rows[i], p);
            if (alpha == 0) {
                if (beta < 0)
                    return;
                continue;
            }
            Rational bound = beta / alpha;
            if (alpha > 0) {
                if (!hi || bound < *hi)
                    hi = bound;
            } else if (!lo || bound > *lo) {
                lo = bound;
            }
            if (lo && hi && *lo > *hi)
                return;
        }
        for (const auto& lambda : {lo, hi}) {
            if (!lambda)
                continue;
            RationalVector x(d);
            for (std::size_t k = 0; k < d; ++k)
                x[k] = p[k] + *lambda * dir[k];
            vertices.push_back(std::move(x));
        }
    };

    auto recurse = [&](auto&& self, std::size_t start) -> void {
        const Frame& frame = frames.back();
        if (frame.rows.size() + 1 == d) {
            scan_line(frame);
            return;
        }
        std::size_t remaining = d - 1 - frame.rows.size();
        for (std::size_t k = start; k + remaining <= rows.size(); ++k) {
            auto next = extend(frames.back(), k);
            if (!next)
                continue;
            frames.push_back(std::move(*next));
            self(self, k + 1);
            frames.pop_back();
        }
    };
    recurse(recurse, 0);
    sort_unique(vertices);
    return vertices;
}

} // namespace effalg
