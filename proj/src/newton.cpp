#include "treestab/newton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace treestab {

namespace {

// Phase-one simplex on  A x = b, x >= 0  with one artificial variable per row.
// Returns whether the system is feasible.
bool feasible(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    const std::size_t total = cols + rows;

    for (std::size_t r = 0; r < rows; ++r) {
        if (sgn(b[r]) < 0) {
            for (auto& x : a[r]) x = -x;
            b[r] = -b[r];
        }
        a[r].resize(total, Rational(0));
        a[r][cols + r] = 1;
    }
    std::vector<std::size_t> basis(rows);
    std::iota(basis.begin(), basis.end(), cols);

    // reduced[j] > 0 means raising column j lowers the artificial sum
    std::vector<Rational> reduced(total, Rational(0));
    Rational objective = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j < total; ++j) reduced[j] += a[r][j];
        objective += b[r];
    }
    for (std::size_t r = 0; r < rows; ++r) reduced[cols + r] -= 1;

    while (sgn(objective) > 0) {
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j) {
            if (sgn(reduced[j]) > 0) {
                enter = j;
                break;
            }
        }
        if (enter == total) break;

        std::size_t leave = rows;
        Rational best;
        for (std::size_t r = 0; r < rows; ++r) {
            if (sgn(a[r][enter]) <= 0) continue;
            Rational ratio = b[r] / a[r][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == rows) break;  // unbounded direction cannot occur for phase one

        Rational pivot = a[leave][enter];
        for (auto& x : a[leave]) x /= pivot;
        b[leave] /= pivot;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || sgn(a[r][enter]) == 0) continue;
            Rational f = a[r][enter];
            for (std::size_t j = 0; j < total; ++j) a[r][j] -= f * a[leave][j];
            b[r] -= f * b[leave];
        }
        Rational f = reduced[enter];
        for (std::size_t j = 0; j < total; ++j) reduced[j] -= f * a[leave][j];
        objective -= f * b[leave];
        basis[leave] = enter;
    }
    return sgn(objective) == 0;
}

std::vector<Exponent> support(const MultiPoly& p) {
    std::vector<Exponent> out;
    out.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) out.push_back(e);
    return out;
}

std::vector<Exponent> extreme_points(const std::vector<Exponent>& points) {
    std::vector<Exponent> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<Exponent> others;
        others.reserve(points.size() - 1);
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i) others.push_back(points[j]);
        if (others.empty() || !in_convex_hull(others, points[i])) out.push_back(points[i]);
    }
    return out;
}

}  // namespace

bool in_convex_hull(const std::vector<Exponent>& points, const Exponent& q) {
    if (points.empty()) return false;
    const std::size_t dim = q.size();
    for (std::size_t i = 0; i < dim; ++i) {
        unsigned lo = points[0][i];
        unsigned hi = points[0][i];
        for (const auto& p : points) {
            lo = std::min(lo, p[i]);
            hi = std::max(hi, p[i]);
        }
        if (q[i] < lo || q[i] > hi) return false;
    }
    if (std::find(points.begin(), points.end(), q) != points.end()) return true;

    std::vector<std::vector<Rational>> a(dim + 1, std::vector<Rational>(points.size()));
    std::vector<Rational> b(dim + 1);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t j = 0; j < points.size(); ++j) a[r][j] = points[j][r];
        b[r] = q[r];
    }
    for (std::size_t j = 0; j < points.size(); ++j) a[dim][j] = 1;
    b[dim] = 1;
    return feasible(std::move(a), std::move(b));
}

LatticePolytope newton_polytope(const MultiPoly& p) {
    if (p.is_zero()) throw PolyError("Newton polytope of the zero polynomial");
    return {p.nvars(), extreme_points(support(p))};
}

SaturationReport saturation_check(const MultiPoly& p) {
    LatticePolytope hull = newton_polytope(p);
    const std::size_t dim = hull.dim;
    SaturationReport report;
    if (dim == 0) return report;

    Exponent lo = hull.vertices[0];
    Exponent hi = hull.vertices[0];
    for (const auto& v : hull.vertices) {
        for (std::size_t i = 0; i < dim; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    }
    const bool homogeneous = p.is_homogeneous();
    const unsigned degree = p.total_degree();

    auto consider = [&](const Exponent& q) {
        if (homogeneous && std::accumulate(q.begin(), q.end(), 0U) != degree) return;
        if (p.terms().count(q) > 0) return;
        if (in_convex_hull(hull.vertices, q)) report.missing.push_back(q);
    };

    // Odometer over the bounding box. For homogeneous input the last coordinate
    // is pinned by the degree, so only the first dim-1 coordinates are enumerated.
    const std::size_t free_dims = homogeneous ? dim - 1 : dim;
    Exponent q = lo;
    while (true) {
        if (homogeneous) {
            unsigned partial = std::accumulate(q.begin(), q.begin() + static_cast<long>(free_dims), 0U);
            if (partial <= degree) {
                unsigned last = degree - partial;
                if (last >= lo[dim - 1] && last <= hi[dim - 1]) {
                    q[dim - 1] = last;
                    consider(q);
                }
            }
        } else {
            consider(q);
        }
        std::size_t i = 0;
        while (i < free_dims && q[i] == hi[i]) {
            q[i] = lo[i];
            ++i;
        }
        if (i == free_dims) break;
        ++q[i];
    }

    std::sort(report.missing.begin(), report.missing.end(), GrlexGreater{});
    report.saturated = report.missing.empty();
    return report;
}

}  // namespace treestab
