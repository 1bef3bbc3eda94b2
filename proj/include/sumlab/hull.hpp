#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "sumlab/errors.hpp"
#include "sumlab/linalg.hpp"
#include "sumlab/rational.hpp"

// Facets of the convex hull of a full-dimensional finite set in Q^m.

namespace sumlab::hull {

using linalg::Row;

/// Outward facet inequality: normal . y <= offset on the whole set, with
/// equality on the facet.
struct Facet {
    Row normal;
    Rational offset;
};

namespace detail {

inline Rational row_dot(const Row& a, const Row& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

inline std::vector<Facet> facets_1d(const std::vector<Row>& pts) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(),
                                        [](const Row& a, const Row& b) { return a[0] < b[0]; });
    return {Facet{Row{Rational(-1)}, -(*lo)[0]}, Facet{Row{Rational(1)}, (*hi)[0]}};
}

inline Rational cross(const Row& o, const Row& a, const Row& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; collinear boundary points are dropped so each
// edge of the returned polygon is a distinct facet.
inline std::vector<Facet> facets_2d(std::vector<Row> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<Row> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) {
            --k;
        }
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) {
            --k;
        }
        h[k++] = pts[i];
    }
    h.resize(k - 1);  // counter-clockwise, last point repeats the first
    std::vector<Facet> out;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Row& p = h[i];
        const Row& q = h[(i + 1) % h.size()];
        Row normal{q[1] - p[1], p[0] - q[0]};
        Rational offset = row_dot(normal, p);
        out.push_back(Facet{std::move(normal), std::move(offset)});
    }
    return out;
}

// Enumerates m-subsets; adequate for the small point counts this is used on.
inline std::vector<Facet> facets_brute_force(const std::vector<Row>& pts, std::size_t m) {
    std::map<std::pair<IntVector, Rational>, Facet> found;
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) {
        idx[i] = i;
    }
    const std::size_t n = pts.size();
    while (true) {
        linalg::Matrix diffs;
        for (std::size_t i = 1; i < m; ++i) {
            Row r(m);
            for (std::size_t j = 0; j < m; ++j) {
                r[j] = pts[idx[i]][j] - pts[idx[0]][j];
            }
            diffs.push_back(std::move(r));
        }
        auto ns = linalg::null_space(diffs, m);
        if (ns.size() == 1) {
            Row normal = ns.front();
            Rational offset = row_dot(normal, pts[idx[0]]);
            bool any_above = false;
            bool any_below = false;
            for (const auto& p : pts) {
                const Rational v = row_dot(normal, p);
                any_above |= v > offset;
                any_below |= v < offset;
            }
            if (!(any_above && any_below)) {
                if (any_above) {
                    for (auto& x : normal) {
                        x = -x;
                    }
                    offset = -offset;
                }
                // Identify the facet by its primitive outward normal.
                IntVector key = primitive_integer_vector(normal);
                std::size_t lead = 0;
                while (key[lead] == 0) {
                    ++lead;
                }
                const Rational ratio = Rational(key[lead]) / normal[lead];
                found.emplace(std::make_pair(key, offset * ratio), Facet{normal, offset});
            }
        }
        // Next combination.
        std::size_t pos = m;
        while (pos > 0 && idx[pos - 1] == n - m + (pos - 1)) {
            --pos;
        }
        if (pos == 0) {
            break;
        }
        ++idx[pos - 1];
        for (std::size_t j = pos; j < m; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
    std::vector<Facet> out;
    out.reserve(found.size());
    for (auto& [key, facet] : found) {
        out.push_back(std::move(facet));
    }
    return out;
}

}  // namespace detail

/// Requires distinct points whose affine span is all of Q^m, m >= 1.
inline std::vector<Facet> facets(const std::vector<Row>& points, std::size_t m) {
    if (m == 0 || points.size() < m + 1) {
        throw DomainError("hull: too few points for a full-dimensional hull");
    }
    switch (m) {
        case 1:
            return detail::facets_1d(points);
        case 2:
            return detail::facets_2d(points);
        default:
            return detail::facets_brute_force(points, m);
    }
}

}  // namespace sumlab::hull
