#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "sumlab/errors.hpp"
#include "sumlab/hull.hpp"
#include "sumlab/linalg.hpp"
#include "sumlab/pointset.hpp"

namespace sumlab {

/// A line direction: primitive integer vector whose first nonzero entry is
/// positive, so each direction has exactly one representation.
class Direction {
public:
    explicit Direction(IntVector v) : vec_(std::move(v)) {
        std::vector<Rational> r(vec_.begin(), vec_.end());
        vec_ = primitive_integer_vector(r);
        sign_normalize(vec_);
    }

    /// Direction of a nonzero rational vector.
    static Direction of(const Point& v) {
        std::vector<Rational> r(v.coords().begin(), v.coords().end());
        return Direction(primitive_integer_vector(r));
    }

    static Direction axis(std::size_t dim, std::size_t i) {
        IntVector v(dim);
        v.at(i - 1) = 1;
        return Direction(std::move(v));
    }

    std::size_t dim() const { return vec_.size(); }
    const IntVector& vec() const { return vec_; }
    Point as_point() const { return Point(vec_); }

    friend bool operator==(const Direction& a, const Direction& b) { return a.vec_ == b.vec_; }
    friend bool operator<(const Direction& a, const Direction& b) { return a.vec_ < b.vec_; }

private:
    IntVector vec_;
};

/// {x : normal . x = offset}, normal primitive and sign-canonical.
class Hyperplane {
public:
    Hyperplane(const std::vector<Rational>& normal, const Rational& offset) {
        const Integer l = lcm_of_denominators(normal);
        Integer g = 0;
        normal_.reserve(normal.size());
        for (const auto& v : normal) {
            Integer z = numerator(v) * (l / denominator(v));
            g = gcd(g, abs(z));
            normal_.push_back(std::move(z));
        }
        if (g == 0) {
            throw DomainError("hyperplane normal must be nonzero");
        }
        for (auto& z : normal_) {
            z /= g;
        }
        offset_ = offset * Rational(l) / Rational(g);
        if (sign_normalize(normal_)) {
            offset_ = -offset_;
        }
    }

    Hyperplane(const IntVector& normal, const Rational& offset)
        : Hyperplane(std::vector<Rational>(normal.begin(), normal.end()), offset) {}

    static Hyperplane through(const IntVector& normal, const Point& p) {
        return Hyperplane(normal, dot(normal, p));
    }

    /// x_i = c, 1-based.
    static Hyperplane coordinate(std::size_t dim, std::size_t i, const Rational& c = 0) {
        IntVector n(dim);
        n.at(i - 1) = 1;
        return Hyperplane(n, c);
    }

    std::size_t dim() const { return normal_.size(); }
    const IntVector& normal() const { return normal_; }
    const Rational& offset() const { return offset_; }

    Rational value(const Point& p) const { return dot(normal_, p); }
    bool contains(const Point& p) const { return value(p) == offset_; }
    bool parallel_to(const Direction& l) const { return dot(normal_, l.as_point()) == 0; }

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
        return a.normal_ == b.normal_ && a.offset_ == b.offset_;
    }
    friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
        if (a.normal_ != b.normal_) {
            return a.normal_ < b.normal_;
        }
        return a.offset_ < b.offset_;
    }

private:
    IntVector normal_;
    Rational offset_;
};

/// One line parallel to the partition direction, with the points of the set
/// on it ordered along the direction.
struct LineClass {
    Point key;  // orthogonal projection of the line onto direction-perp
    std::vector<Point> points;
};

struct LinePartition {
    Direction direction;
    std::vector<LineClass> classes;  // ordered by key

    std::size_t count() const { return classes.size(); }
};

/// Exact orthogonal projection of p along l: p - ((p.l)/(l.l)) l.
inline Point project_along(const Point& p, const Direction& l) {
    const Point v = l.as_point();
    return p - (dot(p, v) / dot(v, v)) * v;
}

inline LinePartition line_partition(const PointSet& a, const Direction& l) {
    if (l.dim() != a.dim()) {
        throw DimensionError("line_partition: direction and set dimensions differ");
    }
    detail::require_nonempty(a, "line_partition");
    const Point v = l.as_point();
    std::unordered_map<Point, std::vector<Point>, PointHash> groups;
    for (const auto& p : a) {
        groups[project_along(p, l)].push_back(p);
    }
    LinePartition out{l, {}};
    out.classes.reserve(groups.size());
    for (auto& [key, pts] : groups) {
        std::sort(pts.begin(), pts.end(),
                  [&](const Point& x, const Point& y) { return dot(x, v) < dot(y, v); });
        out.classes.push_back(LineClass{key, std::move(pts)});
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const LineClass& x, const LineClass& y) { return x.key < y.key; });
    return out;
}

inline std::size_t count_lines(const PointSet& a, const Direction& l) { return line_partition(a, l).count(); }

struct LineCover {
    Direction direction;
    std::size_t count;
};

/// Fewest parallel lines covering A. Only directions of pairwise differences
/// are candidates: an optimal family with fewer than |A| lines has a line
/// holding two points, and any pair already gives at most |A| - 1 lines.
/// Ties go to the lexicographically smallest direction.
inline LineCover min_line_cover(const PointSet& a) {
    if (a.size() < 2) {
        throw DomainError("min_line_cover: need at least 2 points");
    }
    // For each direction, the points that share a line with an earlier point;
    // the class count is |A| minus their number.
    std::map<Direction, std::set<std::size_t>> followers;
    for (std::size_t j = 1; j < a.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            followers[Direction::of(a[j] - a[i])].insert(j);
        }
    }
    const auto best = std::max_element(followers.begin(), followers.end(), [](const auto& x, const auto& y) {
        return x.second.size() < y.second.size();
    });
    return LineCover{best->first, a.size() - best->second.size()};
}

/// True when the partition's lines are in general position: no k of them lie
/// in a (k-1)-dimensional affine subspace.
inline bool lines_in_general_position(const LinePartition& part) {
    const std::size_t m = part.count();
    if (m == 0 || m - 1 >= part.direction.dim()) {
        return m == 1;
    }
    std::vector<Point> vecs{part.direction.as_point()};
    const Point& base = part.classes.front().points.front();
    for (std::size_t i = 1; i < m; ++i) {
        vecs.push_back(part.classes[i].points.front() - base);
    }
    return linalg::rank(vecs) == m;
}

/// +1 if A lies in {normal.x >= offset}, -1 if in {normal.x <= offset} (and
/// not inside H), 0 if A is contained in H, nullopt if H separates A.
inline std::optional<int> supporting_side(const PointSet& a, const Hyperplane& h) {
    bool above = false;
    bool below = false;
    for (const auto& p : a) {
        const Rational v = h.value(p);
        above |= v > h.offset();
        below |= v < h.offset();
    }
    if (above && below) {
        return std::nullopt;
    }
    return above ? 1 : (below ? -1 : 0);
}

/// Hyperplanes parallel to l that support A along a facet of the hull of the
/// projection of A along l. Sorted by (normal, offset).
inline std::vector<Hyperplane> supporting_hyperplanes(const PointSet& a, const Direction& l) {
    if (l.dim() != a.dim()) {
        throw DimensionError("supporting_hyperplanes: direction and set dimensions differ");
    }
    detail::require_nonempty(a, "supporting_hyperplanes");
    const std::size_t d = a.dim();
    const std::size_t m = d - 1;
    if (m == 0) {
        throw DomainError("supporting_hyperplanes: A projects to a single point");
    }
    linalg::Matrix lrow{linalg::Row(l.vec().begin(), l.vec().end())};
    const auto basis = linalg::null_space(lrow, d);  // basis of l-perp

    std::set<linalg::Row> projected;
    for (const auto& p : a) {
        linalg::Row y(m);
        for (std::size_t i = 0; i < m; ++i) {
            y[i] = dot(basis[i], p);
        }
        projected.insert(std::move(y));
    }
    if (projected.size() == 1) {
        throw DomainError("supporting_hyperplanes: A projects to a single point");
    }
    std::vector<linalg::Row> ys(projected.begin(), projected.end());
    {
        linalg::Matrix diffs;
        for (std::size_t i = 1; i < ys.size(); ++i) {
            linalg::Row r(m);
            for (std::size_t j = 0; j < m; ++j) {
                r[j] = ys[i][j] - ys[0][j];
            }
            diffs.push_back(std::move(r));
        }
        if (linalg::rank(std::move(diffs)) < m) {
            throw DomainError(
                "supporting_hyperplanes: projection of A along l is not full-dimensional, supporting "
                "hyperplanes are not determined by facets");
        }
    }
    std::set<Hyperplane> out;
    for (const auto& f : hull::facets(ys, m)) {
        std::vector<Rational> normal(d);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                normal[j] += f.normal[i] * basis[i][j];
            }
        }
        out.insert(Hyperplane(normal, f.offset));
    }
    return {out.begin(), out.end()};
}

inline std::size_t incidence_count(const PointSet& a, const Hyperplane& h) {
    return static_cast<std::size_t>(
        std::count_if(a.begin(), a.end(), [&](const Point& p) { return h.contains(p); }));
}

/// Supporting hyperplane parallel to l with the most points of A; ties go to
/// the smallest (normal, offset).
inline Hyperplane major_hyperplane(const PointSet& a, const Direction& l) {
    const auto planes = supporting_hyperplanes(a, l);
    std::size_t best = 0;
    std::size_t best_count = incidence_count(a, planes.front());
    for (std::size_t i = 1; i < planes.size(); ++i) {
        const std::size_t c = incidence_count(a, planes[i]);
        if (c > best_count) {
            best = i;
            best_count = c;
        }
    }
    return planes[best];
}

struct Slice {
    Hyperplane plane;
    PointSet points;
};

/// A cut into the translates of H that meet it. Slices run from H into the
/// set: ascending normal.x when A is on the >= side of H, descending when on
/// the <= side, ascending otherwise.
inline std::vector<Slice> hyperplane_slices(const PointSet& a, const Hyperplane& h) {
    if (h.dim() != a.dim()) {
        throw DimensionError("hyperplane_slices: hyperplane and set dimensions differ");
    }
    detail::require_nonempty(a, "hyperplane_slices");
    std::map<Rational, std::vector<Point>> levels;
    for (const auto& p : a) {
        levels[h.value(p)].push_back(p);
    }
    const bool descending = levels.rbegin()->first <= h.offset() && levels.begin()->first < h.offset();
    std::vector<Slice> out;
    auto emit = [&](const Rational& value, std::vector<Point>& pts) {
        out.push_back(Slice{Hyperplane(h.normal(), value), PointSet(a.dim(), std::move(pts))});
    };
    if (descending) {
        for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
            emit(it->first, it->second);
        }
    } else {
        for (auto& [value, pts] : levels) {
            emit(value, pts);
        }
    }
    return out;
}

}  // namespace sumlab
