#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "sumlab/errors.hpp"
#include "sumlab/linalg.hpp"
#include "sumlab/point.hpp"
#include "sumlab/rational.hpp"

namespace sumlab {

/// A finite set of distinct points of Q^d. Iteration follows construction
/// order; equality is set equality.
class PointSet {
public:
    explicit PointSet(std::size_t dim = 1) : dim_(dim) {
        if (dim == 0) {
            throw DomainError("point set dimension must be positive");
        }
    }

    PointSet(std::size_t dim, std::vector<Point> points) : PointSet(dim) {
        points_.reserve(points.size());
        index_.reserve(points.size());
        for (auto& p : points) {
            insert_unique(std::move(p));
        }
    }

    /// Integer-coordinate convenience constructor; dimension taken from the
    /// first point.
    static PointSet of(std::initializer_list<Point> points) {
        if (points.size() == 0) {
            throw DomainError("PointSet::of needs at least one point to infer the dimension");
        }
        return PointSet(points.begin()->dim(), std::vector<Point>(points));
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const std::vector<Point>& points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }

    bool contains(const Point& p) const { return index_.count(p) != 0; }

    /// Points in lexicographic order.
    std::vector<Point> sorted_points() const {
        std::vector<Point> out = points_;
        std::sort(out.begin(), out.end());
        return out;
    }

    PointSet sorted() const { return PointSet(dim_, sorted_points()); }

    friend bool operator==(const PointSet& a, const PointSet& b) {
        if (a.dim_ != b.dim_ || a.size() != b.size()) {
            return false;
        }
        return std::all_of(a.begin(), a.end(), [&](const Point& p) { return b.contains(p); });
    }

private:
    void insert_unique(Point p) {
        if (p.dim() != dim_) {
            throw DimensionError("point has " + std::to_string(p.dim()) + " coordinates, set has dimension " +
                                 std::to_string(dim_));
        }
        if (!index_.insert(p).second) {
            throw DomainError("duplicate point in point set");
        }
        points_.push_back(std::move(p));
    }

    std::size_t dim_;
    std::vector<Point> points_;
    std::unordered_set<Point, PointHash> index_;
};

namespace detail {

inline void require_same_dim(const PointSet& a, const PointSet& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(op) + ": operands have dimensions " + std::to_string(a.dim()) + " and " +
                             std::to_string(b.dim()));
    }
}

inline void require_nonempty(const PointSet& a, const char* op) {
    if (a.empty()) {
        throw DomainError(std::string(op) + ": empty operand");
    }
}

template <typename Combine>
PointSet combine_pairs(const PointSet& a, const PointSet& b, Combine combine, const char* op) {
    require_same_dim(a, b, op);
    require_nonempty(a, op);
    require_nonempty(b, op);
    std::unordered_set<Point, PointHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& x : a) {
        for (const auto& y : b) {
            acc.insert(combine(x, y));
        }
    }
    std::vector<Point> out(acc.begin(), acc.end());
    std::sort(out.begin(), out.end());
    return PointSet(a.dim(), std::move(out));
}

}  // namespace detail

/// A + B, lexicographically ordered.
inline PointSet sumset(const PointSet& a, const PointSet& b) {
    return detail::combine_pairs(a, b, [](const Point& x, const Point& y) { return x + y; }, "sumset");
}

/// A - B, lexicographically ordered.
inline PointSet difference_set(const PointSet& a, const PointSet& b) {
    return detail::combine_pairs(a, b, [](const Point& x, const Point& y) { return x - y; }, "difference_set");
}

inline PointSet negate(const PointSet& a) {
    std::vector<Point> out;
    out.reserve(a.size());
    for (const auto& p : a) {
        out.push_back(-p);
    }
    return PointSet(a.dim(), std::move(out));
}

inline PointSet translate(const PointSet& a, const Point& t) {
    if (t.dim() != a.dim()) {
        throw DimensionError("translate: vector and set dimensions differ");
    }
    std::vector<Point> out;
    out.reserve(a.size());
    for (const auto& p : a) {
        out.push_back(p + t);
    }
    return PointSet(a.dim(), std::move(out));
}

inline PointSet scale(const PointSet& a, const Rational& c) {
    if (c == 0) {
        throw DomainError("scale: zero factor is not injective");
    }
    std::vector<Point> out;
    out.reserve(a.size());
    for (const auto& p : a) {
        out.push_back(c * p);
    }
    return PointSet(a.dim(), std::move(out));
}

/// Dimension of the affine span; 0 for a singleton.
inline std::size_t affine_dimension(const PointSet& a) {
    detail::require_nonempty(a, "affine_dimension");
    std::vector<Point> diffs;
    diffs.reserve(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) {
        diffs.push_back(a[i] - a[0]);
    }
    return linalg::rank(diffs);
}

/// x -> M x + t with M invertible.
class AffineMap {
public:
    AffineMap(linalg::Matrix matrix, Point translation)
        : matrix_(std::move(matrix)), translation_(std::move(translation)) {
        const std::size_t d = translation_.dim();
        if (matrix_.size() != d) {
            throw DimensionError("affine map: matrix and translation dimensions differ");
        }
        for (const auto& row : matrix_) {
            if (row.size() != d) {
                throw DimensionError("affine map: matrix is not square");
            }
        }
        if (linalg::determinant(matrix_) == 0) {
            throw DomainError("affine map: matrix is singular");
        }
    }

    static AffineMap identity(std::size_t d) { return AffineMap(linalg::identity(d), Point::zero(d)); }

    std::size_t dim() const { return translation_.dim(); }
    const linalg::Matrix& matrix() const { return matrix_; }
    const Point& translation() const { return translation_; }

    Point operator()(const Point& p) const { return linalg::multiply(matrix_, p) + translation_; }
    Point apply_linear(const Point& v) const { return linalg::multiply(matrix_, v); }

    AffineMap inverse() const {
        auto inv = linalg::inverse(matrix_);
        // Invertibility is a class invariant.
        return AffineMap(*inv, -linalg::multiply(*inv, translation_));
    }

    /// (this after other)(x) = this(other(x)).
    AffineMap after(const AffineMap& other) const {
        return AffineMap(linalg::multiply(matrix_, other.matrix_), (*this)(other.translation_));
    }

private:
    linalg::Matrix matrix_;
    Point translation_;
};

inline PointSet apply_affine(const PointSet& a, const AffineMap& t) {
    if (t.dim() != a.dim()) {
        throw DimensionError("apply_affine: map and set dimensions differ");
    }
    std::vector<Point> out;
    out.reserve(a.size());
    for (const auto& p : a) {
        out.push_back(t(p));
    }
    return PointSet(a.dim(), std::move(out));
}

}  // namespace sumlab
