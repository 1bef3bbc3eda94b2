#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "sumlab/errors.hpp"
#include "sumlab/rational.hpp"

namespace sumlab {

/// A point of Q^d with exact coordinates.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    explicit Point(const IntVector& coords) : coords_(coords.begin(), coords.end()) {}
    Point(std::initializer_list<long long> coords) {
        coords_.reserve(coords.size());
        for (long long c : coords) {
            coords_.emplace_back(c);
        }
    }

    static Point zero(std::size_t dim) { return Point(std::vector<Rational>(dim)); }

    /// The standard basis vector e_i, 1-based as in the usual notation.
    static Point unit(std::size_t dim, std::size_t i) {
        Point p = zero(dim);
        p.coords_.at(i - 1) = 1;
        return p;
    }

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    std::span<const Rational> coords() const { return coords_; }

    Point& operator+=(const Point& o) {
        check_dim(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            coords_[i] += o.coords_[i];
        }
        return *this;
    }
    Point& operator-=(const Point& o) {
        check_dim(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            coords_[i] -= o.coords_[i];
        }
        return *this;
    }
    Point& operator*=(const Rational& c) {
        for (auto& x : coords_) {
            x *= c;
        }
        return *this;
    }

    friend Point operator+(Point a, const Point& b) { return a += b; }
    friend Point operator-(Point a, const Point& b) { return a -= b; }
    friend Point operator*(const Rational& c, Point a) { return a *= c; }
    friend Point operator-(Point a) {
        for (auto& x : a.coords_) {
            x = -x;
        }
        return a;
    }

    friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
    friend bool operator<(const Point& a, const Point& b) {
        return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(),
                                            b.coords_.begin(), b.coords_.end());
    }

    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x == 0; });
    }
    bool is_integral() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return is_integer(x); });
    }

private:
    void check_dim(const Point& o) const {
        if (o.dim() != dim()) {
            throw DimensionError("point dimensions differ");
        }
    }

    std::vector<Rational> coords_;
};

inline Rational dot(const Point& a, const Point& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("dot: point dimensions differ");
    }
    Rational s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

template <typename Vec>
Rational dot(const Vec& v, const Point& p) {
    if (v.size() != p.dim()) {
        throw DimensionError("dot: vector and point dimensions differ");
    }
    Rational s = 0;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        s += Rational(v[i]) * p[i];
    }
    return s;
}

struct PointHash {
    std::size_t operator()(const Point& p) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL ^ p.dim();
        const std::hash<Rational> hr;
        for (const auto& x : p.coords()) {
            h ^= hr(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace sumlab
