#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sumlab/errors.hpp"
#include "sumlab/pointset.hpp"

// Generators for the extremal and witness families. All emit integer
// coordinates in a fixed order.

namespace sumlab {

namespace detail {

inline void require_param(bool ok, const std::string& what) {
    if (!ok) {
        throw DomainError("construction parameter out of range: " + what);
    }
}

inline Point scaled_unit(std::size_t d, std::size_t i, long long c) {
    Point p = Point::unit(d, i);
    p *= Rational(c);
    return p;
}

}  // namespace detail

/// A_k = (T u (a_k - T)) + P_k with T = {0, e_1, ..., e_{d-2}},
/// a_k = e_d - k e_{d-1} and P_k = {0, e_{d-1}, ..., (k-1) e_{d-1}}.
inline PointSet stanchescu_dk(int d, int k) {
    detail::require_param(d >= 2, "stanchescu_dk needs d >= 2");
    detail::require_param(k >= 1, "stanchescu_dk needs k >= 1");
    const auto dim = static_cast<std::size_t>(d);
    std::vector<Point> base{Point::zero(dim)};
    for (std::size_t i = 1; i + 2 <= dim; ++i) {
        base.push_back(Point::unit(dim, i));
    }
    const Point a_k = Point::unit(dim, dim) - detail::scaled_unit(dim, dim - 1, k);
    const std::size_t t_size = base.size();
    for (std::size_t i = 0; i < t_size; ++i) {
        base.push_back(a_k - base[i]);
    }
    std::vector<Point> pts;
    pts.reserve(base.size() * static_cast<std::size_t>(k));
    for (const auto& t : base) {
        for (int j = 0; j < k; ++j) {
            pts.push_back(t + detail::scaled_unit(dim, dim - 1, j));
        }
    }
    return PointSet(dim, std::move(pts));
}

/// Union of parallel APs along e_d starting at 0, e_1, ..., e_{d-1}; for
/// d = 1 a single AP along e_1.
inline PointSet freiman_aps(int d, const std::vector<int>& lengths) {
    detail::require_param(d >= 1, "freiman_aps needs d >= 1");
    detail::require_param(lengths.size() == static_cast<std::size_t>(d), "freiman_aps needs d lengths");
    const auto dim = static_cast<std::size_t>(d);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < dim; ++i) {
        detail::require_param(lengths[i] >= 1, "freiman_aps lengths must be positive");
        const Point b = i == 0 ? Point::zero(dim) : Point::unit(dim, i);
        for (int j = 0; j < lengths[i]; ++j) {
            pts.push_back(b + detail::scaled_unit(dim, dim, j));
        }
    }
    return PointSet(dim, std::move(pts));
}

/// A_0 u {e_3, ..., e_d} with A_0 = {i e_1 + j e_2 : 0 <= i < n, 0 <= j <= 2}.
inline PointSet stan_doubling_tight(int d, int n) {
    detail::require_param(d >= 2, "stan_doubling_tight needs d >= 2");
    detail::require_param(n >= 1, "stan_doubling_tight needs n >= 1");
    const auto dim = static_cast<std::size_t>(d);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= 2; ++j) {
            pts.push_back(detail::scaled_unit(dim, 1, i) + detail::scaled_unit(dim, 2, j));
        }
    }
    for (std::size_t i = 3; i <= dim; ++i) {
        pts.push_back(Point::unit(dim, i));
    }
    return PointSet(dim, std::move(pts));
}

/// d parallel APs along e_d on the base points 0, e_1, ..., e_{d-1} of the
/// hyperplane x_d = 0; any k of the base points are affinely independent.
inline PointSet dlines_general_position(int d, const std::vector<int>& lengths) {
    detail::require_param(d >= 2, "dlines_general_position needs d >= 2");
    return freiman_aps(d, lengths);
}

enum class ConstructionKind { StanchescuDk, FreimanAps, StanDoublingTight, DlinesGeneralPosition };

struct ConstructionId {
    ConstructionKind kind;
    std::map<std::string, std::vector<int>> params;  // "d", "k", "n", "lengths"
};

inline const char* construction_name(ConstructionKind k) {
    switch (k) {
        case ConstructionKind::StanchescuDk:
            return "STANCHESCU_DK";
        case ConstructionKind::FreimanAps:
            return "FREIMAN_APS";
        case ConstructionKind::StanDoublingTight:
            return "STAN_DOUBLING_TIGHT";
        case ConstructionKind::DlinesGeneralPosition:
            return "DLINES_GENERAL_POSITION";
    }
    return "";
}

inline PointSet build(const ConstructionId& id) {
    auto scalar = [&](const std::string& key) {
        auto it = id.params.find(key);
        if (it == id.params.end() || it->second.size() != 1) {
            throw DomainError(std::string(construction_name(id.kind)) + " needs integer parameter '" + key + "'");
        }
        return it->second.front();
    };
    auto list = [&](const std::string& key) {
        auto it = id.params.find(key);
        if (it == id.params.end()) {
            throw DomainError(std::string(construction_name(id.kind)) + " needs list parameter '" + key + "'");
        }
        return it->second;
    };
    switch (id.kind) {
        case ConstructionKind::StanchescuDk:
            return stanchescu_dk(scalar("d"), scalar("k"));
        case ConstructionKind::FreimanAps:
            return freiman_aps(scalar("d"), list("lengths"));
        case ConstructionKind::StanDoublingTight:
            return stan_doubling_tight(scalar("d"), scalar("n"));
        case ConstructionKind::DlinesGeneralPosition:
            return dlines_general_position(scalar("d"), list("lengths"));
    }
    throw DomainError("unknown construction");
}

}  // namespace sumlab
