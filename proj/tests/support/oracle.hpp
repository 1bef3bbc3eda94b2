#pragma once

// Brute-force reference computations on small integer point sets. Nothing
// here uses the library: plain long long coordinates, std::set, and
// definitions applied literally.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using IPoint = std::vector<long long>;
using ISet = std::vector<IPoint>;

inline std::set<IPoint> sums(const ISet& a, const ISet& b) {
    std::set<IPoint> out;
    for (const auto& x : a) {
        for (const auto& y : b) {
            IPoint z(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) {
                z[i] = x[i] + y[i];
            }
            out.insert(z);
        }
    }
    return out;
}

inline std::set<IPoint> diffs(const ISet& a, const ISet& b) {
    std::set<IPoint> out;
    for (const auto& x : a) {
        for (const auto& y : b) {
            IPoint z(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) {
                z[i] = x[i] - y[i];
            }
            out.insert(z);
        }
    }
    return out;
}

// u parallel to v iff every 2x2 minor vanishes.
inline bool parallel(const IPoint& u, const IPoint& v) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            if (u[i] * v[j] - u[j] * v[i] != 0) {
                return false;
            }
        }
    }
    return true;
}

inline IPoint minus(const IPoint& a, const IPoint& b) {
    IPoint z(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        z[i] = a[i] - b[i];
    }
    return z;
}

// Number of lines parallel to l meeting A, via pairwise parallel tests.
inline std::size_t line_count(const ISet& a, const IPoint& l) {
    std::vector<std::size_t> comp(a.size());
    std::iota(comp.begin(), comp.end(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (parallel(minus(a[i], a[j]), l)) {
                comp[i] = comp[j];
                break;
            }
        }
    }
    std::set<std::size_t> roots(comp.begin(), comp.end());
    return roots.size();
}

// Minimum over every nonzero integer direction with entries in [-r, r].
inline std::size_t min_line_cover_box(const ISet& a, long long r) {
    const std::size_t d = a.front().size();
    std::size_t best = a.size();
    IPoint l(d, -r);
    while (true) {
        if (std::any_of(l.begin(), l.end(), [](long long x) { return x != 0; })) {
            best = std::min(best, line_count(a, l));
        }
        std::size_t k = 0;
        while (k < d && l[k] == r) {
            l[k] = -r;
            ++k;
        }
        if (k == d) {
            break;
        }
        ++l[k];
    }
    return best;
}

// Fraction-free rank of integer row vectors.
inline std::size_t rank(std::vector<IPoint> m) {
    if (m.empty()) {
        return 0;
    }
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            const long long f = m[i][c];
            const long long g = m[r][c];
            for (std::size_t j = 0; j < cols; ++j) {
                m[i][j] = m[i][j] * g - m[r][j] * f;
            }
            long long h = 0;
            for (auto x : m[i]) {
                h = std::gcd(h, std::llabs(x));
            }
            if (h > 1) {
                for (auto& x : m[i]) {
                    x /= h;
                }
            }
        }
        ++r;
    }
    return r;
}

inline std::size_t affine_dim(const ISet& a) {
    std::vector<IPoint> rows;
    for (std::size_t i = 1; i < a.size(); ++i) {
        rows.push_back(minus(a[i], a[0]));
    }
    return rank(rows);
}

// Compression with an integer hyperplane normal.x = offset and integer step
// v, applied by scanning every point for its line-mates. Returns images in
// input order as fractions num/den with den = normal.v.
struct FracPoint {
    std::vector<long long> num;
    long long den;
};

inline long long idot(const IPoint& a, const IPoint& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

inline std::vector<FracPoint> compress(const ISet& a, const IPoint& normal, long long offset, const IPoint& v) {
    const long long nv = idot(normal, v);
    std::vector<FracPoint> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        // points of A on the line through a[i] parallel to v
        std::vector<std::pair<long long, std::size_t>> mates;  // (normal.p, index)
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (parallel(minus(a[j], a[i]), v)) {
                mates.emplace_back(idot(normal, a[j]) * (nv > 0 ? 1 : -1), j);
            }
        }
        std::sort(mates.begin(), mates.end());
        std::size_t rank_on_line = 0;
        while (mates[rank_on_line].second != i) {
            ++rank_on_line;
        }
        // u = p - ((normal.p - offset)/nv) v ; image = u + rank v
        FracPoint f{IPoint(a[i].size()), nv};
        const long long t = idot(normal, a[i]) - offset;
        for (std::size_t k = 0; k < a[i].size(); ++k) {
            f.num[k] = a[i][k] * nv - t * v[k] + static_cast<long long>(rank_on_line) * v[k] * nv;
        }
        out[i] = f;
    }
    return out;
}

}  // namespace oracle
