#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sumlab/errors.hpp"
#include "sumlab/incidence.hpp"
#include "sumlab/pointset.hpp"

namespace sumlab {

/// Compression onto `hyperplane` with step vector `step`. The step is used
/// as given (sign and length both matter), so it is not a Direction.
class CompressionSpec {
public:
    CompressionSpec(Hyperplane hyperplane, IntVector step) : hyperplane_(std::move(hyperplane)), step_(std::move(step)) {
        if (step_.size() != hyperplane_.dim()) {
            throw DimensionError("compression: step and hyperplane dimensions differ");
        }
        if (dot(hyperplane_.normal(), Point(step_)) == 0) {
            throw DomainError("compression: step vector is parallel to the hyperplane");
        }
    }

    const Hyperplane& hyperplane() const { return hyperplane_; }
    const IntVector& step() const { return step_; }
    std::size_t dim() const { return step_.size(); }

private:
    Hyperplane hyperplane_;
    IntVector step_;
};

/// Pre-image/image pairs, in the order of the input set.
using PointMap = std::vector<std::pair<Point, Point>>;

struct Compressed {
    PointSet image;
    PointMap map;
};

/// Each line parallel to the step meeting A in s points is replaced by
/// u, u + step, ..., u + (s-1) step, u its intersection with the hyperplane.
/// Points keep their order along the line.
inline Compressed compress(const PointSet& a, const CompressionSpec& spec) {
    if (spec.dim() != a.dim()) {
        throw DimensionError("compress: spec and set dimensions differ");
    }
    const Point v(spec.step());
    const Hyperplane& h = spec.hyperplane();
    const Rational nv = h.value(v);
    struct Entry {
        Rational tau;
        std::size_t index;
    };
    std::unordered_map<Point, std::vector<Entry>, PointHash> lines;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Point& p = a[i];
        Rational tau = (h.value(p) - h.offset()) / nv;
        lines[p - tau * v].push_back(Entry{std::move(tau), i});
    }
    std::vector<Point> image(a.size());
    for (auto& [u, entries] : lines) {
        std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.tau < y.tau; });
        for (std::size_t j = 0; j < entries.size(); ++j) {
            image[entries[j].index] = u + Rational(j) * v;
        }
    }
    PointMap map;
    map.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        map.emplace_back(a[i], image[i]);
    }
    return Compressed{PointSet(a.dim(), std::move(image)), std::move(map)};
}

inline std::pair<PointSet, PointSet> compress_pair(const PointSet& a, const PointSet& b,
                                                   const CompressionSpec& spec) {
    detail::require_same_dim(a, b, "compress_pair");
    detail::require_nonempty(a, "compress_pair");
    detail::require_nonempty(b, "compress_pair");
    return {compress(a, spec).image, compress(b, spec).image};
}

struct CompressionStep {
    std::string label;
    CompressionSpec spec;
    PointMap a_map;
    PointMap b_map;
};

/// Certificate for a reduction: replaying `initial_affine` and then `steps`
/// on the inputs reproduces the outputs.
struct CompressionTrace {
    PointSet input_a;
    PointSet input_b;
    Direction line;
    std::optional<AffineMap> initial_affine;
    std::vector<CompressionStep> steps;
    PointSet output_a;
    PointSet output_b;
};

struct Reduction {
    PointSet a;
    PointSet b;
    CompressionTrace trace;
    std::size_t lines = 0;                    // s
    std::vector<std::size_t> level_counts;    // loop variant, one entry per f-compression
};

/// Image of the line direction in the normalized frame of a trace.
inline Direction normalized_direction(const CompressionTrace& trace) {
    if (!trace.initial_affine) {
        return trace.line;
    }
    return Direction::of(trace.initial_affine->apply_linear(trace.line.as_point()));
}

/// True when x in A and 0 <= y <= x coordinatewise (integers) imply y in A.
inline bool is_down_closed(const PointSet& a) {
    for (const auto& p : a) {
        if (!p.is_integral()) {
            return false;
        }
        for (std::size_t i = 0; i < p.dim(); ++i) {
            if (p[i] < 0) {
                return false;
            }
            if (p[i] > 0) {
                std::vector<Rational> q(p.coords().begin(), p.coords().end());
                q[i] -= 1;
                if (!a.contains(Point(std::move(q)))) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace detail {

inline std::size_t distinct_values(const PointSet& a, std::size_t coord) {
    std::vector<Rational> vals;
    vals.reserve(a.size());
    for (const auto& p : a) {
        vals.push_back(p[coord]);
    }
    std::sort(vals.begin(), vals.end());
    return static_cast<std::size_t>(std::unique(vals.begin(), vals.end()) - vals.begin());
}

inline IntVector unit_int(std::size_t d, std::size_t i) {
    IntVector v(d);
    v.at(i - 1) = 1;
    return v;
}

// Affine map with l -> e_d axis and an affinely independent (d+1)-subset of
// A -> {0, e_1, ..., e_d}; two points of one l-line go to 0 and e_d.
inline AffineMap normalizing_map(const PointSet& a, const LinePartition& part) {
    const std::size_t d = a.dim();
    auto line = std::find_if(part.classes.begin(), part.classes.end(),
                             [](const LineClass& c) { return c.points.size() >= 2; });
    std::vector<Point> on_line = line->points;
    std::sort(on_line.begin(), on_line.end());
    const Point p0 = on_line[0];
    const Point p1 = on_line[1];

    std::vector<Point> cols{p1 - p0};
    for (const auto& q : a.sorted_points()) {
        if (cols.size() == d) {
            break;
        }
        auto trial = cols;
        trial.push_back(q - p0);
        if (linalg::rank(trial) > cols.size()) {
            cols = std::move(trial);
        }
    }
    // Columns e_1..e_{d-1} come from the greedy extension, e_d from the line.
    linalg::Matrix m(d, linalg::Row(d));
    for (std::size_t j = 0; j < d; ++j) {
        const Point& c = j + 1 < d ? cols[j + 1] : cols[0];
        for (std::size_t i = 0; i < d; ++i) {
            m[i][j] = c[i];
        }
    }
    const auto inv = linalg::inverse(m);
    if (!inv) {
        throw std::logic_error("reduce: greedy extension did not reach full rank");
    }
    return AffineMap(*inv, -linalg::multiply(*inv, p0));
}

}  // namespace detail

/// Constructive reduction: a sequence of compressions after which A has
/// exactly s lines parallel to the (normalized) l, s-1 of them on the
/// hyperplane x_{d-1} = 0 and the last one, e_{d-1} + R e_d, meeting A in the
/// single point e_{d-1}. B receives the same compressions.
///
/// Requires dim(A) = d >= 2 and s < |A|. For d = 2 only s = 2 is attainable
/// (two distinct parallel lines never share a line), so s > 2 is rejected.
inline Reduction reduce(const PointSet& a, const PointSet& b, const Direction& l) {
    detail::require_same_dim(a, b, "reduce");
    if (l.dim() != a.dim()) {
        throw DimensionError("reduce: direction and set dimensions differ");
    }
    detail::require_nonempty(a, "reduce");
    const std::size_t d = a.dim();
    if (d < 2) {
        throw DomainError("reduce: ambient dimension must be at least 2");
    }
    if (affine_dimension(a) != d) {
        throw DomainError("reduce: A is not full-dimensional");
    }
    const LinePartition part = line_partition(a, l);
    const std::size_t s = part.count();
    if (s == a.size()) {
        throw DomainError("reduce: no line parallel to l meets A in 2 points (s = |A|)");
    }
    if (d == 2 && s > 2) {
        throw DomainError("reduce: in dimension 2 the conclusion needs s = 2, got s = " + std::to_string(s));
    }

    const AffineMap normal_form = detail::normalizing_map(a, part);
    Reduction out{apply_affine(a, normal_form), apply_affine(b, normal_form),
                  CompressionTrace{a, b, l, normal_form, {}, PointSet(d), PointSet(d)}, s, {}};

    auto apply = [&](std::string label, const Hyperplane& h, IntVector step) {
        CompressionSpec spec(h, std::move(step));
        auto ca = compress(out.a, spec);
        auto cb = compress(out.b, spec);
        out.a = std::move(ca.image);
        out.b = std::move(cb.image);
        out.trace.steps.push_back(CompressionStep{std::move(label), std::move(spec), std::move(ca.map),
                                                  std::move(cb.map)});
    };

    // A_2 = P_1(P_2(... P_{d-1}(P_d(A)) ...)).
    for (std::size_t i = d; i >= 1; --i) {
        apply("coordinate e" + std::to_string(i), Hyperplane::coordinate(d, i), detail::unit_int(d, i));
    }
    if (!is_down_closed(out.a)) {
        throw std::logic_error("reduce: coordinate compressions did not produce a down-set");
    }

    const std::size_t level_coord = d - 2;  // x_{d-1}
    const Hyperplane h_level = Hyperplane::coordinate(d, d - 1);
    while (true) {
        const std::size_t levels = detail::distinct_values(out.a, level_coord);
        // w in A with w_{d-1} = w_d = 0 maximizing w_1 + ... + w_{d-2};
        // ties go to the lexicographically largest.
        const Point* w = nullptr;
        Rational w_sum = -1;
        for (const auto& p : out.a) {
            if (p[d - 2] != 0 || p[d - 1] != 0) {
                continue;
            }
            Rational sum = 0;
            for (std::size_t i = 0; i + 2 < d; ++i) {
                sum += p[i];
            }
            if (w == nullptr || sum > w_sum || (sum == w_sum && *w < p)) {
                w = &p;
                w_sum = sum;
            }
        }
        IntVector f = detail::unit_int(d, d - 1);
        for (std::size_t i = 0; i < d; ++i) {
            f[i] -= numerator((*w)[i]);
        }
        apply("level f", h_level, std::move(f));
        out.level_counts.push_back(levels);
        if (levels <= 2) {
            break;
        }
        if (detail::distinct_values(out.a, level_coord) >= levels) {
            throw std::logic_error("reduce: level compression did not reduce the number of hyperplanes");
        }
    }

    // r = largest integer with r e_d in A, then g = e_{d-1} - r e_d.
    Integer r = 0;
    for (const auto& p : out.a) {
        bool on_axis = true;
        for (std::size_t i = 0; i + 1 < d; ++i) {
            on_axis = on_axis && p[i] == 0;
        }
        if (on_axis && p[d - 1] > r) {
            r = numerator(p[d - 1]);
        }
    }
    IntVector g = detail::unit_int(d, d - 1);
    g[d - 1] = -r;
    apply("final g", h_level, std::move(g));

    out.trace.output_a = out.a;
    out.trace.output_b = out.b;
    return out;
}

/// The six reduction properties, each recomputed from scratch in the
/// normalized frame.
struct ReductionCheck {
    bool sizes = false;              // |A'| = |A|, |B'| = |B|
    bool sumset = false;             // |A' + B'| <= |A + B|
    bool line_count = false;         // exactly s lines parallel to l
    bool dimension = false;          // dim A' = d
    bool common_hyperplane = false;  // s-1 of the lines lie on a hyperplane
    bool isolated_point = false;     // ... and the remaining line meets A' once
    std::size_t sum_before = 0;
    std::size_t sum_after = 0;

    bool all() const { return sizes && sumset && line_count && dimension && common_hyperplane && isolated_point; }
};

inline ReductionCheck check_reduction(const PointSet& a, const PointSet& b, const Reduction& red) {
    ReductionCheck c;
    const std::size_t d = a.dim();
    const Direction l = normalized_direction(red.trace);
    const std::size_t s = count_lines(a, red.trace.line);

    c.sizes = red.a.size() == a.size() && red.b.size() == b.size();
    if (!b.empty()) {
        c.sum_before = sumset(a, b).size();
        c.sum_after = red.b.empty() ? 0 : sumset(red.a, red.b).size();
    }
    c.sumset = c.sum_after <= c.sum_before;

    const LinePartition part = line_partition(red.a, l);
    c.line_count = part.count() == s;
    c.dimension = affine_dimension(red.a) == d;

    for (std::size_t k = 0; k < part.count(); ++k) {
        std::vector<Point> vecs{l.as_point()};
        const Point* base = nullptr;
        for (std::size_t j = 0; j < part.count(); ++j) {
            if (j == k) {
                continue;
            }
            for (const auto& p : part.classes[j].points) {
                if (base == nullptr) {
                    base = &p;
                } else {
                    vecs.push_back(p - *base);
                }
            }
        }
        if (linalg::rank(vecs) <= d - 1) {
            c.common_hyperplane = true;
            if (part.classes[k].points.size() == 1) {
                c.isolated_point = true;
            }
        }
    }
    return c;
}

/// Maps a reduction's outputs back through the inverse normalizing map.
inline std::pair<PointSet, PointSet> to_original_frame(const Reduction& red) {
    if (!red.trace.initial_affine) {
        return {red.a, red.b};
    }
    const AffineMap back = red.trace.initial_affine->inverse();
    return {apply_affine(red.a, back), apply_affine(red.b, back)};
}

namespace detail {

inline PointMap sorted_map(PointMap m) {
    std::sort(m.begin(), m.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return m;
}

}  // namespace detail

struct ReplayReport {
    bool ok = false;
    std::size_t steps_checked = 0;
    std::string message;
};

/// Recomputes every step of a trace and compares it with the recorded maps
/// and outputs.
inline ReplayReport replay(const CompressionTrace& trace) {
    ReplayReport rep;
    PointSet a = trace.initial_affine ? apply_affine(trace.input_a, *trace.initial_affine) : trace.input_a;
    PointSet b = trace.initial_affine ? apply_affine(trace.input_b, *trace.initial_affine) : trace.input_b;
    for (const auto& step : trace.steps) {
        auto ca = compress(a, step.spec);
        auto cb = compress(b, step.spec);
        if (detail::sorted_map(ca.map) != detail::sorted_map(step.a_map) ||
            detail::sorted_map(cb.map) != detail::sorted_map(step.b_map)) {
            rep.message = "step " + std::to_string(rep.steps_checked) + " (" + step.label + ") point map differs";
            return rep;
        }
        a = std::move(ca.image);
        b = std::move(cb.image);
        ++rep.steps_checked;
    }
    if (!(a == trace.output_a) || !(b == trace.output_b)) {
        rep.message = "replayed output differs from recorded output";
        return rep;
    }
    rep.ok = true;
    rep.message = "ok";
    return rep;
}

}  // namespace sumlab
