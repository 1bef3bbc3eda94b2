#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumlab/bounds.hpp"
#include "sumlab/compression.hpp"
#include "sumlab/errors.hpp"
#include "sumlab/incidence.hpp"
#include "sumlab/pointset.hpp"
#include "sumlab/search.hpp"

// Interchange formats. Exact values are strings ("3", "-1/2"); objects use
// sorted keys so output is byte-stable.

namespace sumlab::io {

using json = nlohmann::json;

// ---- writing ----

inline json to_json(const Rational& r) { return to_string(r); }
inline json to_json(const Integer& z) { return to_string(z); }
inline json to_json(const Surd& s) { return to_string(s); }

inline json to_json(const Point& p) {
    json a = json::array();
    for (const auto& x : p.coords()) {
        a.push_back(to_string(x));
    }
    return a;
}

inline json int_vector_json(const IntVector& v) {
    json a = json::array();
    for (const auto& x : v) {
        a.push_back(to_string(x));
    }
    return a;
}

/// Points are written in lexicographic order.
inline json to_json(const PointSet& a) {
    json pts = json::array();
    for (const auto& p : a.sorted_points()) {
        pts.push_back(to_json(p));
    }
    return json{{"dim", a.dim()}, {"points", std::move(pts)}};
}

inline json to_json(const Direction& l) { return json{{"vec", int_vector_json(l.vec())}}; }

inline json to_json(const Hyperplane& h) {
    return json{{"normal", int_vector_json(h.normal())}, {"offset", to_string(h.offset())}};
}

inline json to_json(const AffineMap& t) {
    json m = json::array();
    for (const auto& row : t.matrix()) {
        json r = json::array();
        for (const auto& x : row) {
            r.push_back(to_string(x));
        }
        m.push_back(std::move(r));
    }
    return json{{"matrix", std::move(m)}, {"translation", to_json(t.translation())}};
}

inline json to_json(const PointMap& m) {
    json a = json::array();
    for (const auto& [pre, post] : m) {
        a.push_back(json::array({to_json(pre), to_json(post)}));
    }
    return a;
}

inline json to_json(const CompressionTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        steps.push_back(json{{"label", s.label},
                             {"hyperplane", to_json(s.spec.hyperplane())},
                             {"direction", json{{"vec", int_vector_json(s.spec.step())}}},
                             {"point_map", to_json(s.a_map)},
                             {"b_point_map", to_json(s.b_map)}});
    }
    return json{{"input_a", to_json(t.input_a)},
                {"input_b", to_json(t.input_b)},
                {"line", to_json(t.line)},
                {"initial_affine", t.initial_affine ? to_json(*t.initial_affine) : json(nullptr)},
                {"steps", std::move(steps)},
                {"output_a", to_json(t.output_a)},
                {"output_b", to_json(t.output_b)}};
}

inline json to_json(const ReductionCheck& c) {
    return json{{"sizes", c.sizes},
                {"sumset", c.sumset},
                {"line_count", c.line_count},
                {"dimension", c.dimension},
                {"common_hyperplane", c.common_hyperplane},
                {"isolated_point", c.isolated_point},
                {"sum_before", c.sum_before},
                {"sum_after", c.sum_after},
                {"all", c.all()}};
}

inline json to_json(const LinePartition& p) {
    json classes = json::array();
    for (const auto& c : p.classes) {
        json pts = json::array();
        for (const auto& q : c.points) {
            pts.push_back(to_json(q));
        }
        classes.push_back(json{{"key", to_json(c.key)}, {"points", std::move(pts)}, {"size", c.points.size()}});
    }
    return json{{"direction", to_json(p.direction)}, {"count", p.count()}, {"classes", std::move(classes)}};
}

inline json to_json(const ClaimReport& r) {
    return json{{"claim", claim_name(r.claim)},
                {"instance", r.instance},
                {"hypothesis_holds", r.hypothesis_holds},
                {"conclusion_holds", r.conclusion_holds},
                {"lhs", to_json(r.lhs)},
                {"rhs", to_json(r.rhs)},
                {"margin", to_json(r.margin)},
                {"verdict", verdict_name(r.verdict)},
                {"as_conjecture", r.as_conjecture}};
}

inline json to_json(const StructureReport& r) {
    return json{{"direction", to_json(r.direction)},
                {"line_count", r.line_count},
                {"major_hyperplane", to_json(r.major_hyperplane)},
                {"major_slice_sizes", r.major_slice_sizes},
                {"two_hyperplanes", r.two_hyperplanes},
                {"two_plane", r.two_plane ? to_json(*r.two_plane) : json(nullptr)},
                {"imbalance", r.imbalance},
                {"a1_line_sizes", r.a1_line_sizes},
                {"a2_line_sizes", r.a2_line_sizes},
                {"a1_in_d_minus_1_lines", r.a1_in_d_minus_1_lines},
                {"a1_line_spread", r.a1_line_spread},
                {"near_extremal", r.near_extremal}};
}

inline const char* mode_name(SearchMode m) { return m == SearchMode::Exhaustive ? "EXHAUSTIVE" : "RANDOM"; }

inline json to_json(const SearchSpec& s) {
    return json{{"d", s.d},
                {"n", s.n},
                {"box", s.box},
                {"mode", mode_name(s.mode)},
                {"trials", s.trials},
                {"seed", s.seed},
                {"claim", s.claim ? json(claim_name(*s.claim)) : json(nullptr)},
                {"as_conjecture", s.as_conjecture},
                {"require_full_dim", s.require_full_dim},
                {"prune", s.prune},
                {"canonical", s.canonical},
                {"budget", s.budget},
                {"max_witnesses", s.max_witnesses}};
}

inline json to_json(const SearchResult& r) {
    json w = json::array();
    for (const auto& ps : r.witnesses) {
        w.push_back(to_json(ps));
    }
    json v = json::array();
    for (const auto& x : r.violations) {
        v.push_back(json{{"trial", x.trial},
                         {"report", to_json(x.report)},
                         {"a", to_json(x.a)},
                         {"b", x.b ? to_json(*x.b) : json(nullptr)},
                         {"l", x.l ? to_json(*x.l) : json(nullptr)}});
    }
    return json{{"best_value", r.best_value},
                {"witnesses", std::move(w)},
                {"witnesses_total", r.witnesses_total},
                {"candidates_examined", r.candidates_examined},
                {"violations", std::move(v)},
                {"verdict_counts", r.verdict_counts},
                {"seed", r.seed}};
}

// ---- reading ----

namespace detail {

[[noreturn]] inline void fail(const std::string& what) { throw ParseError(what); }

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        fail(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

inline Rational rational_of(const json& j) {
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    fail("expected an exact number as a string, got " + j.dump());
}

inline std::vector<Rational> rationals_of(const json& j) {
    if (!j.is_array()) {
        fail("expected an array, got " + j.dump());
    }
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& x : j) {
        out.push_back(rational_of(x));
    }
    return out;
}

inline IntVector integers_of(const json& j) {
    IntVector out;
    for (const auto& r : rationals_of(j)) {
        if (!is_integer(r)) {
            fail("expected integer entries, got " + to_string(r));
        }
        out.push_back(numerator(r));
    }
    return out;
}

// Library validation errors inside a document are parse errors of that
// document.
template <typename F>
auto wrap(F f) {
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        fail(e.what());
    } catch (const json::exception& e) {
        fail(e.what());
    }
}

}  // namespace detail

inline Point point_from_json(const json& j) { return Point(detail::rationals_of(j)); }

inline PointSet point_set_from_json(const json& j) {
    return detail::wrap([&] {
        const json& dim = detail::field(j, "dim");
        if (!dim.is_number_integer() || dim.get<long long>() <= 0) {
            detail::fail("'dim' must be a positive integer");
        }
        const json& pts = detail::field(j, "points");
        if (!pts.is_array()) {
            detail::fail("'points' must be an array");
        }
        std::vector<Point> points;
        for (const auto& p : pts) {
            points.push_back(point_from_json(p));
        }
        return PointSet(dim.get<std::size_t>(), std::move(points));
    });
}

inline Direction direction_from_json(const json& j) {
    return detail::wrap([&] { return Direction(detail::integers_of(detail::field(j, "vec"))); });
}

inline Hyperplane hyperplane_from_json(const json& j) {
    return detail::wrap([&] {
        return Hyperplane(detail::rationals_of(detail::field(j, "normal")), detail::rational_of(detail::field(j, "offset")));
    });
}

inline AffineMap affine_from_json(const json& j) {
    return detail::wrap([&] {
        linalg::Matrix m;
        for (const auto& row : detail::field(j, "matrix")) {
            m.push_back(detail::rationals_of(row));
        }
        return AffineMap(std::move(m), Point(detail::rationals_of(detail::field(j, "translation"))));
    });
}

inline PointMap point_map_from_json(const json& j) {
    if (!j.is_array()) {
        detail::fail("point map must be an array of [pre, post] pairs");
    }
    PointMap out;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) {
            detail::fail("point map entries must be [pre, post] pairs");
        }
        out.emplace_back(point_from_json(pair[0]), point_from_json(pair[1]));
    }
    return out;
}

inline CompressionTrace trace_from_json(const json& j) {
    return detail::wrap([&] {
        CompressionTrace t{point_set_from_json(detail::field(j, "input_a")),
                           point_set_from_json(detail::field(j, "input_b")),
                           direction_from_json(detail::field(j, "line")),
                           std::nullopt,
                           {},
                           point_set_from_json(detail::field(j, "output_a")),
                           point_set_from_json(detail::field(j, "output_b"))};
        const json& aff = detail::field(j, "initial_affine");
        if (!aff.is_null()) {
            t.initial_affine = affine_from_json(aff);
        }
        for (const auto& s : detail::field(j, "steps")) {
            CompressionSpec spec(hyperplane_from_json(detail::field(s, "hyperplane")),
                                 detail::integers_of(detail::field(detail::field(s, "direction"), "vec")));
            t.steps.push_back(CompressionStep{detail::field(s, "label").get<std::string>(), std::move(spec),
                                              point_map_from_json(detail::field(s, "point_map")),
                                              point_map_from_json(detail::field(s, "b_point_map"))});
        }
        return t;
    });
}

inline SearchSpec search_spec_from_json(const json& j) {
    return detail::wrap([&] {
        SearchSpec s;
        s.d = detail::field(j, "d").get<std::size_t>();
        s.n = detail::field(j, "n").get<std::size_t>();
        s.box = detail::field(j, "box").get<int>();
        const std::string mode = detail::field(j, "mode").get<std::string>();
        if (mode == "EXHAUSTIVE") {
            s.mode = SearchMode::Exhaustive;
        } else if (mode == "RANDOM") {
            s.mode = SearchMode::Random;
        } else {
            detail::fail("unknown search mode '" + mode + "'");
        }
        s.trials = j.value("trials", std::uint64_t{0});
        s.seed = j.value("seed", std::uint64_t{0});
        if (j.contains("claim") && !j.at("claim").is_null()) {
            s.claim = parse_claim(j.at("claim").get<std::string>());
        }
        s.as_conjecture = j.value("as_conjecture", false);
        s.require_full_dim = j.value("require_full_dim", false);
        s.prune = j.value("prune", true);
        s.canonical = j.value("canonical", true);
        s.budget = j.value("budget", s.budget);
        s.max_witnesses = j.value("max_witnesses", s.max_witnesses);
        return s;
    });
}

inline json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace sumlab::io
