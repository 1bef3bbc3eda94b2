#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumlab/errors.hpp"
#include "sumlab/incidence.hpp"
#include "sumlab/pointset.hpp"
#include "sumlab/surd.hpp"

namespace sumlab {

enum class ClaimId {
    FreimanSum,
    FhuDiff,
    RuzsaAsym,
    GsLines,
    LemmaBase2d,
    AsymThm,
    StanDoubling,
    Dlines,
    Twoplanes1,
    Lines4d,
    Main,
};

enum class Operand { Forbidden, Optional, Required };

struct ClaimInfo {
    ClaimId id;
    const char* name;
    Operand b;
    Operand line;
    int fixed_dim;  // 0 when any d is allowed
    int min_dim;
    const char* statement;
};

inline const std::array<ClaimInfo, 11>& claim_catalog() {
    static const std::array<ClaimInfo, 11> catalog{{
        {ClaimId::FreimanSum, "FREIMAN_SUM", Operand::Forbidden, Operand::Forbidden, 0, 1,
         "dim A = d  =>  |A+A| >= (d+1)|A| - d(d+1)/2"},
        {ClaimId::FhuDiff, "FHU_DIFF", Operand::Forbidden, Operand::Forbidden, 0, 1,
         "dim A = d  =>  |A-A| >= (d+1)|A| - d(d+1)/2"},
        {ClaimId::RuzsaAsym, "RUZSA_ASYM", Operand::Required, Operand::Forbidden, 0, 1,
         "|A| >= |B|, dim(A+B) = d  =>  |A+B| >= |A| + d|B| - d(d+1)/2"},
        {ClaimId::GsLines, "GS_LINES", Operand::Required, Operand::Required, 2, 2,
         "|A+B| >= (|A|/r1 + |B|/r2 - 1)(r1 + r2 - 1)"},
        {ClaimId::LemmaBase2d, "LEMMA_BASE_2D", Operand::Required, Operand::Required, 2, 2,
         "|A| >= |B|, |A+B| < |A| + 7|B|/3 - 5 sqrt|A|  =>  r1 <= 2 or r1 > |A|/4"},
        {ClaimId::AsymThm, "ASYM_THM", Operand::Required, Operand::Required, 0, 2,
         "dim A = d, |A| >= |B|, |A+B| < |A| + (d+1/3)|B| - 2^(d+1) sqrt|A| - E_d  =>  r = d or r > |A|/4"},
        {ClaimId::StanDoubling, "STAN_DOUBLING", Operand::Forbidden, Operand::Forbidden, 0, 2,
         "dim A = d, |A| > 3*4^d, |A+A| < (d+4/3)|A| - (3d^2+5d+8)/6  =>  A covered by d parallel lines"},
        {ClaimId::Dlines, "DLINES", Operand::Forbidden, Operand::Optional, 0, 1,
         "dim A = d, A covered by d parallel lines  =>  |A-A| >= (2d-2+2/d)|A| - (d^2-d+1)"},
        {ClaimId::Twoplanes1, "TWOPLANES_1", Operand::Forbidden, Operand::Required, 0, 2,
         "r = 2, dim A_1 = d-1, s = d-1  =>  |A-A| >= (2d-2)|A| + 2|A_1|/(d-1) - (2d^2-4d+3)"},
        {ClaimId::Lines4d, "LINES_4D", Operand::Forbidden, Operand::Required, 0, 2,
         "every l-line meeting A has >= 4d points  =>  |A-A| >= (2d-2+1/(d-1))|A| - (2d^2-4d+3) for large |A|"},
        {ClaimId::Main, "MAIN", Operand::Forbidden, Operand::Forbidden, 0, 2,
         "dim A = d  =>  |A-A| >= (2d-2+1/(d-1))|A| - (2d^2-4d+3) for large |A|"},
    }};
    return catalog;
}

inline const ClaimInfo& claim_info(ClaimId id) { return claim_catalog().at(static_cast<std::size_t>(id)); }
inline const char* claim_name(ClaimId id) { return claim_info(id).name; }

inline ClaimId parse_claim(std::string_view name) {
    for (const auto& c : claim_catalog()) {
        if (name == c.name) {
            return c.id;
        }
    }
    throw DomainError("unknown claim '" + std::string(name) + "'");
}

enum class Verdict { Consistent, Vacuous, Counterexample, BelowGuaranteedSize };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Consistent:
            return "CONSISTENT";
        case Verdict::Vacuous:
            return "VACUOUS";
        case Verdict::Counterexample:
            return "COUNTEREXAMPLE";
        case Verdict::BelowGuaranteedSize:
            return "BELOW_GUARANTEED_SIZE";
    }
    return "";
}

/// E_d = (d+2)^(2^d - 2).
inline Integer e_d(int d) {
    if (d < 1 || d > 8) {
        throw DomainError("E_d: d must lie in 1..8");
    }
    Integer out = 1;
    const long long exp = (1LL << d) - 2;
    for (long long i = 0; i < exp; ++i) {
        out *= d + 2;
    }
    return out;
}

/// Named integer parameters: d, n = |A|, m = |B|, r1, r2, a1 = |A_1|.
using BoundParams = std::map<std::string, Integer>;

namespace detail {

inline Rational param(const BoundParams& p, const char* key, const char* claim) {
    auto it = p.find(key);
    if (it == p.end()) {
        throw DomainError(std::string(claim) + " needs parameter '" + key + "'");
    }
    return Rational(it->second);
}

inline int small_d(const Rational& d, const ClaimInfo& info) {
    if (d < info.min_dim || d > 64 || (info.fixed_dim != 0 && d != info.fixed_dim)) {
        throw DomainError(std::string(info.name) + ": dimension d = " + to_string(d) + " out of range");
    }
    return static_cast<int>(numerator(d));
}

inline Rational positive(const Rational& x, const char* what) {
    if (x <= 0) {
        throw DomainError(std::string(what) + " must be positive");
    }
    return x;
}

}  // namespace detail

/// Right-hand side of the claim's displayed inequality. For the structural
/// claims (LEMMA_BASE_2D, ASYM_THM, STAN_DOUBLING) this is the hypothesis
/// threshold.
inline Surd bound_value(ClaimId claim, const BoundParams& p) {
    const ClaimInfo& info = claim_info(claim);
    const Rational d = detail::param(p, "d", info.name);
    const int di = detail::small_d(d, info);
    auto need = [&](const char* key) { return detail::param(p, key, info.name); };
    const Rational n = need("n");
    if (n < 0) {
        throw DomainError("n must be non-negative");
    }
    switch (claim) {
        case ClaimId::FreimanSum:
        case ClaimId::FhuDiff:
            return (d + 1) * n - d * (d + 1) / 2;
        case ClaimId::RuzsaAsym:
            return n + d * need("m") - d * (d + 1) / 2;
        case ClaimId::GsLines: {
            const Rational r1 = detail::positive(need("r1"), "r1");
            const Rational r2 = detail::positive(need("r2"), "r2");
            return (n / r1 + need("m") / r2 - 1) * (r1 + r2 - 1);
        }
        case ClaimId::LemmaBase2d:
            return Surd(n + Rational(7) * need("m") / 3, Rational(-5), numerator(n));
        case ClaimId::AsymThm: {
            const Rational two_pow = Rational(Integer(1) << (di + 1));
            return Surd(n + (d + Rational(1, 3)) * need("m") - Rational(e_d(di)), -two_pow, numerator(n));
        }
        case ClaimId::StanDoubling:
            return (d + Rational(4, 3)) * n - (3 * d * d + 5 * d + 8) / 6;
        case ClaimId::Dlines:
            return (2 * d - 2 + 2 / d) * n - (d * d - d + 1);
        case ClaimId::Twoplanes1:
            return (2 * d - 2) * n + 2 * need("a1") / (d - 1) - (2 * d * d - 4 * d + 3);
        case ClaimId::Lines4d:
        case ClaimId::Main:
            return (2 * d - 2 + 1 / (d - 1)) * n - (2 * d * d - 4 * d + 3);
    }
    throw DomainError("unknown claim");
}

struct ClaimOptions {
    bool as_conjecture = false;
    // LINES_4D's proof constants; both or neither.
    std::optional<Rational> eps;
    std::optional<Rational> c_d;
};

struct ClaimReport {
    ClaimId claim;
    std::map<std::string, std::string> instance;
    bool hypothesis_holds = false;
    bool conclusion_holds = false;
    Surd lhs;
    Surd rhs;
    Surd margin;  // lhs - rhs
    Verdict verdict = Verdict::Vacuous;
    bool as_conjecture = false;
};

inline Verdict decide_verdict(bool hypothesis, bool conclusion, bool size_conditional) {
    if (!hypothesis) {
        return Verdict::Vacuous;
    }
    if (conclusion) {
        return Verdict::Consistent;
    }
    return size_conditional ? Verdict::BelowGuaranteedSize : Verdict::Counterexample;
}

namespace detail {

inline void check_operand(Operand want, bool given, const char* claim, const char* what) {
    if (want == Operand::Required && !given) {
        throw DomainError(std::string(claim) + " needs operand " + what);
    }
    if (want == Operand::Forbidden && given) {
        throw DomainError(std::string(claim) + " does not take operand " + what);
    }
}

}  // namespace detail

/// Evaluates one claim on an instance. Hypothesis and conclusion are decided
/// exactly; the verdict follows the size conditions of the catalog.
inline ClaimReport check_claim(ClaimId claim, const PointSet& a, const std::optional<PointSet>& b,
                               const std::optional<Direction>& l, const ClaimOptions& opt = {}) {
    const ClaimInfo& info = claim_info(claim);
    detail::check_operand(info.b, b.has_value(), info.name, "B");
    detail::check_operand(info.line, l.has_value(), info.name, "l");
    detail::require_nonempty(a, info.name);
    if (b) {
        detail::require_same_dim(a, *b, info.name);
        detail::require_nonempty(*b, info.name);
    }
    if (l && l->dim() != a.dim()) {
        throw DimensionError(std::string(info.name) + ": direction and set dimensions differ");
    }
    if (opt.eps.has_value() != opt.c_d.has_value()) {
        throw DomainError("LINES_4D constants: give both eps and C_d or neither");
    }
    if (opt.eps && claim != ClaimId::Lines4d) {
        throw DomainError(std::string(info.name) + " takes no eps/C_d constants");
    }

    const std::size_t d = a.dim();
    const int di = detail::small_d(Rational(static_cast<long long>(d)), info);
    const Integer n = static_cast<long long>(a.size());
    const std::size_t dim_a = affine_dimension(a);

    ClaimReport rep{claim, {}, false, false, {}, {}, {}, Verdict::Vacuous, false};
    rep.as_conjecture = claim == ClaimId::Main && opt.as_conjecture;
    rep.instance["d"] = std::to_string(d);
    rep.instance["n"] = to_string(n);
    rep.instance["dim"] = std::to_string(dim_a);
    BoundParams params{{"d", Integer(static_cast<long long>(d))}, {"n", n}};
    bool size_conditional = false;
    Surd lhs;

    auto diff_size = [&] {
        const std::size_t v = difference_set(a, a).size();
        rep.instance["diff"] = std::to_string(v);
        return Surd(Rational(static_cast<long long>(v)));
    };
    auto sum_ab = [&] {
        const std::size_t v = sumset(a, *b).size();
        rep.instance["sum"] = std::to_string(v);
        return Surd(Rational(static_cast<long long>(v)));
    };
    auto bound = [&] { return bound_value(claim, params); };
    if (b) {
        params["m"] = static_cast<long long>(b->size());
        rep.instance["m"] = std::to_string(b->size());
    }
    if (l) {
        std::string s;
        for (std::size_t i = 0; i < l->dim(); ++i) {
            s += (i ? "," : "") + to_string(l->vec()[i]);
        }
        rep.instance["l"] = s;
    }

    switch (claim) {
        case ClaimId::FreimanSum: {
            rep.hypothesis_holds = dim_a == d;
            const std::size_t v = sumset(a, a).size();
            rep.instance["sum"] = std::to_string(v);
            rep.lhs = Rational(static_cast<long long>(v));
            rep.rhs = bound();
            rep.conclusion_holds = rep.lhs >= rep.rhs;
            break;
        }
        case ClaimId::FhuDiff:
        case ClaimId::Main:
            rep.hypothesis_holds = dim_a == d;
            rep.lhs = diff_size();
            rep.rhs = bound();
            rep.conclusion_holds = rep.lhs >= rep.rhs;
            size_conditional = claim == ClaimId::Main && !opt.as_conjecture;
            break;
        case ClaimId::RuzsaAsym: {
            const std::size_t dim_sum = affine_dimension(sumset(a, *b));
            rep.instance["dim_sum"] = std::to_string(dim_sum);
            rep.hypothesis_holds = a.size() >= b->size() && dim_sum == d;
            rep.lhs = sum_ab();
            rep.rhs = bound();
            rep.conclusion_holds = rep.lhs >= rep.rhs;
            break;
        }
        case ClaimId::GsLines: {
            const std::size_t r1 = count_lines(a, *l);
            const std::size_t r2 = count_lines(*b, *l);
            params["r1"] = static_cast<long long>(r1);
            params["r2"] = static_cast<long long>(r2);
            rep.instance["r1"] = std::to_string(r1);
            rep.instance["r2"] = std::to_string(r2);
            rep.hypothesis_holds = true;
            rep.lhs = sum_ab();
            rep.rhs = bound();
            rep.conclusion_holds = rep.lhs >= rep.rhs;
            break;
        }
        case ClaimId::LemmaBase2d:
        case ClaimId::AsymThm: {
            const std::size_t r = count_lines(a, *l);
            rep.instance[claim == ClaimId::AsymThm ? "r" : "r1"] = std::to_string(r);
            rep.lhs = sum_ab();
            rep.rhs = bound();
            rep.hypothesis_holds = a.size() >= b->size() && rep.lhs < rep.rhs &&
                                   (claim == ClaimId::LemmaBase2d || dim_a == d);
            const bool big = Integer(static_cast<long long>(4 * r)) > n;
            rep.conclusion_holds = claim == ClaimId::LemmaBase2d ? (r <= 2 || big) : (r == d || big);
            break;
        }
        case ClaimId::StanDoubling: {
            const std::size_t v = sumset(a, a).size();
            rep.instance["sum"] = std::to_string(v);
            rep.lhs = Rational(static_cast<long long>(v));
            rep.rhs = bound();
            rep.hypothesis_holds = dim_a == d && rep.lhs < rep.rhs;
            if (a.size() >= 2) {
                const auto cover = min_line_cover(a);
                rep.instance["cover"] = std::to_string(cover.count);
                rep.conclusion_holds = cover.count <= d;
            } else {
                rep.conclusion_holds = true;
            }
            Integer threshold = 3;
            for (int i = 0; i < di; ++i) {
                threshold *= 4;
            }
            size_conditional = n <= threshold;
            break;
        }
        case ClaimId::Dlines: {
            bool covered = false;
            bool general = false;
            if (dim_a == d) {  // implies |A| >= 2
                const Direction dir = l ? *l : min_line_cover(a).direction;
                const LinePartition part = line_partition(a, dir);
                rep.instance["lines"] = std::to_string(part.count());
                covered = part.count() <= d;
                general = lines_in_general_position(part);
            }
            rep.hypothesis_holds = dim_a == d && covered && general;
            rep.lhs = diff_size();
            rep.rhs = bound();
            rep.conclusion_holds = rep.lhs >= rep.rhs;
            break;
        }
        case ClaimId::Twoplanes1: {
            rep.lhs = diff_size();
            if (dim_a == d) {
                const Hyperplane h = major_hyperplane(a, *l);
                const auto slices = hyperplane_slices(a, h);
                const PointSet& a1 = slices.front().points;
                const std::size_t s = count_lines(a1, *l);
                const std::size_t dim_a1 = affine_dimension(a1);
                params["a1"] = static_cast<long long>(a1.size());
                rep.instance["r"] = std::to_string(slices.size());
                rep.instance["a1"] = std::to_string(a1.size());
                rep.instance["s"] = std::to_string(s);
                rep.hypothesis_holds = slices.size() == 2 && dim_a1 == d - 1 && s == d - 1;
            } else {
                params["a1"] = 0;
            }
            rep.rhs = bound();
            rep.conclusion_holds = rep.lhs >= rep.rhs;
            break;
        }
        case ClaimId::Lines4d: {
            const LinePartition part = line_partition(a, *l);
            std::size_t thinnest = a.size();
            for (const auto& c : part.classes) {
                thinnest = std::min(thinnest, c.points.size());
            }
            rep.instance["thinnest_line"] = std::to_string(thinnest);
            rep.hypothesis_holds = dim_a == d && thinnest >= 4 * d;
            rep.lhs = diff_size();
            const Rational dr = static_cast<long long>(d);
            if (opt.eps) {
                const Rational& eps = *opt.eps;
                if (!(eps > 0 && eps < 1 / ((4 * dr + 1) * (dr - 1)))) {
                    throw DomainError("LINES_4D: eps must satisfy 0 < eps < 1/((4d+1)(d-1))");
                }
                rep.instance["eps"] = to_string(eps);
                rep.instance["C_d"] = to_string(*opt.c_d);
                // either (1) or (2); the disjunction holds iff lhs reaches the
                // smaller applicable right-hand side
                Rational rhs = (2 * dr - 2 + 1 / (dr - 1) + eps) * Rational(n) - *opt.c_d;
                if (dim_a == d) {
                    const Hyperplane h = major_hyperplane(a, *l);
                    const auto slices = hyperplane_slices(a, h);
                    rep.instance["r"] = std::to_string(slices.size());
                    if (slices.size() == 2) {
                        const Rational two_planes = (2 * dr - 2) * Rational(n) +
                                                    2 * Rational(static_cast<long long>(incidence_count(a, h))) /
                                                        (dr - 1) -
                                                    (2 * dr * dr - 4 * dr + 3);
                        rhs = std::min(rhs, two_planes);
                    }
                }
                rep.rhs = rhs;
            } else {
                rep.rhs = bound();
            }
            rep.conclusion_holds = rep.lhs >= rep.rhs;
            size_conditional = true;
            break;
        }
    }
    rep.margin = rep.lhs - rep.rhs;
    rep.verdict = decide_verdict(rep.hypothesis_holds, rep.conclusion_holds, size_conditional);
    return rep;
}

inline ClaimReport check_claim(ClaimId claim, const PointSet& a, const ClaimOptions& opt = {}) {
    return check_claim(claim, a, std::nullopt, std::nullopt, opt);
}

/// Descriptive report on how close A is to the two-hyperplane shape of the
/// extremal examples.
struct StructureReport {
    Direction direction;
    std::size_t line_count = 0;
    Hyperplane major_hyperplane;
    std::vector<std::size_t> major_slice_sizes;
    bool two_hyperplanes = false;
    std::optional<Hyperplane> two_plane;  // supporting plane of the two-slab cover
    std::size_t imbalance = 0;            // ||A_1| - |A_2||
    std::vector<std::size_t> a1_line_sizes;
    std::vector<std::size_t> a2_line_sizes;
    bool a1_in_d_minus_1_lines = false;
    std::size_t a1_line_spread = 0;
    bool near_extremal = false;
};

inline StructureReport structure_diagnose(const PointSet& a) {
    const std::size_t d = a.dim();
    if (d < 2) {
        throw DomainError("structure_diagnose: needs d >= 2");
    }
    detail::require_nonempty(a, "structure_diagnose");
    if (affine_dimension(a) != d) {
        throw DomainError("structure_diagnose: A is not full-dimensional");
    }
    const LineCover cover = min_line_cover(a);
    const Hyperplane major = major_hyperplane(a, cover.direction);
    StructureReport rep{cover.direction, cover.count, major, {}, false, std::nullopt, 0, {}, {}, false, 0, false};
    for (const auto& s : hyperplane_slices(a, major)) {
        rep.major_slice_sizes.push_back(s.points.size());
    }

    // candidates in order of incidence, the major plane first
    auto planes = supporting_hyperplanes(a, cover.direction);
    std::stable_sort(planes.begin(), planes.end(), [&](const Hyperplane& x, const Hyperplane& y) {
        return incidence_count(a, x) > incidence_count(a, y);
    });
    std::optional<std::vector<Slice>> slabs;
    auto try_plane = [&](const Hyperplane& h) {
        auto slices = hyperplane_slices(a, h);
        if (slices.size() == 2) {
            rep.two_plane = h;
            slabs = std::move(slices);
            return true;
        }
        return false;
    };
    if (!try_plane(major)) {
        for (const auto& h : planes) {
            if (try_plane(h)) {
                break;
            }
        }
    }
    if (!slabs) {
        return rep;
    }
    rep.two_hyperplanes = true;
    const PointSet& a1 = (*slabs)[0].points;
    const PointSet& a2 = (*slabs)[1].points;
    rep.imbalance = a1.size() > a2.size() ? a1.size() - a2.size() : a2.size() - a1.size();
    auto sizes = [&](const PointSet& s) {
        std::vector<std::size_t> out;
        for (const auto& c : line_partition(s, cover.direction).classes) {
            out.push_back(c.points.size());
        }
        return out;
    };
    rep.a1_line_sizes = sizes(a1);
    rep.a2_line_sizes = sizes(a2);
    rep.a1_in_d_minus_1_lines = rep.a1_line_sizes.size() == d - 1;
    const auto [lo, hi] = std::minmax_element(rep.a1_line_sizes.begin(), rep.a1_line_sizes.end());
    rep.a1_line_spread = *hi - *lo;
    rep.near_extremal = rep.a1_in_d_minus_1_lines && rep.a2_line_sizes.size() == d - 1 &&
                        affine_dimension(a1) == d - 1 && affine_dimension(a2) == d - 1;
    return rep;
}

}  // namespace sumlab
