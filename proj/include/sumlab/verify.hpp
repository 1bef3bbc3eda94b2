#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sumlab/bounds.hpp"
#include "sumlab/compression.hpp"
#include "sumlab/constructions.hpp"
#include "sumlab/json_io.hpp"
#include "sumlab/random.hpp"
#include "sumlab/search.hpp"

// The verify battery: exact identities on the constructions plus seeded
// randomized property checks. Output depends only on the configuration.

namespace sumlab {

struct VerifySuite {
    std::string suite = "all";  // constructions, compression, reduce, claims, search, all
    std::uint64_t trials = 200;
    std::uint64_t seed = 0;
    std::vector<int> dims{2, 3, 4, 5};
};

inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"constructions", "compression", "reduce", "claims", "search", "all"};
    return names;
}

struct CheckResult {
    std::string suite;
    std::string name;
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    std::optional<Surd> min_margin;
    std::optional<Surd> max_margin;
    std::vector<io::json> failed;                 // first few, in full
    std::map<std::string, io::json> breakdown;    // per-stratum counts

    static constexpr std::size_t kListed = 16;

    bool ok() const { return failures == 0; }

    void margin(const Surd& m) {
        if (!min_margin || m < *min_margin) {
            min_margin = m;
        }
        if (!max_margin || *max_margin < m) {
            max_margin = m;
        }
    }

    void pass(const std::string& stratum = {}) { record(true, stratum); }

    void fail(io::json instance, const std::string& stratum = {}) {
        record(false, stratum);
        if (failed.size() < kListed) {
            failed.push_back(std::move(instance));
        }
    }

    io::json to_json() const {
        io::json j{{"suite", suite},
                   {"name", name},
                   {"instances", instances},
                   {"failures", failures},
                   {"passed", instances - failures},
                   {"min_margin", min_margin ? io::to_json(*min_margin) : io::json(nullptr)},
                   {"max_margin", max_margin ? io::to_json(*max_margin) : io::json(nullptr)},
                   {"failed_instances", failed}};
        if (!breakdown.empty()) {
            j["breakdown"] = breakdown;
        }
        return j;
    }

private:
    void record(bool ok, const std::string& stratum) {
        ++instances;
        failures += ok ? 0 : 1;
        if (!stratum.empty()) {
            auto& b = breakdown[stratum];
            if (b.is_null()) {
                b = io::json{{"instances", 0}, {"failures", 0}};
            }
            b["instances"] = b["instances"].get<std::uint64_t>() + 1;
            b["failures"] = b["failures"].get<std::uint64_t>() + (ok ? 0 : 1);
        }
    }
};

namespace verify_detail {

inline Surd count(std::size_t x) { return Surd(Rational(static_cast<long long>(x))); }

// Independent stream per named check.
inline std::uint64_t check_seed(std::uint64_t master, const std::string& name) {
    return rng::splitmix64(master ^ rng::fnv1a(name));
}

inline PointSet random_set(std::mt19937_64& g, std::size_t d, int box, std::size_t n) {
    std::set<Point> pts;
    while (pts.size() < n) {
        std::vector<Rational> c(d);
        for (auto& x : c) {
            x = Rational(rng::uniform_int(g, 0, box));
        }
        pts.insert(Point(std::move(c)));
    }
    return PointSet(d, std::vector<Point>(pts.begin(), pts.end()));
}

inline IntVector random_vector(std::mt19937_64& g, std::size_t d, int r) {
    IntVector v(d);
    for (auto& x : v) {
        x = rng::uniform_int(g, -r, r);
    }
    return v;
}

inline bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

inline Direction random_direction(std::mt19937_64& g, std::size_t d) {
    IntVector v;
    do {
        v = random_vector(g, d, 2);
    } while (is_zero(v));
    return Direction(std::move(v));
}

// ---- constructions ----

inline CheckResult stanchescu_identity(const VerifySuite& cfg) {
    CheckResult c{"constructions", "stanchescu_difference_identity"};
    for (int d : cfg.dims) {
        for (int k = 1; k <= 6; ++k) {
            const PointSet a = stanchescu_dk(d, k);
            const Rational dd(d);
            const Rational expect =
                (2 * dd - 2 + 1 / (dd - 1)) * 2 * (dd - 1) * k - (2 * dd * dd - 4 * dd + 3);
            const Rational got(static_cast<long long>(difference_set(a, a).size()));
            c.margin(Surd(got - expect));
            if (got == expect) {
                c.pass();
            } else {
                c.fail({{"d", d}, {"k", k}, {"diff_size", to_string(got)}, {"expected", to_string(expect)}});
            }
        }
    }
    return c;
}

inline CheckResult stan_doubling_identity(const VerifySuite& cfg) {
    CheckResult c{"constructions", "stan_doubling_sumset_identity"};
    for (int d : cfg.dims) {
        for (int n = 2; n <= 6; ++n) {
            const PointSet a = stan_doubling_tight(d, n);
            const Rational dd(d);
            const Rational expect = (dd + Rational(4, 3)) * static_cast<long long>(a.size()) -
                                    (3 * dd * dd + 5 * dd + 8) / 6;
            const Rational got(static_cast<long long>(sumset(a, a).size()));
            c.margin(Surd(got - expect));
            if (got == expect) {
                c.pass();
            } else {
                c.fail({{"d", d}, {"n", n}, {"sum_size", to_string(got)}, {"expected", to_string(expect)}});
            }
        }
    }
    return c;
}

// n = 2 is coverable by d lines, so only n >= 3.
inline CheckResult stan_doubling_cover(const VerifySuite& cfg) {
    CheckResult c{"constructions", "stan_doubling_line_cover"};
    for (int d : cfg.dims) {
        for (int n = 3; n <= 6; ++n) {
            const LineCover cover = min_line_cover(stan_doubling_tight(d, n));
            c.margin(count(cover.count) - count(static_cast<std::size_t>(d) + 1));
            if (cover.count > static_cast<std::size_t>(d)) {
                c.pass();
            } else {
                c.fail({{"d", d}, {"n", n}, {"cover", cover.count}, {"direction", io::to_json(cover.direction)}});
            }
        }
    }
    return c;
}

inline CheckResult freiman_equality(const VerifySuite& cfg) {
    CheckResult c{"constructions", "freiman_aps_sumset_equality"};
    std::vector<int> dims{1};
    for (int d : cfg.dims) {
        if (d != 1) {
            dims.push_back(d);
        }
    }
    for (int d : dims) {
        for (int len = 1; len <= 6; ++len) {
            const PointSet a = freiman_aps(d, std::vector<int>(static_cast<std::size_t>(d), len));
            const Integer expect = Integer(d + 1) * static_cast<long long>(a.size()) - Integer(d * (d + 1) / 2);
            const Integer got(static_cast<long long>(sumset(a, a).size()));
            c.margin(Surd(Rational(got - expect)));
            if (got == expect) {
                c.pass();
            } else {
                c.fail({{"d", d}, {"length", len}, {"sum_size", to_string(got)}, {"expected", to_string(expect)}});
            }
        }
    }
    return c;
}

// ---- compression ----

inline CheckResult compression_monotonicity(const VerifySuite& cfg) {
    CheckResult c{"compression", "compression_monotonicity"};
    const std::uint64_t seed = check_seed(cfg.seed, c.name);
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 g = rng::for_trial(seed, t);
        const auto d = static_cast<std::size_t>(cfg.dims[t % cfg.dims.size()]);
        const PointSet a = random_set(g, d, 5, static_cast<std::size_t>(rng::uniform_int(g, 1, 12)));
        const PointSet b = random_set(g, d, 5, static_cast<std::size_t>(rng::uniform_int(g, 1, 12)));
        IntVector normal;
        IntVector v;
        do {
            normal = random_vector(g, d, 2);
            v = random_vector(g, d, 2);
        } while (is_zero(normal) || dot(normal, Point(v)) == 0);
        const CompressionSpec spec(Hyperplane(normal, Rational(rng::uniform_int(g, -3, 3))), v);
        const auto [pa, pb] = compress_pair(a, b, spec);
        const std::size_t before = sumset(a, b).size();
        const std::size_t after = sumset(pa, pb).size();
        c.margin(count(before) - count(after));
        if (pa.size() == a.size() && pb.size() == b.size() && after <= before) {
            c.pass("d=" + std::to_string(d));
        } else {
            c.fail({{"trial", t},
                    {"a", io::to_json(a)},
                    {"b", io::to_json(b)},
                    {"hyperplane", io::to_json(spec.hyperplane())},
                    {"step", io::int_vector_json(spec.step())},
                    {"sum_before", before},
                    {"sum_after", after}},
                   "d=" + std::to_string(d));
        }
    }
    return c;
}

// ---- reduce ----

inline CheckResult reduce_square(const VerifySuite&) {
    CheckResult c{"reduce", "reduce_square_example"};
    const PointSet a = PointSet::of({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    const PointSet expect = PointSet::of({{0, 0}, {0, 1}, {0, 2}, {1, 0}});
    const Reduction red = reduce(a, PointSet::of({{0, 0}}), Direction::axis(2, 2));
    if (red.a == expect && check_reduction(a, PointSet::of({{0, 0}}), red).all()) {
        c.pass();
    } else {
        c.fail({{"got", io::to_json(red.a)}, {"expected", io::to_json(expect)}});
    }
    return c;
}

inline CheckResult reduce_postconditions(const VerifySuite& cfg) {
    CheckResult c{"reduce", "reduce_postconditions"};
    const std::uint64_t seed = check_seed(cfg.seed, c.name);
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 g = rng::for_trial(seed, t);
        const auto d = static_cast<std::size_t>(cfg.dims[t % cfg.dims.size()]);
        PointSet a(d);
        do {
            a = random_set(g, d, 4, static_cast<std::size_t>(rng::uniform_int(g, static_cast<long long>(d) + 1, 10)));
        } while (affine_dimension(a) != d);
        const PointSet b = random_set(g, d, 4, static_cast<std::size_t>(rng::uniform_int(g, 1, 6)));
        // a direction through two points of A, so s < |A|
        const auto i = static_cast<std::size_t>(rng::uniform_below(g, a.size()));
        auto j = static_cast<std::size_t>(rng::uniform_below(g, a.size() - 1));
        j += j >= i ? 1 : 0;
        const Direction l = Direction::of(a[j] - a[i]);
        const std::size_t s = count_lines(a, l);
        const std::string stratum =
            "d=" + std::to_string(d) + (d == 2 ? (s == 2 ? ",s=2" : ",s>=3") : std::string());
        io::json inst{{"trial", t}, {"a", io::to_json(a)}, {"b", io::to_json(b)}, {"l", io::to_json(l)}, {"s", s}};
        try {
            const Reduction red = reduce(a, b, l);
            const ReductionCheck chk = check_reduction(a, b, red);
            const ReplayReport rep = replay(red.trace);
            c.margin(count(chk.sum_before) - count(chk.sum_after));
            if (chk.all() && rep.ok) {
                c.pass(stratum);
            } else {
                inst["checks"] = io::to_json(chk);
                inst["replay"] = rep.message;
                c.fail(std::move(inst), stratum);
            }
        } catch (const Error& e) {
            inst["error"] = e.what();
            c.fail(std::move(inst), stratum);
        }
    }
    return c;
}

// ---- claims ----

inline CheckResult gs_lines_random(const VerifySuite& cfg) {
    CheckResult c{"claims", "gs_lines_random"};
    const std::uint64_t seed = check_seed(cfg.seed, c.name);
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        std::mt19937_64 g = rng::for_trial(seed, t);
        const PointSet a = random_set(g, 2, 5, static_cast<std::size_t>(rng::uniform_int(g, 1, 12)));
        const PointSet b = random_set(g, 2, 5, static_cast<std::size_t>(rng::uniform_int(g, 1, 12)));
        const Direction l = random_direction(g, 2);
        const ClaimReport r = check_claim(ClaimId::GsLines, a, b, l);
        c.margin(r.margin);
        if (r.verdict != Verdict::Counterexample) {
            c.pass(verdict_name(r.verdict));
        } else {
            c.fail({{"trial", t}, {"report", io::to_json(r)}, {"a", io::to_json(a)}, {"b", io::to_json(b)},
                    {"l", io::to_json(l)}},
                   verdict_name(r.verdict));
        }
    }
    return c;
}

inline bool claim_runs_in(const ClaimInfo& info, std::size_t d) {
    if (info.fixed_dim != 0 && static_cast<std::size_t>(info.fixed_dim) != d) {
        return false;
    }
    return d >= static_cast<std::size_t>(info.min_dim);
}

// Unconditional claims on random operands; any COUNTEREXAMPLE is a failure.
inline CheckResult catalog_random(const VerifySuite& cfg) {
    CheckResult c{"claims", "catalog_random"};
    const std::uint64_t seed = check_seed(cfg.seed, c.name);
    for (const ClaimInfo& info : claim_catalog()) {
        if (info.id == ClaimId::Main || info.id == ClaimId::StanDoubling || info.id == ClaimId::Lines4d) {
            continue;  // size-conditional
        }
        std::vector<std::size_t> dims;
        for (int d : cfg.dims) {
            if (claim_runs_in(info, static_cast<std::size_t>(d))) {
                dims.push_back(static_cast<std::size_t>(d));
            }
        }
        if (info.fixed_dim != 0 && dims.empty()) {
            dims.push_back(static_cast<std::size_t>(info.fixed_dim));
        }
        if (dims.empty()) {
            continue;
        }
        const std::uint64_t claim_seed = rng::splitmix64(seed ^ rng::fnv1a(info.name));
        for (std::uint64_t t = 0; t < cfg.trials; ++t) {
            std::mt19937_64 g = rng::for_trial(claim_seed, t);
            const std::size_t d = dims[t % dims.size()];
            const PointSet a = random_set(g, d, 4, static_cast<std::size_t>(rng::uniform_int(g, 1, 12)));
            std::optional<PointSet> b;
            std::optional<Direction> l;
            if (info.b != Operand::Forbidden) {
                b = random_set(g, d, 4, static_cast<std::size_t>(rng::uniform_int(g, 1, 12)));
            }
            if (info.line != Operand::Forbidden) {
                l = random_direction(g, d);
            }
            const ClaimReport r = check_claim(info.id, a, b, l);
            const std::string stratum = std::string(info.name) + ":" + verdict_name(r.verdict);
            if (r.hypothesis_holds) {
                c.margin(r.margin);
            }
            if (r.verdict != Verdict::Counterexample) {
                c.pass(stratum);
            } else {
                io::json inst{{"trial", t}, {"report", io::to_json(r)}, {"a", io::to_json(a)}};
                inst["b"] = b ? io::to_json(*b) : io::json(nullptr);
                inst["l"] = l ? io::to_json(*l) : io::json(nullptr);
                c.fail(std::move(inst), stratum);
            }
        }
    }
    return c;
}

inline CheckResult main_tightness(const VerifySuite& cfg) {
    CheckResult c{"claims", "main_margin_on_stanchescu"};
    ClaimOptions opt;
    opt.as_conjecture = true;
    for (int d : cfg.dims) {
        for (int k = 2; k <= 6; ++k) {
            const ClaimReport r = check_claim(ClaimId::Main, stanchescu_dk(d, k), opt);
            c.margin(r.margin);
            if (r.hypothesis_holds && r.margin.sign() == 0) {
                c.pass();
            } else {
                c.fail({{"d", d}, {"k", k}, {"report", io::to_json(r)}});
            }
        }
    }
    return c;
}

// ---- search ----

inline CheckResult exhaustive_oracle(std::size_t n, int box, std::size_t expect) {
    CheckResult c{"search", "exhaustive_d2_n" + std::to_string(n) + "_box" + std::to_string(box)};
    SearchSpec spec;
    spec.d = 2;
    spec.n = n;
    spec.box = box;
    spec.require_full_dim = true;
    const SearchResult pruned = run_search(spec);
    spec.prune = false;
    const SearchResult plain = run_search(spec);
    const bool same = pruned.best_value == plain.best_value && pruned.witnesses == plain.witnesses &&
                      pruned.witnesses_total == plain.witnesses_total;
    c.margin(count(pruned.best_value) - count(expect));
    if (pruned.best_value == expect && same) {
        c.pass();
    } else {
        c.fail({{"pruned", io::to_json(pruned)}, {"unpruned", io::to_json(plain)}, {"expected", expect}});
    }
    return c;
}

inline CheckResult main_probe(const VerifySuite& cfg) {
    CheckResult c{"search", "main_conjecture_probe"};
    const std::uint64_t seed = check_seed(cfg.seed, c.name);
    for (int di : cfg.dims) {
        if (di > 3) {
            continue;
        }
        const auto d = static_cast<std::size_t>(di);
        for (std::size_t n = d + 1; n <= 12; ++n) {
            SearchSpec spec;
            spec.d = d;
            spec.n = n;
            spec.box = d == 2 ? 4 : 3;
            spec.mode = SearchMode::Random;
            spec.trials = cfg.trials;
            spec.seed = rng::splitmix64(seed + 1000 * d + n);
            spec.claim = ClaimId::Main;
            spec.as_conjecture = true;
            spec.require_full_dim = true;
            const SearchResult r = run_search(spec);
            const std::string stratum = "d=" + std::to_string(d);
            const std::uint64_t bad = r.verdict_counts.count("COUNTEREXAMPLE") ? r.verdict_counts.at("COUNTEREXAMPLE") : 0;
            for (std::uint64_t t = 0; t < spec.trials - bad; ++t) {
                c.pass(stratum);
            }
            for (const auto& v : r.violations) {
                c.margin(v.report.margin);
                c.fail({{"d", d}, {"n", n}, {"trial", v.trial}, {"a", io::to_json(v.a)},
                        {"report", io::to_json(v.report)}},
                       stratum);
            }
        }
    }
    return c;
}

}  // namespace verify_detail

inline void validate(const VerifySuite& cfg) {
    const auto& names = verify_suite_names();
    if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
        throw DomainError("verify: unknown suite '" + cfg.suite + "'");
    }
    if (cfg.trials < 1) {
        throw DomainError("verify: trials must be at least 1");
    }
    if (cfg.dims.empty()) {
        throw DomainError("verify: dims must not be empty");
    }
    for (int d : cfg.dims) {
        if (d < 2 || d > 6) {
            throw DomainError("verify: dims must lie in 2..6, got " + std::to_string(d));
        }
    }
}

inline std::vector<CheckResult> run_checks(const VerifySuite& cfg) {
    validate(cfg);
    namespace v = verify_detail;
    const bool all = cfg.suite == "all";
    std::vector<CheckResult> out;
    if (all || cfg.suite == "constructions") {
        out.push_back(v::stanchescu_identity(cfg));
        out.push_back(v::stan_doubling_identity(cfg));
        out.push_back(v::stan_doubling_cover(cfg));
        out.push_back(v::freiman_equality(cfg));
    }
    if (all || cfg.suite == "compression") {
        out.push_back(v::compression_monotonicity(cfg));
    }
    if (all || cfg.suite == "reduce") {
        out.push_back(v::reduce_square(cfg));
        out.push_back(v::reduce_postconditions(cfg));
    }
    if (all || cfg.suite == "claims") {
        out.push_back(v::gs_lines_random(cfg));
        out.push_back(v::catalog_random(cfg));
        out.push_back(v::main_tightness(cfg));
    }
    if (all || cfg.suite == "search") {
        out.push_back(v::exhaustive_oracle(4, 3, 9));
        out.push_back(v::exhaustive_oracle(3, 2, 7));
        out.push_back(v::main_probe(cfg));
    }
    return out;
}

inline io::json to_json(const VerifySuite& cfg) {
    return io::json{{"suite", cfg.suite}, {"trials", cfg.trials}, {"seed", cfg.seed}, {"dims", cfg.dims}};
}

/// Summary report: per-check counts, margins and failing instances.
inline io::json verify_battery(const VerifySuite& cfg) {
    const std::vector<CheckResult> checks = run_checks(cfg);
    io::json list = io::json::array();
    std::uint64_t failed_checks = 0;
    for (const auto& c : checks) {
        list.push_back(c.to_json());
        failed_checks += c.ok() ? 0 : 1;
    }
    return io::json{{"config", to_json(cfg)},
                    {"checks", std::move(list)},
                    {"failed_checks", failed_checks},
                    {"ok", failed_checks == 0}};
}

}  // namespace sumlab
