#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "sumlab/bounds.hpp"
#include "sumlab/errors.hpp"
#include "sumlab/pointset.hpp"
#include "sumlab/random.hpp"

namespace sumlab {

enum class SearchMode { Exhaustive, Random };

struct SearchSpec {
    std::size_t d = 2;
    std::size_t n = 3;
    int box = 2;  // coordinates in [0, box]
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::optional<ClaimId> claim;
    bool as_conjecture = false;
    bool require_full_dim = false;
    bool prune = true;
    bool canonical = true;
    std::uint64_t budget = 100000000;
    std::size_t max_witnesses = 64;
    unsigned threads = 0;  // 0: hardware concurrency; never affects results
};

struct Violation {
    std::uint64_t trial = 0;
    ClaimReport report;
    PointSet a;
    std::optional<PointSet> b;
    std::optional<Direction> l;
};

struct SearchResult {
    std::size_t best_value = 0;
    std::vector<PointSet> witnesses;   // canonical forms, lexicographic, capped
    std::uint64_t witnesses_total = 0;  // distinct canonical witnesses
    std::uint64_t candidates_examined = 0;
    std::vector<Violation> violations;
    std::map<std::string, std::uint64_t> verdict_counts;
    std::uint64_t seed = 0;
};

namespace search_detail {

using Coords = std::vector<int>;  // one point, small integers
using Config = std::vector<Coords>;  // sorted

inline unsigned thread_count(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

inline Integer binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    Integer out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        out = out * Integer(n - k + i) / Integer(i);
    }
    return out;
}

inline std::uint64_t box_volume(std::size_t d, int box) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < d; ++i) {
        v *= static_cast<std::uint64_t>(box + 1);
        if (v > (1ULL << 40)) {
            throw DomainError("search: box volume too large");
        }
    }
    return v;
}

// Fraction-free rank of the differences to the first point.
inline std::size_t affine_rank(const Config& pts) {
    std::vector<std::vector<long long>> m;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<long long> r(pts[i].size());
        for (std::size_t j = 0; j < r.size(); ++j) {
            r[j] = pts[i][j] - pts[0][j];
        }
        m.push_back(std::move(r));
    }
    std::size_t rank = 0;
    const std::size_t cols = pts.empty() ? 0 : pts[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[p], m[rank]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            const long long f = m[i][c];
            const long long g = m[rank][c];
            long long h = 0;
            for (std::size_t j = 0; j < cols; ++j) {
                m[i][j] = m[i][j] * g - m[rank][j] * f;
                h = std::gcd(h, m[i][j] < 0 ? -m[i][j] : m[i][j]);
            }
            if (h > 1) {
                for (auto& x : m[i]) {
                    x /= h;
                }
            }
        }
        ++rank;
    }
    return rank;
}

// Lexicographically least image under coordinate permutations followed by
// translating every axis minimum to 0.
inline Config canonical_form(const Config& pts) {
    const std::size_t d = pts.front().size();
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    Config best;
    do {
        Config img(pts.size(), Coords(d));
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                img[i][j] = pts[i][perm[j]];
            }
        }
        for (std::size_t j = 0; j < d; ++j) {
            int lo = img[0][j];
            for (const auto& p : img) {
                lo = std::min(lo, p[j]);
            }
            for (auto& p : img) {
                p[j] -= lo;
            }
        }
        std::sort(img.begin(), img.end());
        if (best.empty() || img < best) {
            best = std::move(img);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline PointSet to_point_set(const Config& c, std::size_t d) {
    std::vector<Point> pts;
    pts.reserve(c.size());
    for (const auto& q : c) {
        std::vector<Rational> r(q.begin(), q.end());
        pts.emplace_back(std::move(r));
    }
    return PointSet(d, std::move(pts));
}

// Running minimum with an order-independent witness set.
struct Tally {
    std::size_t best = SIZE_MAX;
    std::set<Config> witnesses;
    std::uint64_t examined = 0;
    std::vector<Violation> violations;
    std::map<std::string, std::uint64_t> verdicts;

    void offer(std::size_t value, Config&& canon) {
        if (value < best) {
            best = value;
            witnesses.clear();
        }
        if (value == best) {
            witnesses.insert(std::move(canon));
        }
    }

    void merge(Tally&& other) {
        examined += other.examined;
        for (auto& v : other.violations) {
            violations.push_back(std::move(v));
        }
        for (const auto& [k, c] : other.verdicts) {
            verdicts[k] += c;
        }
        if (other.best < best) {
            best = other.best;
            witnesses = std::move(other.witnesses);
        } else if (other.best == best) {
            witnesses.merge(other.witnesses);
        }
    }
};

// Exhaustive enumeration of n-subsets of the lattice box, in lexicographic
// point order.
class Enumerator {
public:
    Enumerator(const SearchSpec& spec) : spec_(spec), d_(spec.d) {
        const std::uint64_t v = box_volume(d_, spec.box);
        const int radix = 2 * spec.box + 1;
        Coords c(d_, 0);
        for (std::uint64_t i = 0; i < v; ++i) {
            points_.push_back(c);
            long long code = 0;
            long long place = 1;
            for (std::size_t j = 0; j < d_; ++j) {
                code += c[j] * place;
                place *= radix;
            }
            codes_.push_back(code);
            // lexicographic successor: increment the last coordinate first
            for (std::size_t j = d_; j-- > 0;) {
                if (c[j] < spec.box) {
                    ++c[j];
                    break;
                }
                c[j] = 0;
            }
        }
        long long place = 1;
        for (std::size_t j = 0; j < d_; ++j) {
            zero_ += spec.box * place;
            place *= radix;
        }
        table_size_ = static_cast<std::size_t>(2 * zero_ + 1);
    }

    std::size_t volume() const { return points_.size(); }
    const Coords& point(std::size_t i) const { return points_[i]; }

    Tally run_block(std::size_t first) const {
        Tally t;
        std::vector<std::uint32_t> counts(table_size_, 0);
        std::vector<std::size_t> chosen{first};
        counts[static_cast<std::size_t>(zero_)] = 1;
        dfs(t, counts, chosen, 1);
        return t;
    }

private:
    void dfs(Tally& t, std::vector<std::uint32_t>& counts, std::vector<std::size_t>& chosen,
             std::size_t distinct) const {
        const std::size_t placed = chosen.size();
        if (placed == spec_.n) {
            leaf(t, chosen, distinct);
            return;
        }
        // each later point is a new lexicographic maximum x, so x - min and
        // min - x are new differences
        if (spec_.prune && !spec_.claim && t.best != SIZE_MAX && distinct + 2 * (spec_.n - placed) > t.best) {
            return;
        }
        const std::size_t last = chosen.back();
        const std::size_t remaining = spec_.n - placed;
        for (std::size_t next = last + 1; next + remaining <= points_.size(); ++next) {
            std::size_t added = 0;
            const long long cx = codes_[next];
            for (std::size_t q : chosen) {
                const long long cq = codes_[q];
                if (counts[static_cast<std::size_t>(cx - cq + zero_)]++ == 0) {
                    ++added;
                }
                if (counts[static_cast<std::size_t>(cq - cx + zero_)]++ == 0) {
                    ++added;
                }
            }
            chosen.push_back(next);
            dfs(t, counts, chosen, distinct + added);
            chosen.pop_back();
            for (std::size_t q : chosen) {
                const long long cq = codes_[q];
                --counts[static_cast<std::size_t>(cx - cq + zero_)];
                --counts[static_cast<std::size_t>(cq - cx + zero_)];
            }
        }
    }

    void leaf(Tally& t, const std::vector<std::size_t>& chosen, std::size_t distinct) const {
        Config cfg;
        cfg.reserve(chosen.size());
        for (std::size_t i : chosen) {
            cfg.push_back(points_[i]);
        }
        if (spec_.require_full_dim && affine_rank(cfg) != d_) {
            return;
        }
        Config canon = canonical_form(cfg);
        if (spec_.canonical && canon != cfg) {
            return;
        }
        ++t.examined;
        if (spec_.claim) {
            PointSet a = to_point_set(cfg, d_);
            ClaimOptions opt;
            opt.as_conjecture = spec_.as_conjecture;
            ClaimReport rep = check_claim(*spec_.claim, a, std::nullopt, std::nullopt, opt);
            ++t.verdicts[verdict_name(rep.verdict)];
            if (rep.verdict == Verdict::Counterexample) {
                t.violations.push_back(Violation{0, std::move(rep), std::move(a), std::nullopt, std::nullopt});
            }
        }
        t.offer(distinct, std::move(canon));
    }

    const SearchSpec& spec_;
    std::size_t d_;
    std::vector<Coords> points_;
    std::vector<long long> codes_;
    long long zero_ = 0;
    std::size_t table_size_ = 0;
};

inline void finish(SearchResult& out, Tally&& t, const SearchSpec& spec) {
    out.candidates_examined = t.examined;
    out.violations = std::move(t.violations);
    for (const auto& [k, c] : t.verdicts) {
        out.verdict_counts[k] += c;
    }
    if (t.best == SIZE_MAX) {
        throw DomainError("search: no admissible configuration in the box");
    }
    out.best_value = t.best;
    out.witnesses_total = t.witnesses.size();
    for (const auto& w : t.witnesses) {
        if (out.witnesses.size() == spec.max_witnesses) {
            break;
        }
        PointSet ps = to_point_set(w, spec.d);
        // independent re-check with the exact library
        if (difference_set(ps, ps).size() != out.best_value ||
            (spec.require_full_dim && affine_dimension(ps) != spec.d)) {
            throw std::logic_error("search: witness failed re-verification");
        }
        out.witnesses.push_back(std::move(ps));
    }
}

inline void validate(const SearchSpec& spec) {
    if (spec.d == 0 || spec.d > 6) {
        throw DomainError("search: d must lie in 1..6");
    }
    if (spec.box < 0 || spec.box > 1000) {
        throw DomainError("search: box must lie in 0..1000");
    }
    if (spec.n == 0) {
        throw DomainError("search: n must be positive");
    }
    if (spec.n > box_volume(spec.d, spec.box)) {
        throw DomainError("search: n = " + std::to_string(spec.n) + " exceeds the box volume " +
                          std::to_string(box_volume(spec.d, spec.box)));
    }
    if (spec.require_full_dim && spec.n <= spec.d) {
        throw DomainError("search: a full-dimensional set in dimension " + std::to_string(spec.d) + " needs more than " +
                          std::to_string(spec.d) + " points");
    }
}

}  // namespace search_detail

/// Exact minimum of |A - A| over n-subsets of [0, box]^d (full-dimensional
/// ones if required), with all canonical witnesses. With a claim every
/// candidate is evaluated, so pruning is off.
inline SearchResult exhaustive_min_diff(const SearchSpec& spec) {
    if (spec.mode != SearchMode::Exhaustive) {
        throw DomainError("exhaustive_min_diff: spec mode is not EXHAUSTIVE");
    }
    search_detail::validate(spec);
    const Integer count = search_detail::binomial(search_detail::box_volume(spec.d, spec.box), spec.n);
    if (count > Integer(spec.budget)) {
        throw BudgetError("exhaustive search over " + to_string(count) + " subsets exceeds the budget of " +
                          std::to_string(spec.budget));
    }
    if (spec.claim) {
        const ClaimInfo& info = claim_info(*spec.claim);
        if (info.b == Operand::Required || info.line == Operand::Required) {
            throw DomainError(std::string(info.name) + " needs B or l; exhaustive mode checks single-set claims only");
        }
    }
    const search_detail::Enumerator en(spec);

    // one block per first point; a canonical set starts at x_1 = 0
    std::vector<std::size_t> blocks;
    for (std::size_t i = 0; i + spec.n <= en.volume(); ++i) {
        if (!spec.canonical || en.point(i)[0] == 0) {
            blocks.push_back(i);
        }
    }
    std::vector<search_detail::Tally> tallies(blocks.size());
    const unsigned workers = std::min<unsigned>(search_detail::thread_count(spec.threads),
                                                static_cast<unsigned>(std::max<std::size_t>(blocks.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t b = w; b < blocks.size(); b += workers) {
                tallies[b] = en.run_block(blocks[b]);
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    search_detail::Tally total;
    for (auto& t : tallies) {
        total.merge(std::move(t));
    }
    SearchResult out;
    out.seed = spec.seed;
    search_detail::finish(out, std::move(total), spec);
    return out;
}

namespace search_detail {

inline Config random_config(std::mt19937_64& g, const SearchSpec& spec, std::size_t n) {
    while (true) {
        std::set<Coords> pts;
        while (pts.size() < n) {
            Coords c(spec.d);
            for (auto& x : c) {
                x = static_cast<int>(rng::uniform_int(g, 0, spec.box));
            }
            pts.insert(std::move(c));
        }
        Config cfg(pts.begin(), pts.end());
        if (!spec.require_full_dim || affine_rank(cfg) == spec.d) {
            return cfg;
        }
    }
}

inline Direction random_direction(std::mt19937_64& g, std::size_t d) {
    while (true) {
        IntVector v(d);
        bool nonzero = false;
        for (auto& x : v) {
            x = rng::uniform_int(g, -2, 2);
            nonzero = nonzero || x != 0;
        }
        if (nonzero) {
            return Direction(std::move(v));
        }
    }
}

struct TrialOutcome {
    std::size_t diff = 0;
    Config canon;
    std::optional<Violation> violation;
    std::string verdict;
};

inline TrialOutcome run_trial(const SearchSpec& spec, std::uint64_t trial) {
    std::mt19937_64 g = rng::for_trial(spec.seed, trial);
    TrialOutcome out;
    Config cfg = random_config(g, spec, spec.n);
    PointSet a = to_point_set(cfg, spec.d);
    out.diff = difference_set(a, a).size();
    out.canon = canonical_form(cfg);
    if (spec.claim) {
        const ClaimInfo& info = claim_info(*spec.claim);
        std::optional<PointSet> b;
        std::optional<Direction> l;
        if (info.b == Operand::Required) {
            const auto m = static_cast<std::size_t>(rng::uniform_int(g, 1, static_cast<long long>(spec.n)));
            SearchSpec loose = spec;
            loose.require_full_dim = false;
            b = to_point_set(random_config(g, loose, m), spec.d);
        }
        if (info.line == Operand::Required) {
            l = random_direction(g, spec.d);
        }
        ClaimOptions opt;
        opt.as_conjecture = spec.as_conjecture;
        ClaimReport rep = check_claim(*spec.claim, a, b, l, opt);
        out.verdict = verdict_name(rep.verdict);
        if (rep.verdict == Verdict::Counterexample) {
            out.violation = Violation{trial, std::move(rep), a, b, l};
        }
    }
    return out;
}

}  // namespace search_detail

/// Seeded random sampling; each trial has its own generator, so results do
/// not depend on the number of threads.
inline SearchResult random_probe(const SearchSpec& spec) {
    if (spec.mode != SearchMode::Random) {
        throw DomainError("random_probe: spec mode is not RANDOM");
    }
    search_detail::validate(spec);
    if (spec.trials == 0) {
        throw DomainError("random_probe: trials must be positive");
    }
    if (spec.claim) {
        const ClaimInfo& info = claim_info(*spec.claim);
        if ((info.fixed_dim != 0 && static_cast<std::size_t>(info.fixed_dim) != spec.d) ||
            spec.d < static_cast<std::size_t>(info.min_dim)) {
            throw DomainError(std::string(info.name) + " cannot be probed in dimension " + std::to_string(spec.d));
        }
    }
    std::vector<search_detail::TrialOutcome> outcomes(spec.trials);
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(search_detail::thread_count(spec.threads), spec.trials));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::uint64_t t = w; t < spec.trials; t += workers) {
                    outcomes[t] = search_detail::run_trial(spec, t);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    search_detail::Tally total;
    SearchResult out;
    out.seed = spec.seed;
    for (auto& o : outcomes) {
        ++total.examined;
        total.offer(o.diff, std::move(o.canon));
        if (!o.verdict.empty()) {
            ++total.verdicts[o.verdict];
        }
        if (o.violation) {
            total.violations.push_back(std::move(*o.violation));
        }
    }
    search_detail::finish(out, std::move(total), spec);
    return out;
}

inline SearchResult run_search(const SearchSpec& spec) {
    return spec.mode == SearchMode::Exhaustive ? exhaustive_min_diff(spec) : random_probe(spec);
}

}  // namespace sumlab
