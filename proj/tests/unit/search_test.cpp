#include <gtest/gtest.h>

#include "convert.hpp"
#include "oracle.hpp"
#include "sumlab/search.hpp"

using namespace sumlab;
using testing_support::to_ints;

namespace {

SearchSpec exhaustive(std::size_t d, std::size_t n, int box, bool full) {
    SearchSpec s;
    s.d = d;
    s.n = n;
    s.box = box;
    s.require_full_dim = full;
    return s;
}

// min |A-A| over every n-subset of [0,box]^d through the oracle.
std::size_t brute_min(std::size_t d, std::size_t n, int box, bool full) {
    oracle::ISet lattice;
    oracle::IPoint c(d, 0);
    while (true) {
        lattice.push_back(c);
        std::size_t j = 0;
        while (j < d && c[j] == box) {
            c[j++] = 0;
        }
        if (j == d) {
            break;
        }
        ++c[j];
    }
    std::vector<bool> pick(lattice.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(n), true);
    std::size_t best = SIZE_MAX;
    do {
        oracle::ISet a;
        for (std::size_t i = 0; i < lattice.size(); ++i) {
            if (pick[i]) {
                a.push_back(lattice[i]);
            }
        }
        if (full && oracle::affine_dim(a) != d) {
            continue;
        }
        best = std::min(best, oracle::diffs(a, a).size());
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return best;
}

}  // namespace

TEST(Exhaustive, PaperExamples) {
    auto r = exhaustive_min_diff(exhaustive(2, 4, 3, true));
    EXPECT_EQ(r.best_value, 9u);
    EXPECT_NE(std::find(r.witnesses.begin(), r.witnesses.end(), PointSet::of({{0, 0}, {0, 1}, {1, 0}, {1, 1}})),
              r.witnesses.end());
    EXPECT_EQ(exhaustive_min_diff(exhaustive(2, 3, 2, true)).best_value, 7u);
    EXPECT_EQ(exhaustive_min_diff(exhaustive(1, 3, 4, false)).best_value, 5u);
}

TEST(Exhaustive, MatchesBruteForceOracle) {
    struct Case {
        std::size_t d, n;
        int box;
        bool full;
    };
    for (const auto& c : {Case{2, 4, 2, true}, Case{2, 5, 2, true}, Case{2, 3, 3, false}, Case{3, 4, 1, true},
                          Case{3, 5, 1, true}, Case{1, 4, 6, false}}) {
        EXPECT_EQ(exhaustive_min_diff(exhaustive(c.d, c.n, c.box, c.full)).best_value,
                  brute_min(c.d, c.n, c.box, c.full))
            << c.d << " " << c.n << " " << c.box;
    }
}

TEST(Exhaustive, PruningAndCanonicalAreSound) {
    for (const auto& base : {exhaustive(2, 4, 3, true), exhaustive(2, 5, 3, true), exhaustive(3, 5, 1, true)}) {
        auto on = exhaustive_min_diff(base);
        auto spec = base;
        spec.prune = false;
        auto off = exhaustive_min_diff(spec);
        EXPECT_EQ(on.best_value, off.best_value);
        EXPECT_EQ(on.witnesses, off.witnesses);
        EXPECT_EQ(on.witnesses_total, off.witnesses_total);
        EXPECT_LE(on.candidates_examined, off.candidates_examined);
        spec.canonical = false;
        auto raw = exhaustive_min_diff(spec);
        EXPECT_EQ(raw.best_value, on.best_value);
        EXPECT_EQ(raw.witnesses, on.witnesses);
        EXPECT_GT(raw.candidates_examined, off.candidates_examined);
    }
}

TEST(Exhaustive, ThreadCountDoesNotMatter) {
    auto spec = exhaustive(2, 5, 3, true);
    spec.threads = 1;
    auto one = exhaustive_min_diff(spec);
    spec.threads = 5;
    auto five = exhaustive_min_diff(spec);
    EXPECT_EQ(one.best_value, five.best_value);
    EXPECT_EQ(one.witnesses, five.witnesses);
    EXPECT_EQ(one.candidates_examined, five.candidates_examined);
}

TEST(Exhaustive, KnownLowerBounds) {
    for (std::size_t n = 4; n <= 6; ++n) {
        EXPECT_GE(exhaustive_min_diff(exhaustive(2, n, 3, true)).best_value, 3 * n - 3);
    }
    for (std::size_t n = 5; n <= 6; ++n) {
        const auto best = exhaustive_min_diff(exhaustive(3, n, 2, true)).best_value;
        EXPECT_GE(2 * best, 9 * n - 18);
    }
}

TEST(Exhaustive, WithClaim) {
    auto spec = exhaustive(2, 4, 2, true);
    spec.claim = ClaimId::FhuDiff;
    auto r = exhaustive_min_diff(spec);
    EXPECT_TRUE(r.violations.empty());
    EXPECT_EQ(r.verdict_counts.at("CONSISTENT"), r.candidates_examined);
    spec.claim = ClaimId::GsLines;
    EXPECT_THROW(exhaustive_min_diff(spec), DomainError);
}

TEST(Exhaustive, Errors) {
    try {
        exhaustive_min_diff(exhaustive(3, 10, 4, false));
        FAIL() << "expected a budget error";
    } catch (const BudgetError& e) {
        // C(125, 10)
        EXPECT_NE(std::string(e.what()).find("177367091094050"), std::string::npos) << e.what();
    }
    EXPECT_THROW(exhaustive_min_diff(exhaustive(2, 10, 2, false)), DomainError);
    EXPECT_THROW(exhaustive_min_diff(exhaustive(3, 3, 2, true)), DomainError);
}

TEST(RandomProbe, DeterministicAndConsistent) {
    SearchSpec s;
    s.d = 3;
    s.n = 10;
    s.box = 4;
    s.mode = SearchMode::Random;
    s.trials = 300;
    s.seed = 42;
    s.claim = ClaimId::Main;
    s.as_conjecture = true;
    s.require_full_dim = true;
    auto a = random_probe(s);
    s.threads = 3;
    auto b = random_probe(s);
    EXPECT_EQ(a.best_value, b.best_value);
    EXPECT_EQ(a.witnesses, b.witnesses);
    EXPECT_EQ(a.verdict_counts, b.verdict_counts);
    EXPECT_TRUE(a.violations.empty());
    EXPECT_EQ(a.candidates_examined, 300u);
    EXPECT_EQ(a.verdict_counts.at("CONSISTENT"), 300u);
    s.seed = 43;
    auto c = random_probe(s);
    EXPECT_TRUE(c.violations.empty());
}

TEST(RandomProbe, GsLinesWithRandomOperands) {
    SearchSpec s;
    s.d = 2;
    s.n = 8;
    s.box = 5;
    s.mode = SearchMode::Random;
    s.trials = 500;
    s.seed = 7;
    s.claim = ClaimId::GsLines;
    auto r = random_probe(s);
    EXPECT_TRUE(r.violations.empty());
    s.d = 3;
    EXPECT_THROW(random_probe(s), DomainError);
}

TEST(RandomProbe, Errors) {
    SearchSpec s;
    s.mode = SearchMode::Random;
    s.d = 3;
    s.n = 3;
    s.box = 3;
    s.trials = 10;
    s.require_full_dim = true;
    EXPECT_THROW(random_probe(s), DomainError);
    s.require_full_dim = false;
    s.trials = 0;
    EXPECT_THROW(random_probe(s), DomainError);
    s.trials = 5;
    EXPECT_THROW(exhaustive_min_diff(s), DomainError);
}

TEST(Random, UniformDrawIsInRangeAndStable) {
    auto g = rng::for_trial(42, 0);
    for (int i = 0; i < 1000; ++i) {
        const auto v = rng::uniform_int(g, -3, 5);
        EXPECT_GE(v, -3);
        EXPECT_LE(v, 5);
    }
    auto g1 = rng::for_trial(42, 17);
    auto g2 = rng::for_trial(42, 17);
    EXPECT_EQ(g1(), g2());
    EXPECT_EQ(rng::splitmix64(0), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(rng::fnv1a(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(rng::fnv1a("abc"), 0xe71fa2190541574bULL);
}
