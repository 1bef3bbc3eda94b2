#include <gtest/gtest.h>

#include "convert.hpp"
#include "oracle.hpp"
#include "sumlab/constructions.hpp"
#include "sumlab/incidence.hpp"

using namespace sumlab;
using testing_support::to_ints;

TEST(Stanchescu, SmallExample) {
    auto a = stanchescu_dk(2, 3);
    std::vector<Point> expect{{0, 0}, {1, 0}, {2, 0}, {-3, 1}, {-2, 1}, {-1, 1}};
    EXPECT_EQ(a.points(), expect);
    EXPECT_EQ(oracle::diffs(to_ints(a), to_ints(a)).size(), 15u);
}

TEST(Stanchescu, ThreeDimensional) {
    auto a = stanchescu_dk(3, 2);
    EXPECT_EQ(a.size(), 8u);
    EXPECT_EQ(difference_set(a, a).size(), 27u);
    EXPECT_EQ(oracle::diffs(to_ints(a), to_ints(a)).size(), 27u);
}

TEST(Stanchescu, Identities) {
    for (int d = 2; d <= 6; ++d) {
        for (int k = 1; k <= 8; ++k) {
            auto a = stanchescu_dk(d, k);
            EXPECT_EQ(a.size(), static_cast<std::size_t>(2 * (d - 1) * k));
            // with k = 1 the set T u (a_1 - T) spans only a (d-1)-flat
            EXPECT_EQ(affine_dimension(a), static_cast<std::size_t>(k == 1 ? d - 1 : d)) << d << "," << k;
            if (d <= 5 && k <= 6) {
                // (2d - 2 + 1/(d-1)) |A| - (2d^2 - 4d + 3), |A| = 2(d-1)k
                const Rational n = static_cast<long long>(a.size());
                const Rational rhs = (Rational(2 * d - 2) + Rational(1) / (d - 1)) * n - (2 * d * d - 4 * d + 3);
                const auto dd = oracle::diffs(to_ints(a), to_ints(a)).size();
                EXPECT_EQ(Rational(static_cast<long long>(dd)), rhs) << d << "," << k;
            }
        }
    }
}

TEST(FreimanAps, Examples) {
    auto a1 = freiman_aps(1, {5});
    EXPECT_EQ(oracle::sums(to_ints(a1), to_ints(a1)).size(), 9u);
    auto a2 = freiman_aps(2, {3, 3});
    EXPECT_EQ(oracle::sums(to_ints(a2), to_ints(a2)).size(), 15u);
    auto a3 = freiman_aps(3, {2, 2, 2});
    EXPECT_EQ(oracle::sums(to_ints(a3), to_ints(a3)).size(), 18u);
    EXPECT_THROW(freiman_aps(2, {3}), DomainError);
    EXPECT_THROW(freiman_aps(2, {3, 0}), DomainError);
}

TEST(FreimanAps, EqualLengthsMeetBound) {
    for (int d = 1; d <= 3; ++d) {
        for (int len = 1; len <= 6; ++len) {
            auto a = freiman_aps(d, std::vector<int>(d, len));
            const long long n = static_cast<long long>(a.size());
            const long long bound = (d + 1) * n - d * (d + 1) / 2;
            EXPECT_EQ(static_cast<long long>(oracle::sums(to_ints(a), to_ints(a)).size()), bound) << d << "," << len;
        }
    }
}

TEST(StanDoublingTight, Examples) {
    auto a = stan_doubling_tight(3, 4);
    EXPECT_EQ(a.size(), 13u);
    EXPECT_EQ(oracle::sums(to_ints(a), to_ints(a)).size(), 48u);
    auto b = stan_doubling_tight(2, 2);
    EXPECT_EQ(b.size(), 6u);
    EXPECT_EQ(oracle::sums(to_ints(b), to_ints(b)).size(), 15u);
    EXPECT_THROW(stan_doubling_tight(1, 2), DomainError);
}

TEST(StanDoublingTight, Identity) {
    for (int d = 2; d <= 5; ++d) {
        for (int n = 1; n <= 6; ++n) {
            auto a = stan_doubling_tight(d, n);
            EXPECT_EQ(a.size(), static_cast<std::size_t>(3 * n + d - 2));
            const Rational sz = static_cast<long long>(a.size());
            const Rational rhs = (Rational(d) + Rational(4, 3)) * sz - Rational(3 * d * d + 5 * d + 8, 6);
            const auto ss = oracle::sums(to_ints(a), to_ints(a)).size();
            if (d >= 3) {
                EXPECT_EQ(Rational(static_cast<long long>(ss)), rhs) << d << "," << n;
            }
        }
    }
}

TEST(StanDoublingTight, CoverExceedsDimension) {
    // Exhaustive over directions in a box large enough for every pairwise
    // difference of these sets.
    for (int d = 3; d <= 4; ++d) {
        for (int n = 3; n <= 6; ++n) {
            auto a = stan_doubling_tight(d, n);
            const auto cover = oracle::min_line_cover_box(to_ints(a), n > 3 ? 2 : 3);
            EXPECT_EQ(min_line_cover(a).count, cover) << d << "," << n;
            EXPECT_GT(cover, static_cast<std::size_t>(d));
        }
    }
}

TEST(DlinesGeneralPosition, Examples) {
    EXPECT_EQ(dlines_general_position(2, {4, 4}), freiman_aps(2, {4, 4}));
    auto a = dlines_general_position(3, {2, 2, 2});
    const auto dd = oracle::diffs(to_ints(a), to_ints(a)).size();
    EXPECT_GE(Rational(static_cast<long long>(dd)), (Rational(4) + Rational(2, 3)) * 6 - 7);
    auto part = line_partition(a, Direction::axis(3, 3));
    EXPECT_EQ(part.count(), 3u);
    EXPECT_TRUE(lines_in_general_position(part));
    EXPECT_THROW(dlines_general_position(1, {3}), DomainError);
}

TEST(Build, ById) {
    EXPECT_EQ(build({ConstructionKind::StanchescuDk, {{"d", {3}}, {"k", {2}}}}), stanchescu_dk(3, 2));
    EXPECT_EQ(build({ConstructionKind::FreimanAps, {{"d", {2}}, {"lengths", {2, 3}}}}), freiman_aps(2, {2, 3}));
    EXPECT_THROW(build({ConstructionKind::StanDoublingTight, {{"d", {3}}}}), DomainError);
    // deterministic order
    EXPECT_EQ(stanchescu_dk(4, 3).points(), stanchescu_dk(4, 3).points());
}
