#include <gtest/gtest.h>

#include <random>

#include "convert.hpp"
#include "oracle.hpp"
#include "sumlab/constructions.hpp"
#include "sumlab/incidence.hpp"

using namespace sumlab;
using testing_support::to_ints;

namespace {

PointSet grid(int w, int h) {
    std::vector<Point> pts;
    for (int i = 0; i < w; ++i) {
        for (int j = 0; j < h; ++j) {
            pts.push_back(Point{i, j});
        }
    }
    return PointSet(2, pts);
}

PointSet random_set(std::mt19937_64& rng, std::size_t d, int box, std::size_t n) {
    std::uniform_int_distribution<int> coord(0, box);
    std::vector<Point> pts;
    std::set<Point> seen;
    while (pts.size() < n) {
        std::vector<Rational> c(d);
        for (auto& x : c) {
            x = coord(rng);
        }
        Point p(c);
        if (seen.insert(p).second) {
            pts.push_back(p);
        }
    }
    return PointSet(d, pts);
}

std::vector<std::size_t> class_sizes(const LinePartition& part) {
    std::vector<std::size_t> out;
    for (const auto& c : part.classes) {
        out.push_back(c.points.size());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Direction, Canonical) {
    EXPECT_EQ(Direction({-2, 4}).vec(), (IntVector{1, -2}));
    EXPECT_EQ(Direction({0, -3, 6}).vec(), (IntVector{0, 1, -2}));
    EXPECT_THROW(Direction({0, 0}), DomainError);
}

TEST(Hyperplane, Canonical) {
    Hyperplane h(std::vector<Rational>{Rational(-1) / 2, Rational(1)}, Rational(3));
    EXPECT_EQ(h.normal(), (IntVector{1, -2}));
    EXPECT_EQ(h.offset(), Rational(-6));
    EXPECT_EQ(h, Hyperplane(IntVector{-2, 4}, 12));
    EXPECT_THROW(Hyperplane(IntVector{0, 0}, 1), DomainError);
}

TEST(LinePartition, Examples) {
    auto tri = PointSet::of({{0, 0}, {1, 0}, {0, 1}});
    auto part = line_partition(tri, Direction::axis(2, 1));
    EXPECT_EQ(part.count(), 2u);
    EXPECT_EQ(class_sizes(part), (std::vector<std::size_t>{1, 2}));

    EXPECT_EQ(count_lines(PointSet::of({{0}, {1}, {2}}), Direction::axis(1, 1)), 1u);

    auto st = stanchescu_dk(2, 3);
    auto sp = line_partition(st, Direction::axis(2, 1));
    EXPECT_EQ(class_sizes(sp), (std::vector<std::size_t>{3, 3}));
    EXPECT_THROW(line_partition(st, Direction::axis(3, 1)), DimensionError);
}

TEST(LinePartition, RandomAgainstOracle) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = 2 + trial % 3;
        auto a = random_set(rng, d, 3, 1 + trial % 12);
        IntVector l(d);
        std::uniform_int_distribution<int> c(-2, 2);
        do {
            for (auto& x : l) {
                x = c(rng);
            }
        } while (std::all_of(l.begin(), l.end(), [](const Integer& x) { return x == 0; }));
        oracle::IPoint li;
        for (const auto& x : l) {
            li.push_back(static_cast<long long>(x));
        }
        const Direction dir(l);
        auto part = line_partition(a, dir);
        EXPECT_EQ(part.count(), oracle::line_count(to_ints(a), li));
        std::size_t total = 0;
        for (const auto& cls : part.classes) {
            total += cls.points.size();
            for (const auto& p : cls.points) {
                EXPECT_TRUE(oracle::parallel(to_ints(PointSet(d, {p - cls.points.front()})).front(), li) ||
                            p == cls.points.front());
            }
        }
        EXPECT_EQ(total, a.size());
        // translation invariance of class sizes
        Point t(std::vector<Rational>(d, Rational(5)));
        EXPECT_EQ(class_sizes(line_partition(translate(a, t), dir)), class_sizes(part));
    }
}

TEST(MinLineCover, Examples) {
    auto g = grid(3, 3);
    auto c = min_line_cover(g);
    EXPECT_EQ(c.count, 3u);
    EXPECT_EQ(c.count, oracle::min_line_cover_box(to_ints(g), 2));

    EXPECT_EQ(min_line_cover(PointSet::of({{0, 0}, {1, 2}, {2, 4}})).count, 1u);
    auto sdt = stan_doubling_tight(3, 4);
    EXPECT_EQ(min_line_cover(sdt).count, 4u);
    EXPECT_EQ(min_line_cover(sdt).count, oracle::min_line_cover_box(to_ints(sdt), 3));
    EXPECT_THROW(min_line_cover(PointSet::of({{0, 0}})), DomainError);
}

TEST(MinLineCover, RandomAgainstBoxOracle) {
    // Points in [0,3]^2: every pairwise difference direction lies in [-3,3]^2.
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t d = 2 + trial % 2;
        auto a = random_set(rng, d, 3, 2 + trial % 8);
        auto c = min_line_cover(a);
        EXPECT_EQ(c.count, oracle::min_line_cover_box(to_ints(a), 3));
        EXPECT_EQ(count_lines(a, c.direction), c.count);
        if (affine_dimension(a) == d && c.count < a.size()) {
            EXPECT_GE(c.count, 1u);
        }
    }
}

TEST(MinLineCover, AllSingletonsFallback) {
    // Three non-collinear points: every difference direction gives 2 lines.
    auto c = min_line_cover(PointSet::of({{0, 0}, {1, 0}, {0, 1}}));
    EXPECT_EQ(c.count, 2u);
    EXPECT_EQ(c.direction.vec(), (IntVector{0, 1}));
}

TEST(SupportingHyperplanes, Examples) {
    auto g = grid(3, 3);
    auto hs = supporting_hyperplanes(g, Direction::axis(2, 1));
    ASSERT_EQ(hs.size(), 2u);
    EXPECT_EQ(hs[0], Hyperplane(IntVector{0, 1}, 0));
    EXPECT_EQ(hs[1], Hyperplane(IntVector{0, 1}, 2));

    auto tri = PointSet::of({{0, 0}, {1, 0}, {0, 1}});
    auto ht = supporting_hyperplanes(tri, Direction::axis(2, 2));
    ASSERT_EQ(ht.size(), 2u);
    EXPECT_EQ(ht[0], Hyperplane(IntVector{1, 0}, 0));
    EXPECT_EQ(ht[1], Hyperplane(IntVector{1, 0}, 1));

    auto st = stanchescu_dk(3, 2);
    auto hst = supporting_hyperplanes(st, Direction::axis(3, 2));
    // T + P_k = {0, e1} + {0, e2} lies on x3 = 0.
    EXPECT_NE(std::find(hst.begin(), hst.end(), Hyperplane::coordinate(3, 3)), hst.end());
    for (const auto& h : hst) {
        EXPECT_TRUE(h.parallel_to(Direction::axis(3, 2)));
        EXPECT_TRUE(supporting_side(st, h).has_value());
        EXPECT_GE(incidence_count(st, h), 1u);
    }

    EXPECT_THROW(supporting_hyperplanes(PointSet::of({{0, 0}, {0, 3}}), Direction::axis(2, 2)), DomainError);
}

TEST(SupportingHyperplanes, RandomAreSupporting) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t d = 2 + trial % 3;
        auto a = random_set(rng, d, 3, d + 2 + trial % 6);
        const Direction l = Direction::axis(d, 1 + trial % d);
        std::vector<Hyperplane> hs;
        try {
            hs = supporting_hyperplanes(a, l);
        } catch (const DomainError&) {
            continue;  // projection not full-dimensional
        }
        ASSERT_FALSE(hs.empty());
        for (const auto& h : hs) {
            EXPECT_TRUE(h.parallel_to(l));
            EXPECT_TRUE(supporting_side(a, h).has_value());
            EXPECT_GE(incidence_count(a, h), d - 1);
        }
        auto major = major_hyperplane(a, l);
        auto slices = hyperplane_slices(a, major);
        EXPECT_GE(slices.front().points.size(), slices.back().points.size());
        EXPECT_EQ(slices.front().plane, major);
    }
}

TEST(MajorHyperplane, Examples) {
    auto slab = grid(3, 2);
    auto h = major_hyperplane(slab, Direction::axis(2, 1));
    EXPECT_EQ(h, Hyperplane(IntVector{0, 1}, 0));
    EXPECT_EQ(incidence_count(slab, h), 3u);

    auto a = PointSet::of({{0, 0}, {1, 0}, {2, 0}, {0, 1}});
    auto ha = major_hyperplane(a, Direction::axis(2, 1));
    EXPECT_EQ(ha, Hyperplane(IntVector{0, 1}, 0));
    EXPECT_EQ(incidence_count(a, ha), 3u);

    auto st = stanchescu_dk(2, 4);
    EXPECT_EQ(incidence_count(st, major_hyperplane(st, Direction::axis(2, 1))), 4u);
}

TEST(HyperplaneSlices, Examples) {
    auto g = grid(3, 3);
    auto s = hyperplane_slices(g, Hyperplane(IntVector{0, 1}, 0));
    ASSERT_EQ(s.size(), 3u);
    for (const auto& sl : s) {
        EXPECT_EQ(sl.points.size(), 3u);
    }
    // supported from the larger side: order is descending
    auto top = hyperplane_slices(g, Hyperplane(IntVector{0, 1}, 2));
    EXPECT_EQ(top.front().plane.offset(), Rational(2));
    EXPECT_EQ(top.back().plane.offset(), Rational(0));

    auto line = PointSet::of({{0, 1}, {4, 1}});
    EXPECT_EQ(hyperplane_slices(line, Hyperplane(IntVector{0, 1}, 1)).size(), 1u);

    auto st = stanchescu_dk(3, 2);
    auto major = major_hyperplane(st, Direction::axis(3, 2));
    EXPECT_EQ(major, Hyperplane::coordinate(3, 3));
    auto ss = hyperplane_slices(st, major);
    ASSERT_EQ(ss.size(), 2u);
    EXPECT_EQ(ss[0].points.size(), 4u);
    EXPECT_EQ(ss[1].points.size(), 4u);
}

TEST(GeneralPosition, Lines) {
    auto a = dlines_general_position(3, {2, 2, 2});
    EXPECT_TRUE(lines_in_general_position(line_partition(a, Direction::axis(3, 3))));
    // three collinear bases lie on a 1-dim affine subspace
    auto b = PointSet::of({{0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {1, 0, 1}, {2, 0, 0}});
    EXPECT_FALSE(lines_in_general_position(line_partition(b, Direction::axis(3, 3))));
}
