#include <gtest/gtest.h>

#include "sumlab/constructions.hpp"
#include "sumlab/json_io.hpp"

using namespace sumlab;
using sumlab::io::json;

TEST(JsonIo, PointSetRoundTrip) {
    const PointSet a(2, {Point({Rational(1, 2), Rational(-3)}), Point({0, 0}), Point({2, 7})});
    const json j = io::to_json(a);
    EXPECT_EQ(j.dump(), R"({"dim":2,"points":[["0","0"],["1/2","-3"],["2","7"]]})");
    EXPECT_EQ(io::point_set_from_json(j), a);
    EXPECT_EQ(io::point_set_from_json(io::parse_document(j.dump())), a);
}

TEST(JsonIo, PointSetAcceptsIntegersAndMeta) {
    const auto j = io::parse_document(R"({"dim":1,"points":[[3],["-2"],[0]],"meta":{"note":"x"}})");
    EXPECT_EQ(io::point_set_from_json(j), PointSet(1, {Point({-2}), Point({0}), Point({3})}));
}

TEST(JsonIo, PointSetRejectsBadInput) {
    const char* bad[] = {
        R"({"dim":2,"points":[["0","0"],["0","0"]]})",   // duplicate
        R"({"dim":2,"points":[["0"]]})",                 // wrong arity
        R"({"dim":0,"points":[]})",
        R"({"points":[]})",
        R"({"dim":1,"points":[["1/0"]]})",
        R"({"dim":1,"points":[["abc"]]})",
        R"({"dim":1,"points":[[1.5]]})",
        R"({"dim":1,"points":"nope"})",
    };
    for (const char* text : bad) {
        EXPECT_THROW(io::point_set_from_json(io::parse_document(text)), ParseError) << text;
    }
    EXPECT_THROW(io::parse_document("{not json"), ParseError);
}

TEST(JsonIo, GeometryRoundTrip) {
    const Direction l(IntVector{1, -2, 0});
    EXPECT_EQ(io::direction_from_json(io::to_json(l)), l);
    EXPECT_THROW(io::direction_from_json(io::parse_document(R"({"vec":["1/2","1"]})")), ParseError);
    EXPECT_THROW(io::direction_from_json(io::parse_document(R"({"vec":["0","0"]})")), ParseError);

    const Hyperplane h(IntVector{0, 2, 4}, Rational(6));
    const json hj = io::to_json(h);
    EXPECT_EQ(hj.dump(), R"({"normal":["0","1","2"],"offset":"3"})");
    EXPECT_EQ(io::hyperplane_from_json(hj), h);

    const AffineMap t(linalg::Matrix{{Rational(0), Rational(1)}, {Rational(1), Rational(1, 3)}}, Point({5, -1}));
    const AffineMap back = io::affine_from_json(io::to_json(t));
    EXPECT_EQ(back.matrix(), t.matrix());
    EXPECT_EQ(back.translation(), t.translation());
}

TEST(JsonIo, TraceRoundTripReplays) {
    const PointSet a = stanchescu_dk(3, 3);
    const PointSet b = freiman_aps(3, {2, 2, 1});
    const Direction l(IntVector{0, 1, 0});
    const Reduction red = reduce(a, b, l);
    const json j = io::to_json(red.trace);
    const CompressionTrace back = io::trace_from_json(io::parse_document(j.dump()));
    EXPECT_EQ(back.steps.size(), red.trace.steps.size());
    EXPECT_EQ(io::to_json(back), j);
    const ReplayReport rep = replay(back);
    EXPECT_TRUE(rep.ok) << rep.message;
    EXPECT_EQ(rep.steps_checked, red.trace.steps.size());
}

TEST(JsonIo, ReportsSerialize) {
    const PointSet a = stanchescu_dk(3, 2);
    const ClaimReport r = check_claim(ClaimId::Main, a);
    const json j = io::to_json(r);
    EXPECT_EQ(j.at("claim"), "MAIN");
    EXPECT_EQ(j.at("verdict"), verdict_name(r.verdict));
    EXPECT_EQ(j.at("lhs"), to_string(r.lhs));
    EXPECT_TRUE(j.at("instance").is_object());

    const json s = io::to_json(structure_diagnose(a));
    for (const char* key : {"direction", "line_count", "major_hyperplane", "major_slice_sizes", "two_hyperplanes",
                            "imbalance", "near_extremal"}) {
        EXPECT_TRUE(s.contains(key)) << key;
    }
    const json p = io::to_json(line_partition(a, Direction(IntVector{0, 1, 0})));
    EXPECT_EQ(p.at("count"), p.at("classes").size());
}

TEST(JsonIo, SearchSpecRoundTrip) {
    SearchSpec s;
    s.d = 2;
    s.n = 5;
    s.box = 3;
    s.mode = SearchMode::Random;
    s.trials = 40;
    s.seed = 99;
    s.claim = ClaimId::GsLines;
    const json j = io::to_json(s);
    EXPECT_FALSE(j.contains("threads"));
    EXPECT_EQ(io::to_json(io::search_spec_from_json(j)), j);
    json bad = j;
    bad["mode"] = "SIDEWAYS";
    EXPECT_THROW(io::search_spec_from_json(bad), ParseError);
    bad = j;
    bad["claim"] = "NOPE";
    EXPECT_THROW(io::search_spec_from_json(bad), ParseError);
}

TEST(JsonIo, SearchResultIsStable) {
    SearchSpec s;
    s.d = 2;
    s.n = 4;
    s.box = 2;
    s.require_full_dim = true;
    const json first = io::to_json(run_search(s));
    s.threads = 3;
    EXPECT_EQ(io::to_json(run_search(s)).dump(), first.dump());
    EXPECT_EQ(first.at("best_value"), 9);
    EXPECT_EQ(first.at("witnesses").size(), first.at("witnesses_total"));
}
