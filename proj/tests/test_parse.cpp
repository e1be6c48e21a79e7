#include "cbdiv/parse.hpp"

#include <catch_amalgamated.hpp>

using namespace cbdiv;

TEST_CASE("algebra names") {
    CHECK(parse_algebra("sl4") == 4);
    CHECK(parse_algebra(" sl12 ") == 12);
    CHECK_THROWS_AS(parse_algebra("so5"), validation_error);
    CHECK_THROWS_AS(parse_algebra("sl1"), validation_error);
}

TEST_CASE("weights in both syntaxes") {
    CHECK(parse_weight("[3,1,1,0]", 4) == Weight{{3, 1, 1, 0}});
    CHECK(parse_weight("2w1+w3", 4) == Weight{{3, 1, 1, 0}});
    CHECK(parse_weight("w2", 3) == Weight{{1, 1, 0}});
    CHECK(parse_weight("0", 5) == zero_weight(5));
    CHECK_THROWS_AS(parse_weight("[1,0]", 3), validation_error);
    CHECK_THROWS_AS(parse_weight("[0,1,0]", 3), validation_error);
    CHECK_THROWS_AS(parse_weight("w5", 4), validation_error);
    CHECK_THROWS_AS(parse_weight("w1+", 4), validation_error);
}

TEST_CASE("weight tuples with repetition") {
    WeightTuple t = parse_weight_tuple("[1,0,0,0];[3,1,1,0]^3", 4);
    REQUIRE(t.n() == 4);
    CHECK(t.weights[0] == fundamental_weight(4, 1));
    for (int i = 1; i < 4; ++i) CHECK(t.weights[static_cast<std::size_t>(i)] == Weight{{3, 1, 1, 0}});

    WeightTuple s = parse_weight_tuple("w2^6", 4);
    CHECK(s.n() == 6);
    CHECK(all_equal_weights(s));

    CHECK_THROWS_AS(parse_weight_tuple("", 3), validation_error);
    CHECK_THROWS_AS(parse_weight_tuple("w1^0", 3), validation_error);
}

TEST_CASE("rational lists") {
    auto qs = parse_rational_list("1/4^9");
    CHECK(qs.size() == 9);
    CHECK(qs.front() == Rat(1, 4));

    auto mixed = parse_rational_list("1/2;1/3^2;1");
    REQUIRE(mixed.size() == 4);
    CHECK(mixed[0] == Rat(1, 2));
    CHECK(mixed[1] == Rat(1, 3));
    CHECK(mixed[3] == Rat(1));

    CHECK_THROWS_AS(parse_rational_list("1/0"), validation_error);
}

TEST_CASE("F-curve blocks") {
    FCurve curve = parse_fcurve("1|2|3|4,5,6", 6);
    CHECK(curve.block_sizes() == std::array<int, 4>{1, 1, 1, 3});
    CHECK(curve.str() == "1|2|3|4,5,6");

    CHECK_THROWS_AS(parse_fcurve("1|2|3", 6), validation_error);
    CHECK_THROWS_AS(parse_fcurve("1|2|3|4,5", 6), validation_error);
    CHECK_THROWS_AS(parse_fcurve("1|1|2|3,4,5", 5), validation_error);
}
