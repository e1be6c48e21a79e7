#include "cbdiv/hassett.hpp"

#include "cbdiv/parse.hpp"

#include <catch_amalgamated.hpp>

using namespace cbdiv;

TEST_CASE("contraction predicate") {
    HassettWeights quarters(parse_rational_list("1/4^9"));
    CHECK(rho_contracts(quarters, fcurve_from_sizes(9, {1, 1, 1, 6})));
    CHECK(rho_contracts(quarters, fcurve_from_sizes(9, {1, 1, 2, 5})));
    CHECK_FALSE(rho_contracts(quarters, fcurve_from_sizes(9, {1, 1, 3, 4})));
    CHECK_FALSE(rho_contracts(quarters, fcurve_from_sizes(9, {2, 2, 2, 3})));

    HassettWeights sevenths(parse_rational_list("3/7^6"));
    for (const auto& sizes : block_size_classes(6))
        CHECK_FALSE(rho_contracts(sevenths, fcurve_from_sizes(6, sizes)));

    // exact ties count as contracted
    HassettWeights thirds(parse_rational_list("1/3^9"));
    CHECK(rho_contracts(thirds, fcurve_from_sizes(9, {1, 1, 1, 6})));

    // block permutation invariance is literal: the canonical form is
    // order free, and asymmetric weights see only point labels
    HassettWeights mixed(parse_rational_list("1/2;1/4;1/4;1/2;1/4;1/2"));
    FCurve x(6, {std::vector<int>{1, 6}, {2}, {3}, {4, 5}});
    FCurve y(6, {std::vector<int>{4, 5}, {3}, {2}, {1, 6}});
    CHECK(rho_contracts(mixed, x) == rho_contracts(mixed, y));
}

TEST_CASE("contracted sets") {
    HassettWeights quarters(parse_rational_list("1/4^9"));
    auto set = contracted_set(quarters);
    REQUIRE(set.size() == 2);
    CHECK(set[0].block_sizes() == std::array<int, 4>{1, 1, 1, 6});
    CHECK(set[1].block_sizes() == std::array<int, 4>{1, 1, 2, 5});

    // three lightest always too heavy: nothing contracted
    HassettWeights heavy(parse_rational_list("1/2^8"));
    CHECK(contracted_set(heavy).empty());

    // lowering one weight can only grow the contracted set
    auto a = parse_rational_list("1/4^9");
    HassettWeights base(a);
    a[0] = Rat(1, 8);
    HassettWeights lowered(a);
    auto before = contracted_set(base);
    auto after = contracted_set(lowered);
    for (const auto& curve : before)
        CHECK(std::find(after.begin(), after.end(), curve) != after.end());
}

TEST_CASE("divisor versus reduction comparison") {
    BundleSpec rows = make_spec(3, 2, parse_weight_tuple("w1^9", 3).weights);
    HassettWeights quarters(parse_rational_list("1/4^9"));
    auto cmp = compare_contractions(rows, quarters);
    CHECK(cmp.identical());
    CHECK(cmp.both.size() == 2);

    // a zero divisor contracts everything
    BundleSpec zeros = make_spec(3, 1, parse_weight_tuple("0^6", 3).weights);
    HassettWeights sevenths(parse_rational_list("3/7^6"));
    auto cmp2 = compare_contractions(zeros, sevenths);
    CHECK(cmp2.hassett_only.empty());
    CHECK(cmp2.both.empty());
    CHECK(cmp2.divisor_only.size() == block_size_classes(6).size());
}

TEST_CASE("weight validation") {
    CHECK_THROWS_AS(HassettWeights(parse_rational_list("0;1/2;1/2;1/2;1/2;1/2")), validation_error);
    CHECK_THROWS_AS(HassettWeights(parse_rational_list("2;1/2;1/2;1/2")), validation_error);
    CHECK_THROWS_AS(HassettWeights(parse_rational_list("1/4^4")), validation_error);
}
