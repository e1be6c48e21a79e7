#include "cbdiv/divisor.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace cbdiv;

namespace {
BundleSpec spec_of(int k, int ell, std::vector<Weight> ws) { return make_spec(k, ell, std::move(ws)); }
}

TEST_CASE("four-point degrees") {
    CHECK(degree_on_m04(spec_of(4, 3, {fundamental_weight(4, 1), Weight{{3, 1, 1, 0}},
                                       Weight{{3, 1, 1, 0}}, Weight{{3, 1, 1, 0}}})) == 0);
    CHECK(degree_on_m04(spec_of(2, 1, std::vector<Weight>(4, fundamental_weight(2, 1)))) == 1);
    // a leg forcing rank zero kills the degree
    CHECK(degree_on_m04(spec_of(2, 1, {fundamental_weight(2, 1), zero_weight(2), zero_weight(2),
                                       zero_weight(2)})) == 0);
    // a zero weight makes the bundle a pullback along a forgetful map
    auto& table = fusion_table(LeveledAlgebra(3, 2));
    for (int i = 0; i < table.count(); ++i)
        for (int j = 0; j < table.count(); ++j)
            CHECK(degree_on_m04(LeveledAlgebra(3, 2), table.weight(i), table.weight(j),
                                zero_weight(3), zero_weight(3)) == 0);
    CHECK_THROWS_AS(degree_on_m04(spec_of(2, 1, std::vector<Weight>(5, zero_weight(2)))),
                    validation_error);
}

TEST_CASE("F-curve intersections") {
    BundleSpec family = spec_of(3, 5, std::vector<Weight>(6, Weight{{3, 0, 0}}));
    CHECK(fcurve_intersection(family, fcurve_from_sizes(6, {1, 1, 1, 3})) == 0);

    BundleSpec rows = spec_of(3, 2, std::vector<Weight>(9, fundamental_weight(3, 1)));
    CHECK(fcurve_intersection(rows, fcurve_from_sizes(9, {1, 1, 3, 4})) > 0);

    BundleSpec zeros = spec_of(2, 1, std::vector<Weight>(6, zero_weight(2)));
    for (const auto& sizes : block_size_classes(6))
        CHECK(fcurve_intersection(zeros, fcurve_from_sizes(6, sizes)) == 0);
}

TEST_CASE("intersections depend only on the unordered partition") {
    BundleSpec spec = spec_of(2, 2, std::vector<Weight>(6, fundamental_weight(2, 1)));
    FCurve a(6, {std::vector<int>{1}, {2}, {3, 4}, {5, 6}});
    FCurve b(6, {std::vector<int>{5, 6}, {3, 4}, {2}, {1}});
    FCurve c(6, {std::vector<int>{2}, {5}, {1, 3}, {4, 6}});
    CHECK(a == b);
    CHECK(fcurve_intersection(spec, a) == fcurve_intersection(spec, c));
}

TEST_CASE("intersection vectors and the vanishing probe") {
    BundleSpec sl2 = spec_of(2, 1, std::vector<Weight>(6, fundamental_weight(2, 1)));
    DivisorClass vec = intersection_vector(sl2);
    CHECK(vec.reduced);
    for (const auto& [curve, value] : vec.entries) {
        bool is1113 = curve.block_sizes() == std::array<int, 4>{1, 1, 1, 3};
        CHECK(value == Int(is1113 ? 1 : 0));
    }

    CHECK(divisor_is_zero(spec_of(4, 3, {fundamental_weight(4, 1), Weight{{3, 1, 1, 0}},
                                         Weight{{3, 1, 1, 0}}, Weight{{3, 1, 1, 0}}})));
    CHECK(divisor_is_zero(spec_of(4, 3, {Weight{{2, 2, 1, 0}}, fundamental_weight(4, 1),
                                         Weight{{3, 2, 0, 0}}, Weight{{3, 1, 1, 0}}})));
    CHECK_FALSE(divisor_is_zero(spec_of(2, 1, std::vector<Weight>(4, fundamental_weight(2, 1)))));
}

TEST_CASE("boundary pairings") {
    FCurve tail(6, {std::vector<int>{1}, {2}, {3}, {4, 5, 6}});
    CHECK(boundary_pairing({4, 5, 6}, tail) == -1);
    CHECK(boundary_pairing({1, 2}, tail) == 1);
    CHECK(boundary_pairing({2, 4}, tail) == 0);
    CHECK_THROWS_AS(boundary_pairing({1}, tail), validation_error);

    // closed form against direct subset enumeration
    for (int n = 6; n <= 7; ++n)
        for (const auto& sizes : block_size_classes(n)) {
            FCurve rep = fcurve_from_sizes(n, sizes);
            for (int j = 2; j <= n - 2; ++j) {
                int direct = 0;
                std::vector<int> subset;
                std::function<void(int)> rec = [&](int from) {
                    if (static_cast<int>(subset.size()) == j) {
                        direct += boundary_pairing(subset, rep);
                        return;
                    }
                    for (int p = from; p <= n; ++p) {
                        subset.push_back(p);
                        rec(p + 1);
                        subset.pop_back();
                    }
                };
                rec(1);
                CHECK(boundary_sum_pairing(j, rep) == direct);
            }
        }

    // the pinned consistency values on the six-point tail curve
    CHECK(boundary_sum_pairing(2, tail) == 3);
    CHECK(boundary_sum_pairing(3, tail) == -2);
    CHECK(2 * boundary_sum_pairing(2, tail) + 3 * boundary_sum_pairing(3, tail) == 0);
}

TEST_CASE("symmetric boundary class solve") {
    // zero divisor solves to the zero class
    BundleSpec zeros = spec_of(3, 1, std::vector<Weight>(6, zero_weight(3)));
    for (const auto& [j, b] : symmetric_class(zeros)) CHECK(b == 0);

    // the solve inverts the pairing matrix exactly
    BundleSpec spins = spec_of(2, 1, std::vector<Weight>(6, fundamental_weight(2, 1)));
    auto cls = symmetric_class(spins);
    for (const auto& sizes : block_size_classes(6)) {
        FCurve rep = fcurve_from_sizes(6, sizes);
        Rat paired = 0;
        for (const auto& [j, b] : cls) paired += b * boundary_sum_pairing(j, rep);
        CHECK(paired == Rat(fcurve_intersection(spins, rep)));
    }

    CHECK_THROWS_AS(symmetric_class(spec_of(2, 1, {fundamental_weight(2, 1), zero_weight(2),
                                                   fundamental_weight(2, 1),
                                                   fundamental_weight(2, 1)})),
                    validation_error);
}

TEST_CASE("transposed partners at the critical level") {
    BundleSpec self = spec_of(2, 1, std::vector<Weight>(4, fundamental_weight(2, 1)));
    CHECK(critical_partner_equal(self));

    BundleSpec intro = spec_of(4, 3, {fundamental_weight(4, 1), Weight{{3, 1, 1, 0}},
                                      Weight{{3, 1, 1, 0}}, Weight{{3, 1, 1, 0}}});
    CHECK(critical_partner_equal(intro)); // both sides vanish

    CHECK_THROWS_AS(critical_partner_equal(spec_of(2, 2, std::vector<Weight>(
                        4, fundamental_weight(2, 1)))),
                    validation_error);
}

TEST_CASE("thread count does not change results") {
    BundleSpec spec = spec_of(3, 2, std::vector<Weight>(7, fundamental_weight(3, 1)));
    DivisorClass one = intersection_vector(spec, true, 1);
    DivisorClass many = intersection_vector(spec, true, 4);
    CHECK(one.entries == many.entries);
}
