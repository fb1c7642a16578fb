#include <catch2/catch_amalgamated.hpp>

#include "actiongraph/sequences.hpp"

#include "test_util.hpp"

using namespace actiongraph;

namespace {

// Independent route: the convolution recurrence, no binomials involved.
BigInt catalan_by_convolution(std::size_t n) {
    std::vector<BigInt> c{1};
    for (std::size_t m = 1; m <= n; ++m) {
        BigInt sum = 0;
        for (std::size_t i = 0; i < m; ++i) sum += c[i] * c[m - 1 - i];
        c.push_back(sum);
    }
    return c[n];
}

BigInt factorial(std::uint64_t n) {
    BigInt f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

TEST_CASE("catalan values") {
    REQUIRE(catalan(0) == 1);
    REQUIRE(catalan(1) == 1);
    REQUIRE(catalan(2) == 2);
    REQUIRE(catalan(3) == 5);
    REQUIRE(catalan(4) == 14);
    // C_20 needs more than 32 bits.
    REQUIRE(catalan(20) == BigInt("6564120420"));
}

TEST_CASE("catalan convolution law") {
    for (std::size_t n = 1; n <= 12; ++n) {
        REQUIRE(catalan(n) == catalan_by_convolution(n));
    }
}

TEST_CASE("fuss-catalan values") {
    REQUIRE(fuss_catalan(0, 2) == 1);
    REQUIRE(fuss_catalan(1, 2) == 1);
    REQUIRE(fuss_catalan(2, 2) == 3);
    REQUIRE(fuss_catalan(3, 2) == 12);
    REQUIRE(fuss_catalan(4, 2) == 55);
}

TEST_CASE("fuss-catalan specializes to catalan at k=1") {
    for (std::size_t n = 0; n <= 12; ++n) {
        REQUIRE(fuss_catalan(n, 1) == catalan(n));
    }
}

TEST_CASE("fuss-catalan rejects k=0") {
    REQUIRE_THROWS_AS(fuss_catalan(3, 0), UnknownSequenceError);
}

TEST_CASE("super catalan values") {
    REQUIRE(super_catalan(0, 0) == 1);
    REQUIRE(super_catalan(0, 1) == 2);
    REQUIRE(super_catalan(0, 2) == 6);
    REQUIRE(super_catalan(0, 3) == 20);
    REQUIRE(super_catalan(0, 4) == 70);
    REQUIRE(super_catalan(1, 1) == 2);
}

TEST_CASE("super catalan matches the factorial form") {
    for (std::uint64_t m = 0; m <= 5; ++m) {
        for (std::uint64_t n = 0; n <= 5; ++n) {
            const BigInt direct = exact_div(factorial(2 * m) * factorial(2 * n),
                                            factorial(m) * factorial(n) * factorial(m + n),
                                            "test");
            REQUIRE(super_catalan(m, n) == direct);
        }
    }
}

TEST_CASE("exact division refuses remainders") {
    REQUIRE(exact_div(BigInt(12), BigInt(4), "test") == 3);
    REQUIRE_THROWS_AS(exact_div(BigInt(7), BigInt(2), "test"), ExactDivisionError);
    REQUIRE_THROWS_AS(exact_div(BigInt(1), BigInt(0), "test"), ExactDivisionError);
}

TEST_CASE("binomial running product") {
    REQUIRE(binomial(0, 0) == 1);
    REQUIRE(binomial(6, 2) == 15);
    REQUIRE(binomial(5, 9) == 0);
    REQUIRE(binomial(40, 20) == BigInt("137846528820"));
}

TEST_CASE("sequence_prefix fills from generators") {
    const Sequence cat = test_util::make_sequence("catalan", 4);
    REQUIRE(cat.values == std::vector<BigInt>{1, 1, 2, 5, 14});
    REQUIRE(cat.name == "catalan");

    const Sequence fuss = test_util::make_sequence("fuss:2", 3);
    REQUIRE(fuss.values == std::vector<BigInt>{1, 1, 3, 12});
    REQUIRE(fuss.params.at("k") == 2);

    const Sequence sup = test_util::make_sequence("super:0", 4);
    REQUIRE(sup.values == std::vector<BigInt>{1, 2, 6, 20, 70});
    REQUIRE(sup.params.at("m") == 0);
}

TEST_CASE("sequence_prefix passes custom values through verbatim") {
    const Sequence s = test_util::make_sequence("custom:1,1,1", 2);
    REQUIRE(s.values == std::vector<BigInt>{1, 1, 1});
    // No positivity filtering here; zero stays.
    const Sequence zero = test_util::make_sequence("custom:1,0,7", 2);
    REQUIRE(zero.values[1] == 0);
}

TEST_CASE("custom list shorter than the request is rejected") {
    REQUIRE_THROWS_AS(test_util::make_sequence("custom:1,1,1", 5), MalformedCustomError);
}

TEST_CASE("family spec parsing errors") {
    REQUIRE_THROWS_AS(parse_family("motzkin"), UnknownSequenceError);
    REQUIRE_THROWS_AS(parse_family("fuss:0"), UnknownSequenceError);
    REQUIRE_THROWS_AS(parse_family("fuss:x"), UnknownSequenceError);
    REQUIRE_THROWS_AS(parse_family("custom:"), MalformedCustomError);
    REQUIRE_THROWS_AS(parse_family("custom:1,-2"), MalformedCustomError);
    REQUIRE_THROWS_AS(parse_family("custom:1,,2"), MalformedCustomError);
}

TEST_CASE("big custom values parse exactly") {
    const SequenceFamily family = parse_family("custom:123456789012345678901234567890");
    REQUIRE(family.custom[0] == BigInt("123456789012345678901234567890"));
}
