#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdyn/mapdef.hpp"
#include "test_util.hpp"

using namespace pdyn;
using test_util::Rng;

TEST_CASE("validate accepts the Collatz coefficients") {
    PiecewiseMap map = validate(2, {0, 1}, {1, 3});
    CHECK(map.p == 2);
    CHECK(map.a == std::vector<BigInt>{0, 1});
    CHECK(map.b == std::vector<BigInt>{1, 3});
    CHECK(map == std::get<PiecewiseMap>(builtin("collatz")));
}

TEST_CASE("validate rejects non-integral and degenerate maps") {
    CHECK_THROWS_WITH_AS(validate(2, {1, 1}, {1, 3}),
                         doctest::Contains("p must divide a0"), MapError);
    try {
        validate(2, {1, 1}, {1, 3});
    } catch (const MapError& e) {
        CHECK(e.kind() == MapErrorKind::NonIntegralBranch);
    }
    try {
        validate(1, {0, 1}, {1});
    } catch (const MapError& e) {
        CHECK(e.kind() == MapErrorKind::ModulusTooSmall);
    }
    try {
        validate(2, {}, {1});
    } catch (const MapError& e) {
        CHECK(e.kind() == MapErrorKind::EmptyCoefficients);
    }
}

TEST_CASE("validate normalizes trailing zeros, keeps the lone zero") {
    PiecewiseMap map = validate(2, {0, 1, 0, 0}, {0, 0});
    CHECK(map.a == std::vector<BigInt>{0, 1});
    CHECK(map.b == std::vector<BigInt>{0});
}

TEST_CASE("eval on builtins") {
    Map collatz = builtin("collatz");
    Map inverse = builtin("inverse-collatz");

    auto [v1, b1] = eval(collatz, 3);
    CHECK(v1 == 10);
    CHECK(b1 == BranchTag::NonDivisible);

    auto [v2, b2] = eval(collatz, 4);
    CHECK(v2 == 2);
    CHECK(b2 == BranchTag::Divisible);

    auto [v3, b3] = eval(collatz, 0);
    CHECK(v3 == 0);
    CHECK(b3 == BranchTag::Divisible);

    auto [v4, b4] = eval(inverse, 4);
    CHECK(v4 == 1);
    CHECK(b4 == BranchTag::Divisible);

    auto [v5, b5] = eval(inverse, 3);
    CHECK(v5 == 6);
    CHECK(b5 == BranchTag::NonDivisible);
}

TEST_CASE("unknown builtin") {
    CHECK_THROWS_AS(builtin("kollatz"), MapError);
    try {
        builtin("kollatz");
    } catch (const MapError& e) {
        CHECK(e.kind() == MapErrorKind::UnknownBuiltin);
    }
}

TEST_CASE("eval(collatz) agrees with a hand-written oracle on |n| <= 10^4") {
    Map collatz = builtin("collatz");
    for (int n = -10000; n <= 10000; ++n) {
        CAPTURE(n);
        REQUIRE(eval(collatz, n).value == test_util::collatz_step(n));
    }
}

TEST_CASE("Horner evaluation matches naive power summation on random maps") {
    Rng rng(20260809);
    for (int trial = 0; trial < 200; ++trial) {
        PiecewiseMap map = test_util::random_valid_map(rng, {2, 3, 5}, 6, 4);
        for (int rep = 0; rep < 20; ++rep) {
            BigInt x = test_util::rand_int(rng, -1000, 1000);
            auto [value, branch] = eval(map, x);
            if (branch == BranchTag::Divisible) {
                BigInt numerator = test_util::naive_poly_eval(map.a, x);
                REQUIRE(mod_floor(numerator, map.p) == 0);
                REQUIRE(value == numerator / map.p);
            } else {
                REQUIRE(value == test_util::naive_poly_eval(map.b, x));
            }
        }
    }
}

TEST_CASE("branch tag matches divisibility") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        PiecewiseMap map = test_util::random_valid_map(rng, {2, 3, 5}, 4, 3);
        for (int x = -50; x <= 50; ++x) {
            bool div = mod_floor(BigInt(x), map.p) == 0;
            CHECK(classify(map, x) ==
                  (div ? BranchTag::Divisible : BranchTag::NonDivisible));
        }
    }
}

TEST_CASE("identity_term is p*f(x) - x on either branch") {
    // The telescoping step behind every certificate in this project.
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        PiecewiseMap map = test_util::random_valid_map(rng, {2, 3, 5}, 5, 3);
        for (int rep = 0; rep < 10; ++rep) {
            BigInt x = test_util::rand_int(rng, -500, 500);
            CHECK(identity_term(map, x) == map.p * eval(map, x).value - x);
        }
    }
}
