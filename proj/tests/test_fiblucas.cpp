#include <doctest.h>

#include "golden/fiblucas.hpp"
#include "golden/quadfield.hpp"
#include "support.hpp"

using golden::GoldenNum;
using golden::Int;
using golden::Rat;

TEST_CASE("fib_pair base cases and small values") {
    CHECK(golden::fib_pair(0) == std::pair<Int, Int>{0, 1});
    CHECK(golden::fib_pair(10) == std::pair<Int, Int>{55, 89});
    CHECK(golden::fib_pair(17) == std::pair<Int, Int>{1597, 2584});
}

TEST_CASE("fib with negative-index extension") {
    CHECK(golden::fib(2) == 1);
    CHECK(golden::fib(-2) == -1);  // F_{-2} = (-1)^3 F_2
    CHECK(golden::fib(100) == Int("354224848179261915075"));
    CHECK(golden::fib(100) == testsupport::fib_iter(100));
    // the recurrence extends leftward: F_{k} = F_{k+2} - F_{k+1}
    for (long k = -30; k <= 30; ++k)
        CHECK(golden::fib(k) == golden::fib(k + 2) - golden::fib(k + 1));
}

TEST_CASE("lucas values") {
    CHECK(golden::lucas(0) == 2);
    CHECK(golden::lucas(1) == 1);
    CHECK(golden::lucas(4) == 7);
    CHECK(golden::lucas(16) == 2207);
}

TEST_CASE("binet_check") {
    CHECK(golden::binet_check(1));
    CHECK(golden::binet_check(0));
    CHECK(golden::binet_check(-7));
}

TEST_CASE("fast doubling equals the iterative recurrence up to 5000") {
    mpz_class a = 0, b = 1;  // running (F_k, F_{k+1})
    for (long k = 0; k <= 5000; ++k) {
        auto [fk, fk1] = golden::fib_pair(static_cast<unsigned long>(k));
        REQUIRE(fk == a);
        REQUIRE(fk1 == b);
        mpz_class t = a + b;
        a = b;
        b = t;
    }
}

TEST_CASE("L_k = F_{k-1} + F_{k+1}") {
    for (long k = 1; k <= 2000; ++k) {
        CHECK(golden::lucas(static_cast<unsigned long>(k)) ==
              golden::fib(k - 1) + golden::fib(k + 1));
    }
}

TEST_CASE("binet identities hold for |k| <= 300") {
    for (long k = -300; k <= 300; ++k) REQUIRE(golden::binet_check(k));
}

TEST_CASE("F_k >= phi^{k-2} for 1 <= k <= 500") {
    for (long k = 1; k <= 500; ++k) {
        GoldenNum diff = GoldenNum(Rat(golden::fib(k))) - golden::phi_pow(k - 2);
        REQUIRE(golden::sign(diff) >= 0);
    }
}
