#include "primeray/primality.hpp"

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

using namespace primeray;

TEST_CASE("sieve of 30 lists the textbook primes") {
    const PrimeSet ps = sieve(30);
    const std::vector<std::uint64_t> expected{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    std::vector<std::uint64_t> got;
    ps.for_each_prime([&](std::uint64_t p) { got.push_back(p); });
    CHECK(got == expected);
    CHECK(ps.count() == 10);
    CHECK_FALSE(ps.contains(0));
    CHECK_FALSE(ps.contains(1));
    CHECK_FALSE(ps.contains(9));
    CHECK_FALSE(ps.contains(15));
    CHECK_FALSE(ps.contains(30));
    CHECK_FALSE(ps.contains(31));  // beyond limit
}

TEST_CASE("sieve counts match known values and trial division") {
    CHECK(sieve(1'000'000).count() == 78498);

    const PrimeSet ps = sieve(10'000);
    std::uint64_t brute = 0;
    for (std::uint64_t n = 2; n <= 10'000; ++n) {
        if (testoracle::trial_division_prime(n)) {
            ++brute;
            CHECK(ps.contains(n));
        } else {
            CHECK_FALSE(ps.contains(n));
        }
    }
    CHECK(ps.count() == brute);
    CHECK(brute == 1229);
}

TEST_CASE("sieve rejects out-of-domain limits") {
    CHECK_THROWS_AS(sieve(0), std::invalid_argument);
    CHECK_THROWS_AS(sieve(1), std::invalid_argument);
    CHECK_THROWS_AS(sieve(kSieveLimitCap + 1), std::invalid_argument);
    CHECK_THROWS_AS(wheel_sieve(1), std::invalid_argument);
    CHECK_THROWS_AS(wheel_sieve(kSieveLimitCap + 1), std::invalid_argument);
}

TEST_CASE("is_prime worked values") {
    CHECK(is_prime(7310033));
    CHECK(is_prime(8751629));
    CHECK_FALSE(is_prime(7310037));
    CHECK_FALSE(is_prime(8751657));
    CHECK_FALSE(is_prime(77));
    CHECK_FALSE(is_prime(91));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
}

TEST_CASE("is_prime handles classic pseudoprimes and 64-bit extremes") {
    CHECK_FALSE(is_prime(561));         // Carmichael
    CHECK_FALSE(is_prime(3215031751));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(is_prime(2305843009213693951ULL));    // 2^61 - 1
    CHECK(is_prime(18446744073709551557ULL));   // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551615ULL));
    CHECK_FALSE(is_prime(18446744073709551557ULL + 2));
}

TEST_CASE("is_prime agrees with the sieve exhaustively") {
    const PrimeSet ps = sieve(1'000'000);
    std::uint64_t disagreements = 0;
    for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
        if (is_prime(n) != ps.contains(n)) ++disagreements;
    }
    CHECK(disagreements == 0);
}

TEST_CASE("wheel sieve membership is identical to the plain sieve") {
    for (std::uint64_t limit : {std::uint64_t{2}, std::uint64_t{7}, std::uint64_t{100},
                                std::uint64_t{1'000}, std::uint64_t{10'000}}) {
        CHECK(wheel_sieve(limit) == sieve(limit));
    }
    CHECK(wheel_sieve(100).count() == 25);
}

TEST_CASE("sieve work counters reflect the storage layouts") {
    for (std::uint64_t limit : {std::uint64_t{100}, std::uint64_t{1'000}, std::uint64_t{10'000},
                                std::uint64_t{100'000}}) {
        SieveStats plain_stats;
        SieveStats wheel_stats;
        (void)sieve(limit, &plain_stats);
        (void)wheel_sieve(limit, &wheel_stats);

        CHECK(plain_stats.cells_enumerated == (limit + 1) / 2);
        CHECK(wheel_stats.cells_enumerated <= (8 * limit) / 30 + 8);
        CHECK(wheel_stats.cells_enumerated >= (8 * limit) / 30 - 8);
        CHECK(wheel_stats.composite_marks < plain_stats.composite_marks);
        CHECK(wheel_stats.composite_marks > 0);
    }
}
