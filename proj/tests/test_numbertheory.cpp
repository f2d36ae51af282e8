#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "coprime/errors.hpp"
#include "coprime/numbertheory.hpp"
#include "oracles.hpp"

using namespace coprime;

TEST_CASE("sieve_primes small values") {
    CHECK(nt::sieve_primes(10) == std::vector<std::int64_t>{2, 3, 5, 7});
    CHECK(nt::sieve_primes(1).empty());
    CHECK(nt::sieve_primes(0).empty());
    CHECK(nt::sieve_primes(2) == std::vector<std::int64_t>{2});
}

TEST_CASE("sieve_primes matches trial division") {
    for (std::int64_t n : {3, 10, 97, 100, 1000, 10000}) {
        CAPTURE(n);
        CHECK(nt::sieve_primes(n) == oracles::trial_division_primes(n));
    }
    CHECK(nt::sieve_primes(100).size() == 25);
}

TEST_CASE("sieve_primes guards") {
    CHECK_THROWS_AS(nt::sieve_primes(-1), std::domain_error);
    CHECK_THROWS_AS(nt::sieve_primes(101, /*cap=*/100), CapExceeded);
    CHECK_NOTHROW(nt::sieve_primes(100, /*cap=*/100));
    CHECK_THROWS_AS(nt::sieve_primes(nt::kDefaultSieveCap + 1), CapExceeded);
}

TEST_CASE("prime_pi known values and monotonicity") {
    CHECK(nt::prime_pi(0) == 0);
    CHECK(nt::prime_pi(1) == 0);
    CHECK(nt::prime_pi(2) == 1);
    CHECK(nt::prime_pi(10) == 4);
    CHECK(nt::prime_pi(35) == 11);

    // reference points, re-derived from the trial-division oracle
    for (auto [n, pi] : {std::pair<std::int64_t, std::int64_t>{10, 4}, {100, 25}, {1000, 168}}) {
        CAPTURE(n);
        CHECK(nt::prime_pi(n) == pi);
        CHECK(static_cast<std::int64_t>(oracles::trial_division_primes(n).size()) == pi);
    }

    std::int64_t prev = 0;
    for (std::int64_t n = 0; n <= 300; ++n) {
        auto cur = nt::prime_pi(n);
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("factor table examples") {
    auto t10 = nt::FactorTable::build(10);
    CHECK(t10.l_of(6) == 2);
    CHECK(std::vector<std::int64_t>(t10.factors_of(6).begin(), t10.factors_of(6).end()) ==
          std::vector<std::int64_t>{2, 3});

    auto t35 = nt::FactorTable::build(35);
    CHECK(std::vector<std::int64_t>(t35.factors_of(35).begin(), t35.factors_of(35).end()) ==
          std::vector<std::int64_t>{5, 7});

    auto t64 = nt::FactorTable::build(64);
    CHECK(t64.l_of(64) == 1);
    CHECK(t64.factors_of(64).size() == 1);
    CHECK(t64.factors_of(64)[0] == 2);
}

TEST_CASE("factor table invariants") {
    const std::int64_t n = 1000;
    auto t = nt::FactorTable::build(n);

    CHECK(t.prime_count() == nt::prime_pi(n));
    for (std::int64_t p : t.primes()) CHECK(oracles::trial_division_prime(p));

    // prime_index is a bijection onto 0..k-1
    std::vector<bool> hit(static_cast<std::size_t>(t.prime_count()), false);
    for (std::int64_t p : t.primes()) {
        int idx = t.prime_index(p);
        REQUIRE(idx >= 0);
        REQUIRE(idx < t.prime_count());
        CHECK(!hit[static_cast<std::size_t>(idx)]);
        hit[static_cast<std::size_t>(idx)] = true;
    }
    CHECK(t.prime_index(4) == -1);
    CHECK(t.prime_index(1) == -1);
    CHECK(t.prime_index(n + 100) == -1);

    for (std::int64_t v = 2; v <= n; ++v) {
        auto fs = t.factors_of(v);
        REQUIRE(fs.size() >= 1);
        CHECK(t.l_of(v) == static_cast<int>(fs.size()));

        // ascending, each divides v, and max powers reconstruct v
        std::int64_t rebuilt = 1;
        std::int64_t prev = 1;
        for (std::int64_t p : fs) {
            CHECK(p > prev);
            prev = p;
            CHECK(v % p == 0);
            std::int64_t power = 1;
            while (v % (power * p) == 0) power *= p;
            rebuilt *= power;
        }
        CHECK(rebuilt == v);

        // v prime  <=>  l_v = 1 and factors = [v]
        bool is_prime = oracles::trial_division_prime(v);
        CHECK(is_prime == (fs.size() == 1 && fs[0] == v));
    }
}

TEST_CASE("factor table guards") {
    CHECK_THROWS_AS(nt::FactorTable::build(1), std::domain_error);
    CHECK_THROWS_AS(nt::FactorTable::build(0), std::domain_error);
    CHECK_THROWS_AS(nt::FactorTable::build(200, /*cap=*/100), CapExceeded);
    auto t = nt::FactorTable::build(10);
    CHECK_THROWS_AS(t.factors_of(1), std::domain_error);
    CHECK_THROWS_AS(t.factors_of(11), std::domain_error);
}
