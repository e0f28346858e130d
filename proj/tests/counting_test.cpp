#include "kron/counting.hpp"

#include "kron/kronecker.hpp"
#include "kron/numtheory.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

using namespace kron;

namespace {

// k(1)..k(20)
constexpr long kKnownCounts[] = {3,    9,    19,   43,   81,    159,   277,
                                 501,  831,  1415, 2253, 3673,  5675,  8933,
                                 13447, 20581, 30335, 45345, 65611, 96143};

} // namespace

TEST_SUITE("counting") {

TEST_CASE("b values") {
    CHECK(count_nonlinear_products(0) == 1);
    CHECK(count_nonlinear_products(2) == 3);
    CHECK(count_nonlinear_products(4) == 10);
    CHECK(count_nonlinear_products(6) == 26);
    CHECK(count_nonlinear_products(3) == 0);
    CHECK(count_nonlinear_products(1) == 0);
}

TEST_CASE("even_partitions enumerates the summation domain") {
    CHECK(even_partitions(0).size() == 1); // the empty partition
    CHECK(even_partitions(0)[0].parts.empty());
    // 6 = 6 = 4+2 = 2+2+2
    CHECK(even_partitions(6).size() == 3);
    CHECK_THROWS_AS(even_partitions(5), std::invalid_argument);
    for (const EvenPartition& p : even_partitions(12)) {
        std::uint64_t total = 0;
        for (const auto& [part, mult] : p.parts) {
            CHECK(part % 2 == 0);
            CHECK(part >= 2);
            CHECK(mult >= 1);
            total += part * mult;
        }
        CHECK(total == 12);
        CHECK(p.total == 12);
    }
}

TEST_CASE("b equals the sum over materialized partitions") {
    // independent route: walk the materialized domain and apply the
    // multiset-choose product directly
    for (std::uint64_t m = 0; m <= 20; m += 2) {
        mpz_class total = 0;
        for (const EvenPartition& p : even_partitions(m)) {
            mpz_class product = 1, binom;
            for (const auto& [part, mult] : p.parts) {
                const std::uint64_t s = totient_multiplicity(part);
                if (s == 0) {
                    product = 0;
                    break;
                }
                mpz_bin_uiui(binom.get_mpz_t(), mult + s - 1, mult);
                product *= binom;
            }
            total += product;
        }
        CHECK(total == count_nonlinear_products(m));
    }
}

TEST_CASE("b agrees with the brute-force solution counter for m <= 12") {
    for (std::uint64_t m = 0; m <= 12; ++m)
        CHECK(count_nonlinear_products(m) ==
              mpz_class(static_cast<unsigned long>(test::count_weighted_solutions_from_three(m))));
}

TEST_CASE("partition engine on known values") {
    CHECK(count_kronecker_partition(0) == 1);
    for (std::uint64_t n = 1; n <= 20; ++n)
        CHECK(count_kronecker_partition(n) == kKnownCounts[n - 1]);
}

TEST_CASE("partition engine matches the direct solution counter for n <= 10") {
    for (std::uint64_t n = 0; n <= 10; ++n)
        CHECK(count_kronecker_partition(n) ==
              mpz_class(static_cast<unsigned long>(test::count_weighted_solutions_from_zero(n))));
}

TEST_CASE("series engine basics") {
    const CountSeries series = count_kronecker_series(1);
    REQUIRE(series.coeffs.size() == 2);
    CHECK(series.coeffs[0] == 1);
    CHECK(series.coeffs[1] == 3);
    CHECK_THROWS_AS(count_kronecker_series(0), std::invalid_argument);
}

TEST_CASE("series engine reproduces the known table") {
    const CountSeries series = count_kronecker_series(20);
    CHECK(series.limit == 20);
    CHECK(series.coeffs[0] == 1);
    for (std::uint64_t n = 1; n <= 20; ++n)
        CHECK(series.coeffs[n] == kKnownCounts[n - 1]);
}

TEST_CASE("series engine reaches k(100)") {
    const CountSeries series = count_kronecker_series(100);
    CHECK(series.coeffs[100] == mpz_class("13445370780675"));
}

TEST_CASE("engines agree up to 150") {
    const CountSeries series = count_kronecker_series(150);
    for (std::uint64_t n = 0; n <= 150; ++n)
        REQUIRE(count_kronecker_partition(n) == series.coeffs[n]);
}

TEST_CASE("series coefficients stay nonnegative and start at 1") {
    const CountSeries series = count_kronecker_series(60);
    CHECK(series.coeffs[0] == 1);
    for (const mpz_class& c : series.coeffs)
        CHECK(c >= 0);
}

TEST_CASE("checked counting") {
    CHECK(count_kronecker_checked(0) == 1);
    CHECK(count_kronecker_checked(10) == 1415);
    CHECK(count_kronecker_checked(16) == 20581);
    CHECK(count_kronecker_checked(3) == 19);
}

TEST_CASE("concurrent b queries return consistent results") {
    std::vector<mpz_class> serial(41);
    for (std::uint64_t m = 0; m <= 40; ++m)
        serial[m] = count_nonlinear_products(m);

    std::vector<std::thread> threads;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&, t] {
            std::mt19937_64 rng(t);
            for (int i = 0; i < 100; ++i) {
                const std::uint64_t m = rng() % 41;
                if (count_nonlinear_products(m) != serial[m])
                    ok = false;
            }
        });
    }
    for (auto& th : threads)
        th.join();
    CHECK(ok);
}

} // TEST_SUITE
