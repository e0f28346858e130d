#include "kron/cyclotomic.hpp"

#include "kron/numtheory.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <atomic>
#include <random>
#include <thread>

using namespace kron;

TEST_SUITE("cyclotomic") {

TEST_CASE("explicit small polynomials") {
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(2) == IntPoly{1, 1});
    CHECK(cyclotomic(3) == IntPoly{1, 1, 1});
    CHECK(cyclotomic(4) == IntPoly{1, 0, 1});
    CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
    CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);
}

TEST_CASE("prime index gives all-ones polynomial") {
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 97ull, 379ull}) {
        const IntPoly& g = cyclotomic(p);
        REQUIRE(g.degree() == static_cast<long>(p - 1));
        for (const mpz_class& c : g.coeffs())
            REQUIRE(c == 1);
    }
}

TEST_CASE("divisor product reproduces z^n - 1 for n <= 120") {
    for (std::uint64_t n = 1; n <= 120; ++n) {
        IntPoly product = IntPoly::one();
        for (std::uint64_t d : divisors_of(n))
            product = product * cyclotomic(d);
        REQUIRE(product == IntPoly::unit_root_poly(n));
    }
}

TEST_CASE("degree equals phi(n)") {
    for (std::uint64_t n = 1; n <= 500; ++n)
        REQUIRE(cyclotomic(n).degree() == static_cast<long>(euler_phi(n)));
    // exercise the large-index routes: inflation and largest-prime grouping
    for (std::uint64_t n : {512ull, 729ull, 1001ull, 2310ull, 3333ull, 9240ull, 9999ull, 10000ull})
        REQUIRE(cyclotomic(n).degree() == static_cast<long>(euler_phi(n)));
}

TEST_CASE("agrees with the Moebius-product oracle") {
    for (std::uint64_t n = 1; n <= 128; ++n)
        REQUIRE(cyclotomic(n) == test::cyclotomic_mobius(n));
    for (std::uint64_t n :
         {255ull, 385ull, 512ull, 1001ull, 1155ull, 2310ull, 3333ull, 4785ull, 6930ull, 9999ull, 10000ull})
        REQUIRE(cyclotomic(n) == test::cyclotomic_mobius(n));
}

TEST_CASE("matches the plain divisor recursion where routes diverge") {
    // the implementation switches route above index 300
    for (std::uint64_t n : {301ull, 310ull, 330ull, 420ull, 2310ull, 4620ull}) {
        IntPoly acc = IntPoly::unit_root_poly(n);
        for (std::uint64_t d : divisors_of(n))
            if (d < n)
                acc = div_exact(acc, cyclotomic(d));
        REQUIRE(acc == cyclotomic(n));
    }
}

TEST_CASE("cyclotomics_up_to_degree selects exactly phi(n) <= D") {
    auto entries = cyclotomics_up_to_degree(1);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].index == 1);
    CHECK(entries[1].index == 2);

    entries = cyclotomics_up_to_degree(2);
    std::vector<std::uint64_t> indices;
    for (const auto& e : entries)
        indices.push_back(e.index);
    CHECK(indices == std::vector<std::uint64_t>{1, 2, 3, 4, 6});

    // no cubic cyclotomics: D = 3 adds nothing over D = 2
    CHECK(cyclotomics_up_to_degree(3).size() == 5);

    for (const auto& e : cyclotomics_up_to_degree(20)) {
        CHECK(e.poly.is_monic());
        CHECK(e.poly.degree() == static_cast<long>(euler_phi(e.index)));
        CHECK(e.poly == cyclotomic(e.index));
    }
}

TEST_CASE("count up to degree D equals sum of multiplicities") {
    for (std::uint64_t d_bound : {10ull, 50ull, 100ull}) {
        std::uint64_t expected = 0;
        for (std::uint64_t j = 1; j <= d_bound; ++j)
            expected += totient_multiplicity(j);
        CHECK(cyclotomics_up_to_degree(d_bound).size() == expected);
    }
}

TEST_CASE("entries divide z^index - 1") {
    for (const auto& e : cyclotomics_up_to_degree(16)) {
        const IntPoly q = div_exact(IntPoly::unit_root_poly(e.index), e.poly);
        CHECK(q * e.poly == IntPoly::unit_root_poly(e.index));
    }
}

TEST_CASE("concurrent cyclotomic queries are consistent") {
    std::vector<IntPoly> serial;
    for (std::uint64_t n = 1; n <= 150; ++n)
        serial.push_back(cyclotomic(n));

    std::vector<std::thread> threads;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([&, t] {
            std::mt19937_64 rng(1000 + t);
            for (int i = 0; i < 300; ++i) {
                const std::uint64_t n = 1 + rng() % 150;
                if (!(cyclotomic(n) == serial[n - 1]))
                    ok = false;
            }
        });
    }
    for (auto& th : threads)
        th.join();
    CHECK(ok);
}

} // TEST_SUITE
