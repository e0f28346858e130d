#include "kron/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace kron {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Miller-Rabin with this witness set is exact for all n < 3.3e24,
    // in particular for the whole 64-bit range.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> factors;
    for (std::uint64_t p = 2; p <= n / p; p += (p == 2) ? 1 : 2) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (n > 1)
        factors.emplace_back(n, 1);
    return factors;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base_count = divs.size();
        std::uint64_t pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base_count; ++j)
                divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

namespace {

// Collects every n with phi(n) == m whose prime factors are all < prime_limit.
// Each n is produced exactly once: the recursion peels off the largest prime
// power p^a of n, so branches are keyed by distinct (p, a).
// `candidate_divisors` holds the divisors of the original j; every divisor of
// the current m is among them since m | j throughout.
void inverse_phi_search(std::uint64_t m, std::uint64_t prime_limit, std::uint64_t partial,
                        const std::vector<std::uint64_t>& candidate_divisors,
                        std::vector<std::uint64_t>& out) {
    if (m == 1)
        out.push_back(partial);
    for (std::uint64_t d : candidate_divisors) {
        if (m % d != 0)
            continue;
        const std::uint64_t p = d + 1;
        if (p >= prime_limit || !is_prime(p))
            continue;
        // contribution phi(p^a) = d * p^(a-1) must divide m
        std::uint64_t contribution = d;
        std::uint64_t prime_power = p;
        while (true) {
            inverse_phi_search(m / contribution, p, partial * prime_power, candidate_divisors, out);
            if (contribution > m / p)
                break;
            contribution *= p;
            if (m % contribution != 0)
                break;
            prime_power *= p;
        }
    }
}

// std::map keeps node addresses stable, so returned references survive
// later inserts.
std::map<std::uint64_t, TotientFiber> fiber_cache;
std::shared_mutex fiber_mutex;

} // namespace

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("euler_phi: n must be positive");
    std::uint64_t phi = 1;
    for (const auto& [p, e] : factorize(n)) {
        phi *= p - 1;
        for (int i = 1; i < e; ++i)
            phi *= p;
    }
    return phi;
}

const TotientFiber& inverse_phi(std::uint64_t j) {
    if (j == 0)
        throw std::invalid_argument("inverse_phi: j must be positive");
    // keeps trial-division factorization cheap and fiber members far from
    // the 64-bit boundary (n <= 6j for every preimage n)
    if (j > 1000000000000000ull)
        throw std::invalid_argument("inverse_phi: j exceeds the supported range of 10^15");
    {
        std::shared_lock lock(fiber_mutex);
        auto it = fiber_cache.find(j);
        if (it != fiber_cache.end())
            return it->second;
    }
    TotientFiber fiber;
    fiber.degree = j;
    const std::vector<std::uint64_t> divs = divisors_of(j);
    inverse_phi_search(j, ~0ull, 1, divs, fiber.members);
    std::sort(fiber.members.begin(), fiber.members.end());

    std::unique_lock lock(fiber_mutex);
    auto [it, inserted] = fiber_cache.try_emplace(j, std::move(fiber));
    (void)inserted; // a racing thread may have inserted the same value first
    return it->second;
}

std::uint64_t totient_multiplicity(std::uint64_t j) {
    return inverse_phi(j).members.size();
}

} // namespace kron
