#include "kron/cyclotomic.hpp"

#include "kron/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

namespace kron {

namespace {

std::map<std::uint64_t, IntPoly> cyclo_cache;
std::shared_mutex cyclo_mutex;

// Above this index the plain divisor-product division becomes quadratic in n;
// grouped forms of the same recursion keep large indices cheap.
constexpr std::uint64_t kPlainRecursionLimit = 300;

// (z^n - 1) divided by g_d for every proper divisor d of n.
IntPoly by_divisor_products(std::uint64_t n) {
    IntPoly acc = IntPoly::unit_root_poly(n);
    for (std::uint64_t d : divisors_of(n))
        if (d < n)
            acc = div_exact(acc, cyclotomic(d));
    return acc;
}

IntPoly compute(std::uint64_t n) {
    if (n == 1)
        return IntPoly{-1, 1};
    if (n == 2)
        return IntPoly{1, 1};

    const auto factors = factorize(n);
    std::uint64_t radical = 1;
    for (const auto& [p, e] : factors)
        radical *= p;

    // Repeated prime factors only inflate the variable: g_n(z) = g_rad(z^{n/rad}).
    if (radical != n)
        return inflate(cyclotomic(radical), n / radical);

    if (n <= kPlainRecursionLimit)
        return by_divisor_products(n);

    // Squarefree n = q*m with q the largest prime factor: grouping the
    // divisor lattice of z^n - 1 by q gives g_m(z^q) = g_{qm}(z) * g_m(z).
    const std::uint64_t q = factors.back().first;
    const std::uint64_t m = n / q;
    const IntPoly& gm = cyclotomic(m);
    return div_exact(inflate(gm, q), gm);
}

} // namespace

const IntPoly& cyclotomic(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("cyclotomic: n must be positive");
    {
        std::shared_lock lock(cyclo_mutex);
        auto it = cyclo_cache.find(n);
        if (it != cyclo_cache.end())
            return it->second;
    }
    IntPoly g = compute(n);

    std::unique_lock lock(cyclo_mutex);
    auto [it, inserted] = cyclo_cache.try_emplace(n, std::move(g));
    (void)inserted;
    return it->second;
}

std::vector<std::uint64_t> cyclotomic_indices_up_to_degree(std::uint64_t max_degree) {
    if (max_degree == 0)
        throw std::invalid_argument("cyclotomic_indices_up_to_degree: degree bound must be positive");
    std::vector<std::uint64_t> indices;
    for (std::uint64_t j = 1; j <= max_degree; ++j) {
        const TotientFiber& fiber = inverse_phi(j);
        indices.insert(indices.end(), fiber.members.begin(), fiber.members.end());
    }
    std::sort(indices.begin(), indices.end());
    return indices;
}

std::vector<CyclotomicEntry> cyclotomics_up_to_degree(std::uint64_t max_degree) {
    std::vector<CyclotomicEntry> entries;
    for (std::uint64_t n : cyclotomic_indices_up_to_degree(max_degree))
        entries.push_back({n, cyclotomic(n)});
    return entries;
}

} // namespace kron
