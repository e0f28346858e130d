#include "kron/counting.hpp"

#include "kron/kronecker.hpp"
#include "kron/numtheory.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace kron {

namespace {

// C(top, pick) with top = mult + s - 1; the multiset coefficient
// ((s over mult)). s == 0 correctly yields 0 for mult >= 1.
mpz_class multiset_choose(std::uint64_t s, std::uint64_t mult) {
    if (s == 0)
        return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), mult + s - 1, mult);
    return out;
}

// Walks ordinary partitions of `remaining` into parts <= part_bound,
// descending; a part t stands for the even part 2t of the original m.
// `s_of_double[t]` is s(2t). `product` carries prod_j C(mu(j)+s(j)-1, mu(j))
// over the parts fixed so far; every completed partition adds its product
// to `total`.
void even_partition_sum(std::uint64_t remaining, std::uint64_t part_bound,
                        const std::vector<std::uint64_t>& s_of_double,
                        const mpz_class& product, mpz_class& total) {
    if (remaining == 0) {
        total += product;
        return;
    }
    for (std::uint64_t part = std::min(part_bound, remaining); part >= 1; --part) {
        const std::uint64_t s = s_of_double[part];
        if (s == 0)
            continue; // no cyclotomic polynomial of degree 2*part
        mpz_class with_part;
        for (std::uint64_t mult = 1; mult * part <= remaining; ++mult) {
            with_part = product * multiset_choose(s, mult);
            even_partition_sum(remaining - mult * part, part - 1, s_of_double, with_part, total);
        }
    }
}

std::map<std::uint64_t, mpz_class> b_cache;
std::shared_mutex b_mutex;

void collect_partitions(std::uint64_t remaining, std::uint64_t part_bound, EvenPartition& current,
                        std::vector<EvenPartition>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (std::uint64_t part = std::min(part_bound, remaining); part >= 2; part -= 2) {
        for (std::uint64_t mult = 1; mult * part <= remaining; ++mult) {
            current.parts[part] = mult;
            collect_partitions(remaining - mult * part, part - 2, current, out);
        }
        current.parts.erase(part);
    }
}

} // namespace

std::vector<EvenPartition> even_partitions(std::uint64_t m) {
    if (m % 2 != 0)
        throw std::invalid_argument("even_partitions: total must be even");
    std::vector<EvenPartition> out;
    EvenPartition scratch;
    collect_partitions(m, m, scratch, out);
    for (EvenPartition& p : out)
        p.total = m;
    return out;
}

mpz_class count_nonlinear_products(std::uint64_t m) {
    if (m % 2 != 0)
        return 0; // cyclotomic degrees >= 2 are all even
    {
        std::shared_lock lock(b_mutex);
        auto it = b_cache.find(m);
        if (it != b_cache.end())
            return it->second;
    }
    const std::uint64_t half = m / 2;
    std::vector<std::uint64_t> s_of_double(half + 1, 0);
    for (std::uint64_t t = 1; t <= half; ++t)
        s_of_double[t] = totient_multiplicity(2 * t);

    mpz_class total = 0;
    even_partition_sum(half, half, s_of_double, 1, total);

    std::unique_lock lock(b_mutex);
    auto [it, inserted] = b_cache.try_emplace(m, std::move(total));
    (void)inserted;
    return it->second;
}

mpz_class count_kronecker_partition(std::uint64_t n) {
    mpz_class total = 0;
    mpz_class weight;
    for (std::uint64_t m = 0; m <= n; m += 2) {
        // C(n - m + 2, 2) choices of (x_0, x_1, x_2) filling degree n - m
        mpz_bin_uiui(weight.get_mpz_t(), n - m + 2, 2);
        total += weight * count_nonlinear_products(m);
    }
    return total;
}

CountSeries count_kronecker_series(std::uint64_t limit) {
    if (limit == 0)
        throw std::invalid_argument("count_kronecker_series: limit must be positive");
    CountSeries series;
    series.limit = limit;
    series.coeffs.assign(limit + 1, 0);
    series.coeffs[0] = 1;

    // Multiply by (1 - x^j)^(-1) e_j times; the in-place prefix pass is the
    // exact truncated product with the geometric series.
    for (std::uint64_t j = 1; j <= limit; ++j) {
        const std::uint64_t exponent = (j == 1) ? totient_multiplicity(1) + 1 : totient_multiplicity(j);
        for (std::uint64_t rep = 0; rep < exponent; ++rep)
            for (std::uint64_t i = j; i <= limit; ++i)
                series.coeffs[i] += series.coeffs[i - j];
    }
    return series;
}

mpz_class count_kronecker_checked(std::uint64_t n) {
    const mpz_class by_partition = count_kronecker_partition(n);
    const mpz_class by_series = count_kronecker_series(std::max<std::uint64_t>(n, 1)).coeffs[n];
    if (by_partition != by_series)
        throw MismatchError("k(" + std::to_string(n) + ") mismatch: partition engine " +
                            by_partition.get_str() + ", series engine " + by_series.get_str());
    if (n >= 1 && n <= 12) {
        const std::size_t by_enumeration = enumerate_canonical(static_cast<unsigned>(n)).size();
        if (by_partition != static_cast<unsigned long>(by_enumeration))
            throw MismatchError("k(" + std::to_string(n) + ") mismatch: partition engine " +
                                by_partition.get_str() + ", canonical enumeration " +
                                std::to_string(by_enumeration));
    }
    return by_partition;
}

} // namespace kron
