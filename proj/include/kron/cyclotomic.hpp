// Cyclotomic polynomials g_n via the divisor recursion
// z^n - 1 = prod_{d|n} g_d.
#ifndef KRON_CYCLOTOMIC_HPP
#define KRON_CYCLOTOMIC_HPP

#include "kron/int_poly.hpp"

#include <cstdint>
#include <vector>

namespace kron {

struct CyclotomicEntry {
    std::uint64_t index = 0; // n
    IntPoly poly;            // g_n, monic of degree phi(n)
};

/// g_n, the n-th cyclotomic polynomial. Memoized; the returned reference
/// stays valid for the lifetime of the program.
const IntPoly& cyclotomic(std::uint64_t n);

/// Every g_n with phi(n) <= max_degree, sorted by index n. Completeness
/// comes from the inverse totient fibers for j = 1..max_degree.
std::vector<CyclotomicEntry> cyclotomics_up_to_degree(std::uint64_t max_degree);

/// The indices of cyclotomics_up_to_degree, without materializing the
/// polynomials.
std::vector<std::uint64_t> cyclotomic_indices_up_to_degree(std::uint64_t max_degree);

} // namespace kron

#endif
