// Counting Kronecker polynomials by degree: an even-part partition formula
// and an independent truncated generating-function product. The two engines
// share nothing past the inverse totient fibers, which is what makes their
// agreement a meaningful consistency check.
#ifndef KRON_COUNTING_HPP
#define KRON_COUNTING_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace kron {

/// A partition of an even total into even parts: parts[j] = multiplicity of
/// the part j. The summation domain of the b(m) formula.
struct EvenPartition {
    std::map<std::uint64_t, std::uint64_t> parts; // even part -> multiplicity >= 1
    std::uint64_t total = 0;                      // sum of j * parts[j]
};

/// All partitions of m into even parts (m even; the empty partition for
/// m = 0). Intended for cross-checks at small m; the counting engine itself
/// walks the domain without materializing it.
std::vector<EvenPartition> even_partitions(std::uint64_t m);

/// Thrown by count_kronecker_checked when the engines disagree. Always an
/// implementation bug, never a data condition.
struct MismatchError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Truncated power series of the counting generating function: coeffs[n] is
/// the number of Kronecker polynomials of degree n, for n = 0..limit.
struct CountSeries {
    std::uint64_t limit = 0;
    std::vector<mpz_class> coeffs;
};

/// b(m): the number of multisets of cyclotomic polynomials of degree >= 2
/// whose degrees sum to m. Evaluated as a sum over partitions of m into
/// even parts of products of multiset-choose terms. Zero for odd m; b(0)=1.
mpz_class count_nonlinear_products(std::uint64_t m);

/// k(n) via the partition formula: sum over m of C(n-m+2, 2) * b(m), the
/// binomial factor distributing degree n-m over the three weight-one
/// generators z, z-1, z+1.
mpz_class count_kronecker_partition(std::uint64_t n);

/// k(0..limit) via the truncated product of geometric series
/// prod_j (1 - x^j)^(-e_j), with e_1 = 3 and e_j = s(j) for j >= 2.
CountSeries count_kronecker_series(std::uint64_t limit);

/// k(n) by both engines (and, for n <= 12, the canonical enumeration),
/// asserting agreement. Throws MismatchError on disagreement.
mpz_class count_kronecker_checked(std::uint64_t n);

} // namespace kron

#endif
