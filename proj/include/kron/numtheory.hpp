// Euler totient, inverse totient fibers, and the prime machinery behind them.
#ifndef KRON_NUMTHEORY_HPP
#define KRON_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

namespace kron {

/// The complete preimage of j under the Euler totient.
struct TotientFiber {
    std::uint64_t degree = 0;           // j
    std::vector<std::uint64_t> members; // ascending n with phi(n) == j
};

/// Deterministic primality test, valid for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs, ascending. factorize(1)
/// is empty.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors_of(std::uint64_t n);

/// Euler totient phi(n). Rejects n == 0.
std::uint64_t euler_phi(std::uint64_t n);

/// The full sorted fiber phi^-1(j); empty members when phi(x) = j has no
/// solution. Results are cached, so the returned reference stays valid for
/// the lifetime of the program.
const TotientFiber& inverse_phi(std::uint64_t j);

/// s(j) = |phi^-1(j)|, the number of cyclotomic polynomials of degree j.
std::uint64_t totient_multiplicity(std::uint64_t j);

} // namespace kron

#endif
