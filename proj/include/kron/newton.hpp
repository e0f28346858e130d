// Newton's identities between coefficients and root power sums, and the
// power map f -> f_k whose roots are the k-th powers of the roots of f.
// Everything here is exact integer arithmetic; no roots are ever computed.
#ifndef KRON_NEWTON_HPP
#define KRON_NEWTON_HPP

#include "kron/int_poly.hpp"

#include <optional>

namespace kron {

/// Thrown by from_power_sums when the Newton recursion's division by k is not
/// exact, i.e. the power sums do not come from a monic integer polynomial.
struct NonIntegralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Power sums s_1..s_K of the root multiset of a monic integer polynomial.
struct PowerSums {
    std::vector<mpz_class> values;
    long source_degree = 0; // number of roots counted with multiplicity
};

/// s_k = sum of k-th powers of the roots of f, for k = 1..count, via the
/// Newton recursion on coefficients. f must be monic of degree >= 1.
PowerSums power_sums(const IntPoly& f, std::size_t count);

/// The monic degree-n polynomial whose root multiset has power sums
/// s.values[0..n-1]. Inverse of power_sums.
IntPoly from_power_sums(const PowerSums& s, std::size_t n);

/// f_k: the monic polynomial whose roots are the k-th powers of the roots
/// of f, computed exactly through power sums.
IntPoly power_map(const IntPoly& f, std::uint64_t k);

/// Orbit f_1, f_2, ... of the power map. When repeat_of holds an index j,
/// the final element equals polys[j] and the orbit stopped there; otherwise
/// no repeat occurred within max_steps.
struct PowerMapOrbit {
    std::vector<IntPoly> polys;
    std::optional<std::size_t> repeat_of;
};

/// Requires f monic with f(0) != 0.
PowerMapOrbit power_map_orbit(const IntPoly& f, std::size_t max_steps);

} // namespace kron

#endif
