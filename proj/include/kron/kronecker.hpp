// Kronecker polynomials: monic integer polynomials with every root in the
// closed unit disc. Membership decision via cyclotomic trial division,
// enumeration of all Kronecker polynomials of a given degree, and a numeric
// root-location cross-check.
#ifndef KRON_KRONECKER_HPP
#define KRON_KRONECKER_HPP

#include "kron/int_poly.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace kron {

/// Thrown when the numeric root solver cannot produce an answer (as opposed
/// to a clean negative verdict).
struct NumericSolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical form of a Kronecker polynomial: z^shift times a multiset of
/// cyclotomic polynomials, factors[d] = multiplicity of g_d.
struct CycloFactorization {
    std::uint64_t shift = 0;
    std::map<std::uint64_t, std::uint64_t> factors; // index -> multiplicity >= 1

    std::uint64_t total_degree() const;
    bool operator==(const CycloFactorization&) const = default;
};

/// Deterministic order: shift first, then the flattened index multiset
/// lexicographically.
bool canonical_less(const CycloFactorization& a, const CycloFactorization& b);

/// z^shift * prod_d g_d^{e_d}, expanded exactly.
IntPoly expand(const CycloFactorization& fact);

/// Decides whether monic f (degree >= 1) has all roots in the closed unit
/// disc, by stripping z^k and trial-dividing by every cyclotomic polynomial
/// of eligible degree. Returns the factorization, or nullopt when f is not
/// Kronecker.
std::optional<CycloFactorization> is_kronecker(const IntPoly& f);

/// All complex roots of monic f, with multiplicity. Companion-matrix
/// eigenvalues refined by high-precision Newton polishing, so repeated roots
/// come out far more accurate than raw eigenvalues; the full root multiset
/// is verified against the coefficients before returning. Throws
/// NumericSolverError when no verified multiset can be produced.
std::vector<std::complex<double>> numeric_roots(const IntPoly& f);

/// Numeric cross-check of the defining property: computes all complex roots
/// via companion-matrix eigenvalues and tests |root| <= 1 + tol.
bool roots_in_disc_numeric(const IntPoly& f, double tol = 1e-8);

struct BruteEnumeration {
    mpz_class candidates; // size of the scanned coefficient box
    std::vector<IntPoly> polys;
};

/// Scans the coefficient box |a_j| <= C(n, j) from the finiteness bound and
/// keeps the Kronecker polynomials, sorted lexicographically by ascending
/// coefficient vector. Guarded to n <= 8 unless overridden.
BruteEnumeration enumerate_brute(unsigned degree, bool override_guard = false);

/// All canonical forms of total degree n, sorted by canonical_less. The
/// count equals k(n). Guarded to n <= 30 unless overridden.
std::vector<CycloFactorization> enumerate_canonical(unsigned degree, bool override_guard = false);

} // namespace kron

#endif
