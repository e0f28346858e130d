// Dense integer polynomials with arbitrary-precision coefficients.
//
// Coefficients are stored in ascending-power order; the zero polynomial is
// the empty coefficient list. Nonzero polynomials keep a nonzero leading
// coefficient (trailing zeros are trimmed on construction).
#ifndef KRON_INT_POLY_HPP
#define KRON_INT_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kron {

/// Thrown by div_exact when the divisor does not divide exactly over Z.
struct NotDivisibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class IntPoly {
public:
    IntPoly() = default; // zero polynomial
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    /// z^k
    static IntPoly monomial(std::size_t k);
    /// z^n - 1
    static IntPoly unit_root_poly(std::size_t n);
    static IntPoly one() { return IntPoly{1}; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    /// Degree of the polynomial; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    /// Coefficient of z^i (zero beyond the stored range).
    const mpz_class& coeff(std::size_t i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    bool operator==(const IntPoly& other) const { return coeffs_ == other.coeffs_; }
    /// Lexicographic order on the ascending coefficient vector.
    bool operator<(const IntPoly& other) const;

private:
    std::vector<mpz_class> coeffs_;
};

IntPoly operator*(const IntPoly& f, const IntPoly& g);
IntPoly operator+(const IntPoly& f, const IntPoly& g);
IntPoly operator-(const IntPoly& f, const IntPoly& g);

/// Exact quotient f / g over Z. Throws NotDivisibleError when g does not
/// divide f, std::invalid_argument when g is zero.
IntPoly div_exact(const IntPoly& f, const IntPoly& g);

/// Non-throwing form of div_exact: returns false (leaving quotient
/// untouched) when g does not divide f over Z.
bool try_div_exact(const IntPoly& f, const IntPoly& g, IntPoly& quotient);

/// f(z^k); k >= 1.
IntPoly inflate(const IntPoly& f, std::size_t k);

/// f^e by repeated squaring; f^0 = 1.
IntPoly pow(const IntPoly& f, std::uint64_t e);

mpz_class evaluate(const IntPoly& f, const mpz_class& x);

/// Parses "c0,c1,...,cd" (ascending powers). Throws std::invalid_argument on
/// malformed input.
IntPoly parse_poly(const std::string& text);

/// Ascending comma-separated coefficients; inverse of parse_poly.
std::string coeff_string(const IntPoly& f);

/// Human form in descending powers, e.g. "z^2 + z + 1".
std::string pretty(const IntPoly& f);

} // namespace kron

#endif
