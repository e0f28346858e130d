#include "kron/newton.hpp"

#include <map>

namespace kron {

namespace {

// Elementary symmetric polynomials e_0..e_n of the roots of monic f:
// e_i = (-1)^i * c_{n-i}.
std::vector<mpz_class> elementary_symmetric(const IntPoly& f) {
    const std::size_t n = static_cast<std::size_t>(f.degree());
    std::vector<mpz_class> e(n + 1);
    e[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        e[i] = f.coeffs()[n - i];
        if (i % 2 == 1)
            mpz_neg(e[i].get_mpz_t(), e[i].get_mpz_t());
    }
    return e;
}

} // namespace

PowerSums power_sums(const IntPoly& f, std::size_t count) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("power_sums: input must be monic of degree >= 1");
    if (count == 0)
        throw std::invalid_argument("power_sums: count must be positive");
    const std::size_t n = static_cast<std::size_t>(f.degree());
    const std::vector<mpz_class> e = elementary_symmetric(f);

    // s_k = sum_{i=1}^{min(k-1,n)} (-1)^{i-1} e_i s_{k-i}  [+ (-1)^{k-1} k e_k if k <= n]
    std::vector<mpz_class> s(count + 1); // s[0] unused
    mpz_class term;
    for (std::size_t k = 1; k <= count; ++k) {
        mpz_class& sk = s[k];
        const std::size_t top = std::min(k - 1, n);
        for (std::size_t i = 1; i <= top; ++i) {
            if (i % 2 == 1)
                mpz_addmul(sk.get_mpz_t(), e[i].get_mpz_t(), s[k - i].get_mpz_t());
            else
                mpz_submul(sk.get_mpz_t(), e[i].get_mpz_t(), s[k - i].get_mpz_t());
        }
        if (k <= n) {
            term = e[k] * static_cast<unsigned long>(k);
            if (k % 2 == 0)
                mpz_neg(term.get_mpz_t(), term.get_mpz_t());
            sk += term;
        }
    }
    PowerSums out;
    out.source_degree = f.degree();
    out.values.assign(s.begin() + 1, s.end());
    return out;
}

IntPoly from_power_sums(const PowerSums& s, std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("from_power_sums: n must be positive");
    if (s.values.size() < n)
        throw std::invalid_argument("from_power_sums: need at least n power sums");

    // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} s_i; the division by k must be
    // exact for power sums of an integer monic polynomial.
    std::vector<mpz_class> e(n + 1);
    e[0] = 1;
    mpz_class acc, r;
    for (std::size_t k = 1; k <= n; ++k) {
        acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            if (i % 2 == 1)
                mpz_addmul(acc.get_mpz_t(), e[k - i].get_mpz_t(), s.values[i - 1].get_mpz_t());
            else
                mpz_submul(acc.get_mpz_t(), e[k - i].get_mpz_t(), s.values[i - 1].get_mpz_t());
        }
        const mpz_class divisor = static_cast<unsigned long>(k);
        mpz_tdiv_qr(e[k].get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), divisor.get_mpz_t());
        if (r != 0)
            throw NonIntegralError("from_power_sums: division by " + std::to_string(k) + " is not exact");
    }

    std::vector<mpz_class> coeffs(n + 1);
    coeffs[n] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        coeffs[n - i] = e[i];
        if (i % 2 == 1)
            mpz_neg(coeffs[n - i].get_mpz_t(), coeffs[n - i].get_mpz_t());
    }
    return IntPoly(std::move(coeffs));
}

IntPoly power_map(const IntPoly& f, std::uint64_t k) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("power_map: input must be monic of degree >= 1");
    if (k == 0)
        throw std::invalid_argument("power_map: k must be positive");
    if (k == 1)
        return f;
    const std::size_t n = static_cast<std::size_t>(f.degree());
    const PowerSums full = power_sums(f, n * k);
    PowerSums sub;
    sub.source_degree = f.degree();
    sub.values.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        sub.values.push_back(full.values[i * k - 1]);
    return from_power_sums(sub, n); // NonIntegralError here would be a library bug
}

PowerMapOrbit power_map_orbit(const IntPoly& f, std::size_t max_steps) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("power_map_orbit: input must be monic of degree >= 1");
    if (f.coeff(0) == 0)
        throw std::invalid_argument("power_map_orbit: constant term must be nonzero");
    if (max_steps == 0)
        throw std::invalid_argument("power_map_orbit: max_steps must be positive");

    PowerMapOrbit orbit;
    std::map<IntPoly, std::size_t> seen;
    for (std::size_t k = 1; k <= max_steps; ++k) {
        IntPoly fk = power_map(f, k);
        auto it = seen.find(fk);
        if (it != seen.end()) {
            orbit.polys.push_back(std::move(fk));
            orbit.repeat_of = it->second;
            return orbit;
        }
        seen.emplace(fk, orbit.polys.size());
        orbit.polys.push_back(std::move(fk));
    }
    return orbit;
}

} // namespace kron
