#include "kron/kronecker.hpp"

#include "kron/cyclotomic.hpp"
#include "kron/numtheory.hpp"

#include <algorithm>

namespace kron {

std::uint64_t CycloFactorization::total_degree() const {
    std::uint64_t deg = shift;
    for (const auto& [index, mult] : factors)
        deg += mult * euler_phi(index);
    return deg;
}

bool canonical_less(const CycloFactorization& a, const CycloFactorization& b) {
    if (a.shift != b.shift)
        return a.shift < b.shift;
    auto ia = a.factors.begin();
    auto ib = b.factors.begin();
    std::uint64_t left_a = 0, left_b = 0; // remaining copies of the current index
    while (true) {
        if (left_a == 0) {
            if (ia == a.factors.end())
                return ib != b.factors.end() || left_b > 0;
            left_a = ia->second;
        }
        if (left_b == 0) {
            if (ib == b.factors.end())
                return false;
            left_b = ib->second;
        }
        if (ia->first != ib->first)
            return ia->first < ib->first;
        const std::uint64_t step = std::min(left_a, left_b);
        left_a -= step;
        left_b -= step;
        if (left_a == 0)
            ++ia;
        if (left_b == 0)
            ++ib;
    }
}

IntPoly expand(const CycloFactorization& fact) {
    IntPoly result = IntPoly::monomial(fact.shift);
    for (const auto& [index, mult] : fact.factors)
        result = result * pow(cyclotomic(index), mult);
    return result;
}

std::optional<CycloFactorization> is_kronecker(const IntPoly& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("is_kronecker: input must be monic of degree >= 1");

    CycloFactorization fact;
    while (f.coeff(fact.shift) == 0)
        ++fact.shift;
    IntPoly rest(std::vector<mpz_class>(f.coeffs().begin() + static_cast<long>(fact.shift), f.coeffs().end()));

    if (rest.degree() > 0) {
        IntPoly quotient;
        for (std::uint64_t index : cyclotomic_indices_up_to_degree(static_cast<std::uint64_t>(rest.degree()))) {
            const IntPoly& g = cyclotomic(index);
            while (rest.degree() >= g.degree() && try_div_exact(rest, g, quotient)) {
                rest = std::move(quotient);
                ++fact.factors[index];
            }
            if (rest.degree() == 0)
                break;
        }
    }
    if (rest.degree() != 0) // leftover non-cyclotomic part
        return std::nullopt;
    return fact;
}

namespace {

void guard_degree(unsigned degree, unsigned limit, const char* what, bool override_guard) {
    if (degree == 0)
        throw std::invalid_argument(std::string(what) + ": degree must be positive");
    if (!override_guard && degree > limit)
        throw std::invalid_argument(std::string(what) + ": degree " + std::to_string(degree) +
                                    " exceeds the default guard of " + std::to_string(limit));
}

} // namespace

BruteEnumeration enumerate_brute(unsigned degree, bool override_guard) {
    guard_degree(degree, 8, "enumerate_brute", override_guard);
    const unsigned n = degree;

    // |a_j| <= C(n, j) for the coefficient of z^j, j = 0..n-1.
    std::vector<mpz_class> bounds(n);
    for (unsigned j = 0; j < n; ++j)
        mpz_bin_uiui(bounds[j].get_mpz_t(), n, j);

    BruteEnumeration out;
    out.candidates = 1;
    for (unsigned j = 0; j < n; ++j)
        out.candidates *= 2 * bounds[j] + 1;

    std::vector<mpz_class> coeffs(n + 1);
    coeffs[n] = 1;
    for (unsigned j = 0; j < n; ++j)
        coeffs[j] = -bounds[j];

    // Odometer walk in ascending lexicographic order of (a_0, ..., a_{n-1}).
    while (true) {
        IntPoly f{std::vector<mpz_class>(coeffs)};
        if (is_kronecker(f))
            out.polys.push_back(std::move(f));

        unsigned j = n;
        while (j > 0) {
            --j;
            if (coeffs[j] < bounds[j]) {
                ++coeffs[j];
                break;
            }
            coeffs[j] = -bounds[j];
            if (j == 0)
                return out;
        }
    }
}

namespace {

// indices paired with their degrees phi(d)
using WeightedIndex = std::pair<std::uint64_t, std::uint64_t>;

void canonical_search(const std::vector<WeightedIndex>& entries, std::size_t pos,
                      std::uint64_t remaining, CycloFactorization& current,
                      std::vector<CycloFactorization>& out) {
    if (pos == entries.size()) {
        current.shift = remaining; // leftover degree becomes the power of z
        out.push_back(current);
        current.shift = 0;
        return;
    }
    const auto [index, weight] = entries[pos];
    canonical_search(entries, pos + 1, remaining, current, out);
    std::uint64_t mult = 0;
    std::uint64_t used = 0;
    while (used + weight <= remaining) {
        used += weight;
        current.factors[index] = ++mult;
        canonical_search(entries, pos + 1, remaining - used, current, out);
    }
    if (mult > 0)
        current.factors.erase(index);
}

} // namespace

std::vector<CycloFactorization> enumerate_canonical(unsigned degree, bool override_guard) {
    guard_degree(degree, 30, "enumerate_canonical", override_guard);

    std::vector<WeightedIndex> entries;
    for (std::uint64_t index : cyclotomic_indices_up_to_degree(degree))
        entries.emplace_back(index, euler_phi(index));

    std::vector<CycloFactorization> out;
    CycloFactorization scratch;
    canonical_search(entries, 0, degree, scratch, out);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

} // namespace kron
