#include "kron/int_poly.hpp"

#include <sstream>

namespace kron {

namespace {
const mpz_class zero_coeff = 0;

void trim(std::vector<mpz_class>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
}
} // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim(coeffs_);
}

IntPoly IntPoly::monomial(std::size_t k) {
    std::vector<mpz_class> c(k + 1, 0);
    c[k] = 1;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::unit_root_poly(std::size_t n) {
    std::vector<mpz_class> c(n + 1, 0);
    c[0] = -1;
    c[n] = 1;
    return IntPoly(std::move(c));
}

const mpz_class& IntPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : zero_coeff;
}

bool IntPoly::operator<(const IntPoly& other) const {
    const std::size_t common = std::min(coeffs_.size(), other.coeffs_.size());
    for (std::size_t i = 0; i < common; ++i) {
        const int c = cmp(coeffs_[i], other.coeffs_[i]);
        if (c != 0)
            return c < 0;
    }
    return coeffs_.size() < other.coeffs_.size();
}

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero())
        return IntPoly{};
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<mpz_class> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& f, const IntPoly& g) {
    std::vector<mpz_class> c(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = f.coeff(i) + g.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& f, const IntPoly& g) {
    std::vector<mpz_class> c(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = f.coeff(i) - g.coeff(i);
    return IntPoly(std::move(c));
}

bool try_div_exact(const IntPoly& f, const IntPoly& g, IntPoly& quotient) {
    if (g.is_zero())
        throw std::invalid_argument("div_exact: division by the zero polynomial");
    if (f.is_zero()) {
        quotient = IntPoly{};
        return true;
    }
    if (f.degree() < g.degree())
        return false;

    std::vector<mpz_class> rem = f.coeffs();
    const auto& d = g.coeffs();
    const mpz_class& lead = d.back();
    const std::size_t qsize = rem.size() - d.size() + 1;
    std::vector<mpz_class> q(qsize, 0);
    mpz_class t;
    for (std::size_t i = qsize; i-- > 0;) {
        mpz_class& head = rem[i + d.size() - 1];
        if (head == 0)
            continue;
        mpz_tdiv_qr(q[i].get_mpz_t(), t.get_mpz_t(), head.get_mpz_t(), lead.get_mpz_t());
        if (t != 0)
            return false;
        for (std::size_t j = 0; j < d.size(); ++j)
            mpz_submul(rem[i + j].get_mpz_t(), q[i].get_mpz_t(), d[j].get_mpz_t());
    }
    for (const mpz_class& r : rem)
        if (r != 0)
            return false;
    quotient = IntPoly(std::move(q));
    return true;
}

IntPoly div_exact(const IntPoly& f, const IntPoly& g) {
    IntPoly q;
    if (!try_div_exact(f, g, q))
        throw NotDivisibleError("div_exact: " + pretty(g) + " does not divide " + pretty(f));
    return q;
}

IntPoly inflate(const IntPoly& f, std::size_t k) {
    if (k == 0)
        throw std::invalid_argument("inflate: k must be positive");
    if (f.is_zero() || k == 1)
        return f;
    std::vector<mpz_class> c(f.coeffs().size() * k - (k - 1), 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        c[i * k] = f.coeffs()[i];
    return IntPoly(std::move(c));
}

IntPoly pow(const IntPoly& f, std::uint64_t e) {
    IntPoly result = IntPoly::one();
    IntPoly base = f;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

mpz_class evaluate(const IntPoly& f, const mpz_class& x) {
    mpz_class acc = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        acc *= x;
        acc += f.coeffs()[i];
    }
    return acc;
}

IntPoly parse_poly(const std::string& text) {
    std::vector<mpz_class> coeffs;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto begin = token.find_first_not_of(" \t");
        if (begin == std::string::npos)
            throw std::invalid_argument("parse_poly: empty coefficient in '" + text + "'");
        const auto end = token.find_last_not_of(" \t");
        coeffs.emplace_back();
        if (mpz_set_str(coeffs.back().get_mpz_t(), token.substr(begin, end - begin + 1).c_str(), 10) != 0)
            throw std::invalid_argument("parse_poly: bad coefficient '" + token + "'");
    }
    if (coeffs.empty())
        throw std::invalid_argument("parse_poly: no coefficients");
    return IntPoly(std::move(coeffs));
}

std::string coeff_string(const IntPoly& f) {
    if (f.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i > 0)
            out += ',';
        out += f.coeffs()[i].get_str();
    }
    return out;
}

std::string pretty(const IntPoly& f) {
    if (f.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const mpz_class& c = f.coeffs()[i];
        if (c == 0)
            continue;
        const bool first = out.empty();
        const mpz_class mag = abs(c);
        if (first)
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        if (mag != 1 || i == 0)
            out += mag.get_str();
        if (i > 0) {
            out += "z";
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace kron
