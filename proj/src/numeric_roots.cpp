// Numeric root location. Companion-matrix eigenvalues are only accurate to
// roughly eps^(1/m) at a root of multiplicity m, which is far too coarse for
// the 1e-8 disc tolerance, so eigenvalue clusters are polished with Newton
// iteration in GMP floating point and the finished multiset is verified by
// expanding prod (z - r_i) back against the exact coefficients.
#include "kron/kronecker.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <vector>

namespace kron {

namespace {

struct Cx {
    mpf_class re, im;
    explicit Cx(mp_bitcnt_t prec) : re(0, prec), im(0, prec) {}
    Cx(const std::complex<double>& z, mp_bitcnt_t prec) : re(z.real(), prec), im(z.imag(), prec) {}
};

mpf_class abs2(const Cx& a) {
    return a.re * a.re + a.im * a.im;
}

// val = f(x), der = f'(x) by simultaneous Horner with real coefficients.
void eval_with_derivative(const std::vector<mpf_class>& coeffs, const Cx& x, Cx& val, Cx& der) {
    const mp_bitcnt_t prec = x.re.get_prec();
    val = Cx(prec);
    der = Cx(prec);
    mpf_class t(0, prec);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        // der = der * x + val
        t = der.re * x.re - der.im * x.im + val.re;
        der.im = der.re * x.im + der.im * x.re + val.im;
        der.re = t;
        // val = val * x + c_i
        t = val.re * x.re - val.im * x.im + coeffs[i];
        val.im = val.re * x.im + val.im * x.re;
        val.re = t;
    }
}

// Newton iteration x -= multiplicity * f(x)/f'(x). With the multiplicity of
// the nearby root this converges quadratically even at a repeated root.
// Stops at the evaluation noise floor; convergence is not certified here
// (the caller verifies the whole multiset at the end).
void polish(const std::vector<mpf_class>& coeffs, Cx& x, unsigned multiplicity, int max_iters,
            const mpf_class& noise2) {
    const mp_bitcnt_t prec = x.re.get_prec();
    Cx val(prec), der(prec), step(prec);
    mpf_class denom(0, prec), t(0, prec), step_stop(0, prec);
    mpf_div_2exp(step_stop.get_mpf_t(), mpf_class(1, prec).get_mpf_t(), prec);

    for (int iter = 0; iter < max_iters; ++iter) {
        eval_with_derivative(coeffs, x, val, der);
        if (abs2(val) <= noise2)
            return;
        denom = abs2(der);
        if (denom == 0)
            return;
        // step = multiplicity * val / der  (conjugate division)
        t = (val.re * der.re + val.im * der.im) / denom;
        step.im = (val.im * der.re - val.re * der.im) / denom;
        step.re = t;
        step.re *= multiplicity;
        step.im *= multiplicity;
        x.re -= step.re;
        x.im -= step.im;
        if (abs2(step) <= (abs2(x) + 1) * step_stop)
            return;
    }
}

// Greedy transitive clustering of eigenvalue approximations.
std::vector<std::vector<std::size_t>> cluster_indices(const std::vector<std::complex<double>>& points,
                                                      double radius) {
    std::vector<std::vector<std::size_t>> clusters;
    std::vector<bool> used(points.size(), false);
    for (std::size_t seed = 0; seed < points.size(); ++seed) {
        if (used[seed])
            continue;
        std::vector<std::size_t> cluster{seed};
        used[seed] = true;
        for (std::size_t grow = 0; grow < cluster.size(); ++grow) {
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (used[j])
                    continue;
                if (std::abs(points[j] - points[cluster[grow]]) <= radius) {
                    used[j] = true;
                    cluster.push_back(j);
                }
            }
        }
        clusters.push_back(std::move(cluster));
    }
    return clusters;
}

// Checks that prod (z - r_i) reproduces the exact coefficients to within
// 1e-6 relative per coefficient; monic polynomials agree as root multisets
// exactly when they agree as coefficient vectors.
bool verify_root_multiset(const std::vector<mpz_class>& exact, const std::vector<Cx>& roots,
                          mp_bitcnt_t prec) {
    const std::size_t n = roots.size();
    std::vector<Cx> poly; // descending coefficients, poly[0] = leading
    poly.reserve(n + 1);
    poly.emplace_back(prec);
    poly[0].re = 1;
    for (const Cx& r : roots) {
        poly.emplace_back(prec);
        // (z - r) * P: Q[j] = P[j] - r * P[j-1], updated in place downwards
        for (std::size_t j = poly.size() - 1; j >= 1; --j) {
            const Cx& p = poly[j - 1];
            poly[j].re -= r.re * p.re - r.im * p.im;
            poly[j].im -= r.re * p.im + r.im * p.re;
        }
    }
    // poly[i] now holds the coefficient of z^(n-i); exact is ascending
    mpf_class diff(0, prec), bound(0, prec);
    for (std::size_t i = 0; i <= n; ++i) {
        const mpz_class& want = exact[n - i];
        bound = abs(mpf_class(want, prec)) + 1;
        bound *= 1e-6;
        diff = abs(poly[i].re - mpf_class(want, prec));
        if (diff > bound)
            return false;
        diff = abs(poly[i].im);
        if (diff > bound)
            return false;
    }
    return true;
}

mpf_class evaluation_noise2(const std::vector<mpf_class>& coeffs, double radius, mp_bitcnt_t prec) {
    mpf_class scale(0, prec), power(1, prec);
    const double t = std::max(1.0, radius);
    for (const mpf_class& c : coeffs) {
        scale += abs(c) * power;
        power *= t;
    }
    mpf_class noise(0, prec);
    mpf_div_2exp(noise.get_mpf_t(), scale.get_mpf_t(), prec > 16 ? prec - 16 : 1);
    return noise * noise;
}

// coefficients must be monic with nonzero constant term
std::vector<std::complex<double>> companion_eigenvalues(const std::vector<mpz_class>& coeffs) {
    const std::size_t n = coeffs.size() - 1;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<long>(n), static_cast<long>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const double c = coeffs[i].get_d();
        if (!std::isfinite(c))
            throw NumericSolverError("numeric_roots: coefficient exceeds double range");
        companion(static_cast<long>(i), static_cast<long>(n - 1)) = -c;
        if (i + 1 < n)
            companion(static_cast<long>(i) + 1, static_cast<long>(i)) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericSolverError("numeric_roots: eigenvalue iteration failed");

    std::vector<std::complex<double>> eigen(n);
    for (std::size_t i = 0; i < n; ++i)
        eigen[i] = solver.eigenvalues()[static_cast<long>(i)];
    return eigen;
}

// eigenvalue error reaches ~(||A|| * n * eps)^(1/m) at a multiplicity-m
// root; the matrix norm scales with the largest coefficient
double eigenvalue_margin(const std::vector<mpz_class>& coeffs) {
    const std::size_t n = coeffs.size() - 1;
    double scale = 1.0;
    for (const mpz_class& c : coeffs)
        scale = std::max(scale, std::abs(c.get_d()));
    const double backward = std::min(1e-13 * static_cast<double>(n) * scale, 0.9);
    return std::pow(backward, 1.0 / static_cast<double>(n));
}

std::vector<mpz_class> strip_zero_roots(const IntPoly& f, std::size_t& shift) {
    shift = 0;
    while (f.coeff(shift) == 0)
        ++shift;
    return {f.coeffs().begin() + static_cast<long>(shift), f.coeffs().end()};
}

} // namespace

std::vector<std::complex<double>> numeric_roots(const IntPoly& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("numeric_roots: input must be monic of degree >= 1");

    std::size_t shift = 0;
    const std::vector<mpz_class> rest = strip_zero_roots(f, shift);
    std::vector<std::complex<double>> roots(shift, 0.0);
    const std::size_t n = rest.size() - 1;
    if (n == 0)
        return roots;

    const std::vector<std::complex<double>> eigen = companion_eigenvalues(rest);
    double radius = 1.0;
    for (const auto& approx : eigen)
        radius = std::max(radius, std::abs(approx));

    const double margin = eigenvalue_margin(rest);
    const mp_bitcnt_t prec = std::max<mp_bitcnt_t>(256, 96 * n);

    std::vector<mpf_class> coeffs;
    coeffs.reserve(rest.size());
    for (const mpz_class& c : rest)
        coeffs.emplace_back(c, prec);
    const mpf_class noise2 = evaluation_noise2(coeffs, radius, prec);

    // fast path: clusters with estimated multiplicity, centroid start
    std::vector<Cx> polished;
    for (const auto& cluster : cluster_indices(eigen, 4 * margin)) {
        Cx x(prec);
        for (std::size_t idx : cluster) {
            x.re += mpf_class(eigen[idx].real(), prec);
            x.im += mpf_class(eigen[idx].imag(), prec);
        }
        x.re /= static_cast<unsigned long>(cluster.size());
        x.im /= static_cast<unsigned long>(cluster.size());
        polish(coeffs, x, static_cast<unsigned>(cluster.size()), 64, noise2);
        for (std::size_t copy = 0; copy < cluster.size(); ++copy)
            polished.push_back(x);
    }

    if (!verify_root_multiset(rest, polished, prec)) {
        // fallback: plain Newton from every raw eigenvalue separately
        polished.clear();
        for (const auto& approx : eigen) {
            Cx x(approx, prec);
            polish(coeffs, x, 1, 800, noise2);
            polished.push_back(x);
        }
        if (!verify_root_multiset(rest, polished, prec))
            throw NumericSolverError("numeric_roots: could not verify the root multiset");
    }

    for (const Cx& r : polished)
        roots.emplace_back(r.re.get_d(), r.im.get_d());
    return roots;
}

bool roots_in_disc_numeric(const IntPoly& f, double tol) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("roots_in_disc_numeric: input must be monic of degree >= 1");

    // raw eigenvalues decide outright when every one sits clear of the
    // |z| = 1 + tol circle by more than their worst-case error
    std::size_t shift = 0;
    const std::vector<mpz_class> rest = strip_zero_roots(f, shift);
    if (rest.size() == 1)
        return true; // pure power of z
    double max_modulus = 0;
    for (const auto& approx : companion_eigenvalues(rest))
        max_modulus = std::max(max_modulus, std::abs(approx));
    const double band = 4 * eigenvalue_margin(rest);
    if (max_modulus <= 1.0 + tol - band)
        return true;
    if (max_modulus > 1.0 + tol + band)
        return false;

    for (const auto& root : numeric_roots(f))
        if (std::abs(root) > 1.0 + tol)
            return false;
    return true;
}

} // namespace kron
