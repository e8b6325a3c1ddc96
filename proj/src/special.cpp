#include "opuc/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace opuc {

namespace {

constexpr double kPi = std::numbers::pi;

// Standard g = 7, n = 9 Lanczos coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

cplx complex_gamma(cplx z) {
    if (is_nonpositive_integer(z)) throw std::domain_error("complex_gamma: pole at nonpositive integer");
    if (z.real() < 0.5) {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
        return kPi / (std::sin(kPi * z) * complex_gamma(1.0 - z));
    }
    const cplx zm = z - 1.0;
    cplx a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (zm + static_cast<double>(i));
    const cplx t = zm + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, zm + 0.5) * std::exp(-t) * a;
}

cplx complex_digamma(cplx z) {
    if (is_nonpositive_integer(z)) throw std::domain_error("complex_digamma: pole at nonpositive integer");
    cplx acc = 0.0;
    while (z.real() < 10.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // psi(z) ~ ln z - 1/(2z) - sum B_{2n} / (2n z^{2n})
    static const double kB[7] = {1.0 / 12,  -1.0 / 120,      1.0 / 252, -1.0 / 240,
                                 1.0 / 132, -691.0 / 32760, 1.0 / 12};
    const cplx inv2 = 1.0 / (z * z);
    cplx s = std::log(z) - 0.5 / z;
    cplx p = inv2;
    for (const double b : kB) {
        s -= b * p;
        p *= inv2;
    }
    return acc + s;
}

cplx log_branch_02pi(cplx z) {
    if (z == cplx(0.0)) throw std::domain_error("log_branch_02pi: zero argument");
    double a = std::arg(z);
    if (a < 0) a += 2.0 * kPi;
    return {std::log(std::abs(z)), a};
}

namespace detail {

cplx kummer_series(cplx a, cplx zeta) {
    double argz = std::arg(zeta);
    if (argz < 0) argz += 2.0 * kPi;
    // psi = -(1/Gamma(a)) sum_k (a)_k/k!^2 zeta^k (ln zeta + d(a+k) - 2 d(k+1))
    const cplx L = cplx(std::log(std::abs(zeta)), argz);
    const cplx pre = -1.0 / complex_gamma(a);
    cplx da = complex_digamma(a);
    cplx d1 = complex_digamma(1.0);
    cplx poch = 1.0, zp = 1.0;
    double fact2 = 1.0;
    cplx sum = 0.0;
    for (int k = 0; k < 80; ++k) {
        const cplx term = poch / fact2 * zp * (L + da - 2.0 * d1);
        sum += term;
        if (k > 4 && std::abs(term) < 1e-16 * std::abs(sum)) return pre * sum;
        poch *= a + static_cast<double>(k);
        zp *= zeta;
        fact2 *= static_cast<double>(k + 1) * static_cast<double>(k + 1);
        da += 1.0 / (a + static_cast<double>(k));
        d1 += 1.0 / static_cast<double>(k + 1);
    }
    throw std::runtime_error("kummer_psi: series did not converge (|zeta| too large for the series branch)");
}

cplx kummer_series_fixed(cplx a, cplx zeta, int terms) {
    double argz = std::arg(zeta);
    if (argz < 0) argz += 2.0 * kPi;
    const cplx L = cplx(std::log(std::abs(zeta)), argz);
    const cplx pre = -1.0 / complex_gamma(a);
    cplx da = complex_digamma(a);
    cplx d1 = complex_digamma(1.0);
    cplx poch = 1.0, zp = 1.0;
    double fact2 = 1.0;
    cplx sum = 0.0;
    for (int k = 0; k < terms; ++k) {
        sum += poch / fact2 * zp * (L + da - 2.0 * d1);
        poch *= a + static_cast<double>(k);
        zp *= zeta;
        fact2 *= static_cast<double>(k + 1) * static_cast<double>(k + 1);
        da += 1.0 / (a + static_cast<double>(k));
        d1 += 1.0 / static_cast<double>(k + 1);
    }
    return pre * sum;
}

cplx kummer_asymptotic(cplx a, cplx zeta) {
    double argz = std::arg(zeta);
    if (argz < 0) argz += 2.0 * kPi;
    const cplx L = cplx(std::log(std::abs(zeta)), argz);
    return std::exp(-a * L) * (1.0 - a * a / zeta);
}

}  // namespace detail

cplx kummer_psi(cplx a, cplx zeta) {
    if (zeta == cplx(0.0)) throw std::domain_error("kummer_psi: zeta = 0");
    if (a == cplx(0.0)) return 1.0;  // limit: 1/Gamma(a) -> 0, digamma pole cancels
    if (is_nonpositive_integer(a)) throw std::domain_error("kummer_psi: a at a negative integer is unsupported");

    double argz = std::arg(zeta);
    if (argz < 0) argz += 2.0 * kPi;
    if (std::abs(zeta) >= 8.0 && argz <= 1.5 * kPi) return detail::kummer_asymptotic(a, zeta);
    return detail::kummer_series(a, zeta);
}

}  // namespace opuc
