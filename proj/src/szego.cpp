#include "opuc/szego.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace opuc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kUnitTol = 1e-10;
}

void VerblunskyScheme::ensure_valid() const {
    for (std::size_t j = 0; j < gamma.size(); ++j)
        if (std::abs(gamma[j]) >= 1.0 - kUnitTol)
            throw std::runtime_error("VerblunskyScheme: |gamma_" + std::to_string(j) +
                                     "| = " + std::to_string(std::abs(gamma[j])) +
                                     " >= 1 - 1e-10");
}

std::vector<double> VerblunskyScheme::rho() const {
    std::vector<double> r(gamma.size());
    for (std::size_t j = 0; j < gamma.size(); ++j) r[j] = std::sqrt(1.0 - std::norm(gamma[j]));
    return r;
}

double VerblunskyScheme::norm_sq_prefix(std::size_t k) const {
    double p = 1.0;
    for (std::size_t j = 0; j < k && j < gamma.size(); ++j) p *= 1.0 - std::norm(gamma[j]);
    return p;
}

bool VerblunskyScheme::is_real(double tol) const {
    for (const auto& g : gamma)
        if (std::abs(g.imag()) > tol) return false;
    return true;
}

PolySystem szego_forward(const VerblunskyScheme& s, int k) {
    if (k < 0 || static_cast<std::size_t>(k) > s.size())
        throw std::invalid_argument("szego_forward: k exceeds scheme length");
    s.ensure_valid();

    std::vector<cplx> phi{1.0}, phis{1.0}, psi{1.0}, psis{1.0};
    double norm_sq = 1.0;
    for (int j = 0; j < k; ++j) {
        const cplx g = s.gamma[j];
        const cplx gc = std::conj(g);
        const int d = j + 2;  // new length
        std::vector<cplx> nphi(d), nphis(d), npsi(d), npsis(d);
        for (int i = 0; i < d; ++i) {
            const cplx zphi = (i > 0) ? phi[i - 1] : cplx(0.0);
            const cplx zpsi = (i > 0) ? psi[i - 1] : cplx(0.0);
            const cplx ps = (i < d - 1) ? phis[i] : cplx(0.0);
            const cplx qs = (i < d - 1) ? psis[i] : cplx(0.0);
            nphi[i] = zphi - gc * ps;
            nphis[i] = ps - g * zphi;
            npsi[i] = zpsi + gc * qs;   // second kind: parameters -gamma
            npsis[i] = qs + g * zpsi;
        }
        phi = std::move(nphi);
        phis = std::move(nphis);
        psi = std::move(npsi);
        psis = std::move(npsis);
        norm_sq *= 1.0 - std::norm(g);
    }
    PolySystem ps;
    ps.k = k;
    ps.phi = ComplexPoly(std::move(phi));
    ps.phi_star = ComplexPoly(std::move(phis));
    ps.psi = ComplexPoly(std::move(psi));
    ps.psi_star = ComplexPoly(std::move(psis));
    ps.norm_sq = norm_sq;
    return ps;
}

VerblunskyScheme double_scheme(const VerblunskyScheme& alpha, double real_tol) {
    if (!alpha.is_real(real_tol))
        throw std::invalid_argument("double_scheme: parameters must be real");
    const std::size_t k = alpha.size();
    std::vector<cplx> g(2 * k);
    for (std::size_t j = 0; j < k; ++j) {
        g[j] = alpha.gamma[j];
        g[2 * k - 1 - j] = -alpha.gamma[j];
    }
    return VerblunskyScheme(std::move(g));
}

VerblunskyScheme rotate_scheme(const VerblunskyScheme& alpha, double beta) {
    std::vector<cplx> g(alpha.size());
    if (beta == 0.0) {
        g = alpha.gamma;
    } else if (beta == std::numbers::pi) {
        for (std::size_t j = 0; j < g.size(); ++j)
            g[j] = (j % 2 == 0) ? -alpha.gamma[j] : alpha.gamma[j];  // (-1)^{j+1}
    } else {
        for (std::size_t j = 0; j < g.size(); ++j) {
            const double a = -static_cast<double>(j + 1) * beta;
            g[j] = cplx(std::cos(a), std::sin(a)) * alpha.gamma[j];
        }
    }
    return VerblunskyScheme(std::move(g));
}

double wronskian_residual(const PolySystem& ps) {
    ComplexPoly p = ps.phi * ps.psi_star + ps.phi_star * ps.psi;
    p.coeff[ps.k] -= 2.0 * ps.norm_sq;
    return max_coeff_modulus(p);
}

GridFunction bernstein_szego_weight(const PolySystem& ps, std::size_t m) {
    if (ps.norm_sq <= 0) throw std::invalid_argument("bernstein_szego_weight: norm_sq <= 0");
    GridFunction v = eval_grid(ps.phi_star, m);
    GridFunction w(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double a2 = std::norm(v.values[k]);
        if (a2 < 1e-26)
            throw std::runtime_error("bernstein_szego_weight: |Phi_n^*| < 1e-13 at grid point " +
                                     std::to_string(k));
        w.values[k] = ps.norm_sq / (kTwoPi * a2);
    }
    return w;
}

GridFunction decouple_weight(const PolySystem& ps, const GridFunction& F_tilde,
                             const GridFunction& sigma_tilde_prime) {
    check_same_m(F_tilde, sigma_tilde_prime);
    const std::size_t m = F_tilde.m;
    const double s = std::sqrt(ps.norm_sq);
    GridFunction vphi = eval_grid(ps.phi, m);
    GridFunction vphis = eval_grid(ps.phi_star, m);
    GridFunction w(m);
    for (std::size_t k = 0; k < m; ++k) {
        if (F_tilde.values[k].real() <= 0)
            throw std::runtime_error("decouple_weight: Re F_tilde <= 0 at grid point " +
                                     std::to_string(k));
        const cplx p = vphi.values[k] / s;
        const cplx q = vphis.values[k] / s;
        const cplx den = p + q + F_tilde.values[k] * (q - p);
        const double d2 = std::norm(den);
        if (d2 < 1e-26)
            throw std::runtime_error("decouple_weight: vanishing denominator at grid point " +
                                     std::to_string(k));
        w.values[k] = 4.0 * sigma_tilde_prime.values[k].real() / d2;
    }
    return w;
}

double sum_rule_residual(const GridFunction& w, const VerblunskyScheme& s) {
    double acc = 0.0;
    for (std::size_t k = 0; k < w.m; ++k) {
        const double v = w.values[k].real();
        if (v <= 0)
            throw std::invalid_argument("sum_rule_residual: nonpositive weight at grid point " +
                                        std::to_string(k));
        acc += std::log(kTwoPi * v);
    }
    const double lhs = std::exp(acc / (2.0 * static_cast<double>(w.m)));
    double rhs = 1.0;
    for (const auto& g : s.gamma) rhs *= std::sqrt(1.0 - std::norm(g));
    return std::abs(lhs - rhs);
}

}  // namespace opuc
