#pragma once

#include <vector>

#include "opuc/complex_poly.hpp"
#include "opuc/grid.hpp"

namespace opuc {

/// Verblunsky (Schur) parameters gamma_0..gamma_{k-1}, each inside the open
/// unit disk. Construction of dependent objects fails loudly if any
/// |gamma_j| >= 1 - 1e-10 rather than clamping.
struct VerblunskyScheme {
    std::vector<cplx> gamma;

    VerblunskyScheme() = default;
    explicit VerblunskyScheme(std::vector<cplx> g) : gamma(std::move(g)) {}
    VerblunskyScheme(std::initializer_list<cplx> g) : gamma(g) {}

    std::size_t size() const { return gamma.size(); }

    /// Throws std::runtime_error naming the first offending index.
    void ensure_valid() const;

    /// rho_j = sqrt(1 - |gamma_j|^2)
    std::vector<double> rho() const;

    /// prod_{j<k} (1 - |gamma_j|^2)
    double norm_sq_prefix(std::size_t k) const;

    bool is_real(double tol = 1e-10) const;
};

/// Monic first/second-kind polynomials after k recursion steps and the norm
/// product prod_{j<k}(1-|gamma_j|^2).
struct PolySystem {
    int k = 0;
    ComplexPoly phi, phi_star, psi, psi_star;
    double norm_sq = 1.0;
};

/// Forward Szego recursion:
///   Phi_{j+1} = z Phi_j - conj(gamma_j) Phi_j^*,  Phi_{j+1}^* = Phi_j^* - gamma_j z Phi_j,
/// second kind with parameters {-gamma_j}. Phi_0 = Phi_0^* = Psi_0 = Psi_0^* = 1.
PolySystem szego_forward(const VerblunskyScheme& s, int k);

/// Doubling map of Lemma-2 type: (a_0..a_{k-1}) -> (a_0..a_{k-1}, -a_{k-1}..-a_0).
/// Requires real parameters (within real_tol).
VerblunskyScheme double_scheme(const VerblunskyScheme& alpha, double real_tol = 1e-10);

/// gamma_j = e^{-i(j+1)beta} alpha_j (parameters of the measure translated by
/// beta). beta = 0 and beta = pi use exact +-1 factors.
VerblunskyScheme rotate_scheme(const VerblunskyScheme& alpha, double beta);

/// Max coefficient modulus of Phi_k Psi_k^* + Phi_k^* Psi_k - 2 norm_sq z^k,
/// which vanishes identically by the Szego-recursion determinant identity.
double wronskian_residual(const PolySystem& ps);

/// w(theta_k) = norm_sq / (2 pi |Phi_n^*(e^{i theta_k})|^2). Real-valued grid.
/// Throws if |Phi_n^*| < 1e-13 at a grid point (cannot happen for a valid scheme).
GridFunction bernstein_szego_weight(const PolySystem& ps, std::size_t m);

/// Decoupled weight   sigma' = 4 sigma_tilde' / |phi_n + phi_n^* + F(phi_n^* - phi_n)|^2
/// with phi_n the orthonormal polynomial (monic / sqrt(norm_sq)). F must have
/// positive real part on the grid. F is assumed smooth on the circle; this is
/// documented, not checked.
GridFunction decouple_weight(const PolySystem& ps, const GridFunction& F_tilde,
                             const GridFunction& sigma_tilde_prime);

/// | exp((1/4pi) integral ln(2 pi w)) - prod rho_j |  with the periodic
/// rectangle rule on the grid of w.
double sum_rule_residual(const GridFunction& w, const VerblunskyScheme& s);

}  // namespace opuc
