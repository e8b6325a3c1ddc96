#pragma once

#include <vector>

#include "opuc/fh.hpp"
#include "opuc/grid.hpp"
#include "opuc/szego.hpp"

namespace opuc {

/// The 3n+1 parameter scheme of the counterexample construction:
///   gamma_j = alpha_j                 for j <= n-1
///   gamma_j = -alpha_{2n-1-j}         for n <= j <= 2n-1
///   gamma_j = 0                       for j = 2n
///   gamma_j = (-1)^{j-2n} alpha_{j-2n-1}  for 2n+1 <= j <= 3n
/// (zero beyond index 3n, implicitly).
struct SteklovScheme {
    int n = 0;
    double epsilon = 0.0;  // informational; set by the caller for reports
    VerblunskyScheme gamma;
};

/// Requires alpha real (within real_tol) of length >= n.
SteklovScheme build_scheme(const VerblunskyScheme& alpha, int n, double real_tol = 1e-10);

/// Main term of the parameter asymptotics for the two-jump weight:
///   -(j+1)^{-1} i^{j+1} ( (2(j+1))^{2 i eps/pi} G + (-1)^{j+1} (2(j+1))^{-2 i eps/pi} conj(G) ),
/// G = Gamma(1 - i eps/pi)/Gamma(i eps/pi). Real-valued; |.| <= 2 eps/(pi (j+1)).
cplx l4_main_term(int j, double epsilon);

/// Segment-wise main term of the full scheme: l4 on [0, n-1], its negated
/// mirror on [n, 2n-1], zero at j = 2n and beyond 3n, the sign-alternating
/// copy on [2n+1, 3n].
cplx qq1_main_term(int j, int n, double epsilon);

struct ResidualFit {
    double c_fit = 0;      // max over window of |r_j| (j+1)^2
    double slope = 0;      // least-squares slope of ln|r_j| vs ln(j+1)
    int points_used = 0;
    int zeros_skipped = 0;  // r_j = 0 exactly, excluded from the log fit
};

/// r_j = extracted gamma_j - l4_main_term(j) over the window [j_lo, j_hi].
ResidualFit residual_report(const VerblunskyScheme& extracted, double epsilon, int j_lo, int j_hi);

/// Synthesizes the constructed weight on the grid:
/// runs the recursion on alpha to degree n, forms F(z) = Psi_n^*(-z)/Phi_n^*(-z)
/// and sigma_tilde' = Re F/(2 pi), runs the recursion on scheme[0..2n], then
/// applies the decoupled-weight formula. Requires m >= 16 (2n+1).
GridFunction steklov_weight(const SteklovScheme& scheme, const VerblunskyScheme& alpha,
                            std::size_t m);

struct GrowthRow {
    int n = 0;
    double sup_phi = 0;     // sup |phi_{2n+1}| = sup|Phi_{2n+1}| / prod rho_j
    double ratio_log = 0;   // sup_phi / ln n
    double duo_sup = 0;     // sup |Phi_n^* Psi_n^* + z Phi_n Psi_n|
    double sup_phi_n = 0;   // sup |Phi_n| (monic)
    bool mech_ok = false;   // 2 sup|Phi_{2n+1}| >= duo_sup - 2 sup|Phi_n|^2 on the grid
};

/// Per-n growth numbers for the constructed weight at the given epsilon; the
/// parameter source is the closed-form two-jump extraction (or a caller-
/// supplied alpha of length >= max n).
std::vector<GrowthRow> growth_report(const std::vector<int>& n_list, double epsilon,
                                     std::size_t m);
std::vector<GrowthRow> growth_report(const VerblunskyScheme& alpha, const std::vector<int>& n_list,
                                     double epsilon, std::size_t m);

struct L1Report {
    int n = 0;
    double phi_star_min = 0;   // min |Phi_n^*| over the grid
    double phi_star_max = 0;
    double duo_sup = 0;        // sup |Phi_n^* Psi_n^* + z Phi_n Psi_n|
    double trez_sup = 0;       // sup |Psi_n^*/Phi_n^*(z) + Psi_n^*/Phi_n^*(-z)|
    double quatro_residual = 0;  // max |conj(Phi^*)Psi^* + Phi^* conj(Psi^*) - 2 prod|
    double outer_gap = 0;      // max | |Phi_n^*| sqrt(f) - 1 | off the jump disks
};

/// Boundary estimates for the two-jump polynomials at degree n; exclusion is
/// the arc radius around +-pi/2 left out of the outer-function comparison.
L1Report lemma_l1_suite(const VerblunskyScheme& alpha, const FHWeightSpec& spec, int n,
                        std::size_t m, double exclusion = 0.3);

}  // namespace opuc
