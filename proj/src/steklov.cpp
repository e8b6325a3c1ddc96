#include "opuc/steklov.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "opuc/moments.hpp"
#include "opuc/special.hpp"

namespace opuc {

namespace {
constexpr double kPi = std::numbers::pi;
}

SteklovScheme build_scheme(const VerblunskyScheme& alpha, int n, double real_tol) {
    if (n < 1) throw std::invalid_argument("build_scheme: n must be >= 1");
    if (alpha.size() < static_cast<std::size_t>(n))
        throw std::invalid_argument("build_scheme: alpha shorter than n");
    for (int j = 0; j < n; ++j)
        if (std::abs(alpha.gamma[j].imag()) > real_tol)
            throw std::invalid_argument("build_scheme: alpha_" + std::to_string(j) +
                                        " not real within tolerance");
    std::vector<cplx> g(3 * n + 1, 0.0);
    for (int j = 0; j < n; ++j) g[j] = alpha.gamma[j];
    for (int j = n; j < 2 * n; ++j) g[j] = -alpha.gamma[2 * n - 1 - j];
    g[2 * n] = 0.0;
    for (int j = 2 * n + 1; j <= 3 * n; ++j) {
        const int sign = ((j - 2 * n) % 2 == 0) ? 1 : -1;  // (-1)^{j-2n}
        g[j] = static_cast<double>(sign) * alpha.gamma[j - 2 * n - 1];
    }
    SteklovScheme s;
    s.n = n;
    s.gamma = VerblunskyScheme(std::move(g));
    return s;
}

cplx l4_main_term(int j, double epsilon) {
    const double y = epsilon / kPi;
    const cplx G = complex_gamma(cplx(1.0, -y)) / complex_gamma(cplx(0.0, y));
    const double phase = 2.0 * y * std::log(2.0 * (j + 1));
    const cplx tc = cplx(std::cos(phase), std::sin(phase)) * G;
    static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const cplx ij = ipow[(j + 1) % 4];
    const double sgn = ((j + 1) % 2 == 0) ? 1.0 : -1.0;  // (-1)^{j+1}
    return -(ij / static_cast<double>(j + 1)) * (tc + sgn * std::conj(tc));
}

cplx qq1_main_term(int j, int n, double epsilon) {
    if (j < 0) throw std::invalid_argument("qq1_main_term: j < 0");
    if (j <= n - 1) return l4_main_term(j, epsilon);
    if (j <= 2 * n - 1) return -l4_main_term(2 * n - 1 - j, epsilon);
    if (j == 2 * n || j > 3 * n) return 0.0;
    const int sign = ((j - 2 * n) % 2 == 0) ? 1 : -1;
    return static_cast<double>(sign) * l4_main_term(j - 2 * n - 1, epsilon);
}

ResidualFit residual_report(const VerblunskyScheme& extracted, double epsilon, int j_lo,
                            int j_hi) {
    if (j_lo > j_hi || j_hi >= static_cast<int>(extracted.size()))
        throw std::invalid_argument("residual_report: bad window");
    ResidualFit fit;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int j = j_lo; j <= j_hi; ++j) {
        const double r = std::abs(extracted.gamma[j] - l4_main_term(j, epsilon));
        if (r == 0.0) {
            ++fit.zeros_skipped;
            continue;
        }
        fit.c_fit = std::max(fit.c_fit, r * (j + 1.0) * (j + 1.0));
        const double x = std::log(j + 1.0), y = std::log(r);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++fit.points_used;
    }
    if (fit.points_used < 2)
        throw std::invalid_argument("residual_report: window has fewer than two usable points");
    const double d = fit.points_used * sxx - sx * sx;
    fit.slope = (fit.points_used * sxy - sx * sy) / d;
    return fit;
}

GridFunction steklov_weight(const SteklovScheme& scheme, const VerblunskyScheme& alpha,
                            std::size_t m) {
    const int n = scheme.n;
    if (m < 16 * static_cast<std::size_t>(2 * n + 1))
        throw std::invalid_argument("steklov_weight: need m >= 16 (2n+1)");
    const PolySystem ps_n = szego_forward(alpha, n);

    // F(z) = Psi_n^*(-z)/Phi_n^*(-z); the monic ratio equals the orthonormal one.
    GridFunction F(m), sig(m);
    for (std::size_t k = 0; k < m; ++k) {
        const cplx mz = -F.point(k);
        const cplx den = eval(ps_n.phi_star, mz);
        if (std::abs(den) < 1e-13)
            throw std::runtime_error("steklov_weight: |Phi_n^*(-z)| < 1e-13 at grid point " +
                                     std::to_string(k));
        F.values[k] = eval(ps_n.psi_star, mz) / den;
        if (F.values[k].real() <= 0)
            throw std::runtime_error("steklov_weight: Re F <= 0 at grid point " +
                                     std::to_string(k));
        sig.values[k] = F.values[k].real() / (2.0 * kPi);
    }

    VerblunskyScheme head(std::vector<cplx>(scheme.gamma.gamma.begin(),
                                            scheme.gamma.gamma.begin() + 2 * n + 1));
    const PolySystem ps_2n1 = szego_forward(head, 2 * n + 1);
    return decouple_weight(ps_2n1, F, sig);
}

std::vector<GrowthRow> growth_report(const std::vector<int>& n_list, double epsilon,
                                     std::size_t m) {
    int n_max = 1;
    for (int n : n_list) n_max = std::max(n_max, n);
    const FHWeightSpec spec(epsilon);
    return growth_report(fh_extract(spec, n_max).scheme, n_list, epsilon, m);
}

std::vector<GrowthRow> growth_report(const VerblunskyScheme& alpha, const std::vector<int>& n_list,
                                     double epsilon, std::size_t m) {
    (void)epsilon;
    std::vector<GrowthRow> rows;
    for (int n : n_list) {
        VerblunskyScheme a_n(std::vector<cplx>(alpha.gamma.begin(), alpha.gamma.begin() + n));
        const SteklovScheme scheme = build_scheme(a_n, n);
        VerblunskyScheme head(std::vector<cplx>(scheme.gamma.gamma.begin(),
                                                scheme.gamma.gamma.begin() + 2 * n + 1));
        const PolySystem ps2 = szego_forward(head, 2 * n + 1);
        const PolySystem psn = szego_forward(a_n, n);

        GrowthRow row;
        row.n = n;
        const GridStats s2 = grid_stats(eval_grid(ps2.phi, m));
        row.sup_phi = s2.sup_modulus / std::sqrt(ps2.norm_sq);
        row.ratio_log = row.sup_phi / std::log(static_cast<double>(n));

        const GridFunction vphi = eval_grid(psn.phi, m);
        const GridFunction vphis = eval_grid(psn.phi_star, m);
        const GridFunction vpsi = eval_grid(psn.psi, m);
        const GridFunction vpsis = eval_grid(psn.psi_star, m);
        double duo = 0, supn = 0;
        for (std::size_t k = 0; k < m; ++k) {
            const cplx z = vphi.point(k);
            duo = std::max(duo, std::abs(vphis.values[k] * vpsis.values[k] +
                                         z * vphi.values[k] * vpsi.values[k]));
            supn = std::max(supn, std::abs(vphi.values[k]));
        }
        row.duo_sup = duo;
        row.sup_phi_n = supn;
        row.mech_ok = 2.0 * s2.sup_modulus >= duo - 2.0 * supn * supn - 1e-12;
        rows.push_back(row);
    }
    return rows;
}

L1Report lemma_l1_suite(const VerblunskyScheme& alpha, const FHWeightSpec& spec, int n,
                        std::size_t m, double exclusion) {
    if (alpha.size() < static_cast<std::size_t>(n))
        throw std::invalid_argument("lemma_l1_suite: alpha shorter than n");
    if (m % 2 != 0) throw std::invalid_argument("lemma_l1_suite: m must be even");
    VerblunskyScheme a_n(std::vector<cplx>(alpha.gamma.begin(), alpha.gamma.begin() + n));
    const PolySystem ps = szego_forward(a_n, n);

    const GridFunction vphi = eval_grid(ps.phi, m);
    const GridFunction vphis = eval_grid(ps.phi_star, m);
    const GridFunction vpsi = eval_grid(ps.psi, m);
    const GridFunction vpsis = eval_grid(ps.psi_star, m);

    L1Report rep;
    rep.n = n;
    rep.phi_star_min = 1e300;
    const std::size_t half = m / 2;
    for (std::size_t k = 0; k < m; ++k) {
        const double a = std::abs(vphis.values[k]);
        rep.phi_star_min = std::min(rep.phi_star_min, a);
        rep.phi_star_max = std::max(rep.phi_star_max, a);

        const cplx z = vphi.point(k);
        rep.duo_sup = std::max(rep.duo_sup, std::abs(vphis.values[k] * vpsis.values[k] +
                                                     z * vphi.values[k] * vpsi.values[k]));

        const std::size_t ka = (k + half) % m;  // antipodal point -z
        rep.trez_sup =
            std::max(rep.trez_sup, std::abs(vpsis.values[k] / vphis.values[k] +
                                            vpsis.values[ka] / vphis.values[ka]));

        rep.quatro_residual =
            std::max(rep.quatro_residual,
                     std::abs(std::conj(vphis.values[k]) * vpsis.values[k] +
                              vphis.values[k] * std::conj(vpsis.values[k]) - 2.0 * ps.norm_sq));

        const double th = vphi.theta(k);
        const double d1 = std::abs(th - kPi / 2.0);
        const double d2 = std::abs(th - 3.0 * kPi / 2.0);
        if (std::min(d1, d2) > exclusion) {
            const double f = fh_eval(spec, th);
            rep.outer_gap = std::max(rep.outer_gap, std::abs(a * std::sqrt(f) - 1.0));
        }
    }
    return rep;
}

}  // namespace opuc
