#pragma once

#include <complex>

namespace opuc {

using cplx = std::complex<double>;

/// Gamma function, Lanczos approximation (g = 7, 9 terms) with reflection for
/// Re z < 1/2. Certified against the shipped 30-digit oracle table on the
/// strip |Im z| <= 2, Re z in [-5, 5] (relative error <= 1e-12 there).
/// Throws on nonpositive integer z.
cplx complex_gamma(cplx z);

/// Digamma via the recurrence shift to Re z >= 10 plus the Bernoulli
/// asymptotic series. No reflection step, so the reflection identity is an
/// independent check. Throws on nonpositive integer z.
cplx complex_digamma(cplx z);

/// log on the branch 0 <= arg < 2*pi (cut along the positive reals).
cplx log_branch_02pi(cplx z);

/// Confluent hypergeometric function of the second kind, psi(a, 1, zeta) with
/// the argument convention 0 <= arg zeta < 2*pi.
///
/// Series summation (truncated at 1e-16 relative) for |zeta| <= 8; the
/// two-term expansion zeta^{-a}(1 - a^2/zeta) beyond, but only inside the
/// sector arg zeta in [0, 3*pi/2] where it is valid -- for arg in
/// (3*pi/2, 2*pi) an e^zeta-sized Stokes term appears and the series is used
/// for any modulus. Expansion error is O(|zeta|^{-2}) with an a-dependent
/// constant that degrades toward the sector edge and for |a| near 1.
/// a = 0 returns 1 (the a -> 0 limit); other nonpositive integer a throws.
cplx kummer_psi(cplx a, cplx zeta);

namespace detail {
// The two evaluation routes, for the matching-region comparison, and a
// fixed-length series for truncation self-checks.
cplx kummer_series(cplx a, cplx zeta);
cplx kummer_series_fixed(cplx a, cplx zeta, int terms);
cplx kummer_asymptotic(cplx a, cplx zeta);
}

}  // namespace opuc
