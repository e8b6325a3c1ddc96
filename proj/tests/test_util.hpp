#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "opuc/moments.hpp"
#include "opuc/szego.hpp"

namespace opuc::testutil {

// Raw-output uniform draws; independent of libstdc++ distribution details.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double uniform01() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }
    int randint(int lo, int hi) { return lo + static_cast<int>(uniform01() * (hi - lo + 1)); }
};

inline VerblunskyScheme random_real_scheme(Rng& rng, int k, double bound) {
    std::vector<cplx> g(k);
    for (auto& x : g) x = rng.uniform(-bound, bound);
    return VerblunskyScheme(std::move(g));
}

inline VerblunskyScheme random_complex_scheme(Rng& rng, int k, double lo, double hi) {
    std::vector<cplx> g(k);
    for (auto& x : g) {
        const double r = rng.uniform(lo, hi);
        const double p = rng.uniform(0.0, 2.0 * std::numbers::pi);
        x = cplx(r * std::cos(p), r * std::sin(p));
    }
    return VerblunskyScheme(std::move(g));
}

// Exact moments of the Bernstein-Szego probability measure of a finite scheme
// (zero-padded): inverts the extraction recursion, independent of the grid
// quadrature path it is used to check.
inline MomentSequence moments_from_scheme(const VerblunskyScheme& s, std::size_t K) {
    std::vector<cplx> c(K + 1, 0.0);
    c[0] = 1.0;
    std::vector<cplx> phi{1.0}, phis{1.0};
    double norm2 = 1.0;
    for (std::size_t k = 0; k < K; ++k) {
        const cplx g = (k < s.size()) ? s.gamma[k] : cplx(0.0);
        cplx partial = 0.0;
        for (std::size_t j = 0; j + 1 <= k; ++j) partial += std::conj(phi[j]) * c[j + 1];
        c[k + 1] = (g * norm2 - partial) / std::conj(phi[k]);  // leading coeff is 1
        const cplx gc = std::conj(g);
        const std::size_t d = k + 2;
        std::vector<cplx> nphi(d), nphis(d);
        for (std::size_t i = 0; i < d; ++i) {
            const cplx zphi = (i > 0) ? phi[i - 1] : cplx(0.0);
            const cplx ps = (i < d - 1) ? phis[i] : cplx(0.0);
            nphi[i] = zphi - gc * ps;
            nphis[i] = ps - g * zphi;
        }
        phi = std::move(nphi);
        phis = std::move(nphis);
        norm2 *= 1.0 - std::norm(g);
    }
    return MomentSequence(std::move(c));
}

inline double max_diff(const VerblunskyScheme& a, const VerblunskyScheme& b) {
    double d = 0;
    for (std::size_t j = 0; j < a.size() && j < b.size(); ++j)
        d = std::max(d, std::abs(a.gamma[j] - b.gamma[j]));
    return d;
}

}  // namespace opuc::testutil
