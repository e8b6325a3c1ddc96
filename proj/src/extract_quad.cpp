// binary128 extraction path. Self-contained minimal complex arithmetic over
// __float128; only what the Szego inversion needs.
#include <quadmath.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "opuc/moments.hpp"

namespace opuc::detail {

namespace {

struct qcplx {
    __float128 re = 0, im = 0;
};

inline qcplx operator+(qcplx a, qcplx b) { return {a.re + b.re, a.im + b.im}; }
inline qcplx operator-(qcplx a, qcplx b) { return {a.re - b.re, a.im - b.im}; }
inline qcplx operator*(qcplx a, qcplx b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline qcplx conj(qcplx a) { return {a.re, -a.im}; }
inline __float128 norm(qcplx a) { return a.re * a.re + a.im * a.im; }
inline qcplx div_real(qcplx a, __float128 s) { return {a.re / s, a.im / s}; }

std::vector<cplx> extract_impl(const std::vector<qcplx>& c, std::size_t N) {
    std::vector<qcplx> phi{{1, 0}}, phis{{1, 0}};
    __float128 norm2 = 1;
    std::vector<cplx> out;
    out.reserve(N);
    const __float128 unit = 1 - (__float128)1e-10;
    for (std::size_t k = 0; k < N; ++k) {
        qcplx inner{0, 0};
        for (std::size_t j = 0; j <= k; ++j) inner = inner + conj(phi[j]) * c[j + 1];
        const qcplx g = div_real(inner, norm2);
        if (norm(g) >= unit * unit)
            throw std::runtime_error("extract_verblunsky(high): |gamma| >= 1 - 1e-10 at index " +
                                     std::to_string(k));
        out.emplace_back(static_cast<double>(g.re), static_cast<double>(g.im));
        const qcplx gc = conj(g);
        const std::size_t d = k + 2;
        std::vector<qcplx> nphi(d), nphis(d);
        for (std::size_t i = 0; i < d; ++i) {
            const qcplx zphi = (i > 0) ? phi[i - 1] : qcplx{0, 0};
            const qcplx ps = (i < d - 1) ? phis[i] : qcplx{0, 0};
            nphi[i] = zphi - gc * ps;
            nphis[i] = ps - g * zphi;
        }
        phi = std::move(nphi);
        phis = std::move(nphis);
        norm2 *= 1 - norm(g);
    }
    return out;
}

}  // namespace

std::vector<cplx> extract_quad(const std::vector<cplx>& moments, std::size_t N) {
    if (N + 1 > moments.size())
        throw std::invalid_argument("extract_verblunsky(high): need moments c_0..c_N");
    std::vector<qcplx> c(moments.size());
    for (std::size_t k = 0; k < moments.size(); ++k)
        c[k] = {(__float128)moments[k].real(), (__float128)moments[k].imag()};
    return extract_impl(c, N);
}

std::vector<cplx> fh_extract_quad(double epsilon, std::size_t N) {
    const std::size_t K = N + 8;
    std::vector<qcplx> c(K + 1);
    c[0] = {1, 0};
    const __float128 t = 2 * tanhq((__float128)epsilon) / M_PIq;
    static const int sinq4[4] = {0, 1, 0, -1};
    for (std::size_t k = 1; k <= K; ++k) {
        const int s = sinq4[k % 4];
        if (s != 0) c[k] = {t * s / (__float128)k, 0};
    }
    return extract_impl(c, N);
}

}  // namespace opuc::detail
