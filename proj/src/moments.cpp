#include "opuc/moments.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace opuc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitTol = 1e-10;

// Neumaier compensated accumulator.
struct CompSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

}  // namespace

MomentSequence::MomentSequence(std::vector<cplx> cc) : c(std::move(cc)) {
    if (c.empty()) throw std::invalid_argument("MomentSequence: empty");
    if (std::abs(c[0] - cplx(1.0)) > 1e-12)
        throw std::invalid_argument("MomentSequence: c_0 must be 1 (normalized)");
}

MomentSequence fh_moments(const FHWeightSpec& spec, std::size_t K) {
    std::vector<cplx> c(K + 1, 0.0);
    c[0] = 1.0;
    const double t = 2.0 * std::tanh(spec.epsilon) / kPi;
    for (std::size_t k = 1; k <= K; ++k) {
        static const int sinq[4] = {0, 1, 0, -1};  // sin(k pi/2)
        const int s = sinq[k % 4];
        if (s != 0) c[k] = t * static_cast<double>(s) / static_cast<double>(k);
    }
    return MomentSequence(std::move(c));
}

MomentSequence generic_moments(const GridFunction& w, std::size_t K) {
    if (w.m < 8 * K) throw std::invalid_argument("generic_moments: need m >= 8K");
    CompSum mass;
    for (std::size_t j = 0; j < w.m; ++j) {
        if (w.values[j].real() < 0)
            throw std::invalid_argument("generic_moments: negative weight at grid point " +
                                        std::to_string(j));
        mass.add(w.values[j].real());
    }
    const double total = mass.value();
    if (!(total > 0)) throw std::invalid_argument("generic_moments: weight integral not positive");

    std::vector<cplx> c(K + 1, 0.0);
    c[0] = 1.0;
    for (std::size_t k = 1; k <= K; ++k) {
        CompSum re, im;
        for (std::size_t j = 0; j < w.m; ++j) {
            const double t = -static_cast<double>(k) * w.theta(j);
            const double wv = w.values[j].real();
            re.add(wv * std::cos(t));
            im.add(wv * std::sin(t));
        }
        c[k] = cplx(re.value(), im.value()) / total;
    }
    return MomentSequence(std::move(c));
}

VerblunskyScheme extract_verblunsky(const MomentSequence& mom, std::size_t N,
                                    Precision precision) {
    if (N > mom.K())
        throw std::invalid_argument("extract_verblunsky: need moments c_0..c_N (N <= K)");
    if (precision == Precision::high)
        return VerblunskyScheme(detail::extract_quad(mom.c, N));

    std::vector<cplx> phi{1.0}, phis{1.0};
    std::vector<cplx> out;
    out.reserve(N);
    double norm2 = 1.0;
    for (std::size_t k = 0; k < N; ++k) {
        CompSum re, im;
        for (std::size_t j = 0; j <= k; ++j) {
            const cplx t = std::conj(phi[j]) * mom.c[j + 1];
            re.add(t.real());
            im.add(t.imag());
        }
        const cplx g = cplx(re.value(), im.value()) / norm2;
        if (std::abs(g) >= 1.0 - kUnitTol)
            throw std::runtime_error(
                "extract_verblunsky: |gamma| >= 1 - 1e-10 at index " + std::to_string(k) +
                " (moments not from a nondegenerate positive measure, or precision exhausted)");
        out.push_back(g);
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
    return VerblunskyScheme(std::move(out));
}

ExtractionResult fh_extract(const FHWeightSpec& spec, std::size_t N, Precision precision) {
    ExtractionResult r;
    r.provenance = {"closed-form", 0, N + 8, precision};
    if (precision == Precision::high) {
        r.scheme = VerblunskyScheme(detail::fh_extract_quad(spec.epsilon, N));
    } else {
        r.scheme = extract_verblunsky(fh_moments(spec, N + 8), N);
    }
    return r;
}

}  // namespace opuc
