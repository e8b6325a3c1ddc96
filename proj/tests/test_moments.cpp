#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "opuc/fh.hpp"
#include "opuc/moments.hpp"
#include "opuc/steklov.hpp"
#include "test_util.hpp"

using namespace opuc;
using namespace opuc::testutil;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("two-jump weight values and the half-open convention") {
    const FHWeightSpec spec(0.1);
    CHECK(fh_eval(spec, 0.0) == doctest::Approx(std::exp(0.1)).epsilon(1e-15));
    CHECK(fh_eval(spec, kPi) == doctest::Approx(std::exp(-0.1)).epsilon(1e-15));
    CHECK(fh_eval(spec, kPi / 2.0) == doctest::Approx(std::exp(-0.1)).epsilon(1e-15));
    CHECK(fh_eval(spec, 3.0 * kPi / 2.0) == doctest::Approx(std::exp(0.1)).epsilon(1e-15));
    CHECK_THROWS_AS(FHWeightSpec(0.0), std::invalid_argument);
    CHECK_THROWS_AS(FHWeightSpec(0.35), std::invalid_argument);
}

TEST_CASE("closed-form moments confirmed by the quadrature oracle") {
    const FHWeightSpec spec(0.1);
    const MomentSequence cf = fh_moments(spec, 16);
    CHECK(cf.c[0] == cplx(1.0));
    CHECK(cf.c[2] == cplx(0.0));
    CHECK(cf.c[4] == cplx(0.0));
    CHECK(std::abs(cf.c[1] - cplx(2.0 * std::tanh(0.1) / kPi)) < 1e-16);

    // the jumps limit the rectangle rule to O(1/m): the gap halves with m
    // doubled and sits under 1e-6 by m = 2^18
    const auto gap = [&](std::size_t m) {
        const MomentSequence gq = generic_moments(fh_weight_grid(spec, m), 16);
        double g = 0;
        for (std::size_t k = 0; k <= 16; ++k) g = std::max(g, std::abs(cf.c[k] - gq.c[k]));
        return g;
    };
    const double g16 = gap(1 << 16), g17 = gap(1 << 17), g18 = gap(1 << 18);
    CHECK(g16 / g17 == doctest::Approx(2.0).epsilon(0.2));
    CHECK(g18 < 1e-6);
}

TEST_CASE("generic moments of flat and geometric weights") {
    const MomentSequence leb = generic_moments(GridFunction::constant(4096, 1.0), 8);
    for (std::size_t k = 1; k <= 8; ++k) CHECK(std::abs(leb.c[k]) < 1e-13);

    const VerblunskyScheme s{0.5};
    const GridFunction w = bernstein_szego_weight(szego_forward(s, 1), 8192);
    const MomentSequence mom = generic_moments(w, 10);
    for (std::size_t k = 0; k <= 10; ++k)
        CHECK(std::abs(mom.c[k] - cplx(std::pow(0.5, static_cast<double>(k)))) < 1e-10);

    CHECK_THROWS_AS(generic_moments(GridFunction::constant(16, 1.0), 8), std::invalid_argument);
    CHECK_THROWS_AS(generic_moments(GridFunction::constant(4096, 0.0), 4), std::invalid_argument);
}

TEST_CASE("extraction basics") {
    std::vector<cplx> lc(10, 0.0);
    lc[0] = 1.0;
    const VerblunskyScheme leb = extract_verblunsky(MomentSequence(lc), 6);
    for (const auto& g : leb.gamma) CHECK(g == cplx(0.0));

    std::vector<cplx> geo(11);
    for (int k = 0; k <= 10; ++k) geo[k] = std::pow(0.5, k);
    const VerblunskyScheme gs = extract_verblunsky(MomentSequence(geo), 6);
    CHECK(std::abs(gs.gamma[0] - cplx(0.5)) < 1e-15);
    for (int j = 1; j < 6; ++j) CHECK(std::abs(gs.gamma[j]) < 1e-14);

    CHECK_THROWS_AS(extract_verblunsky(MomentSequence(lc), 12), std::invalid_argument);
    std::vector<cplx> bad{1.0, 1.5, 0.0};
    CHECK_THROWS_WITH_AS(extract_verblunsky(MomentSequence(bad), 2),
                         doctest::Contains("index 0"), std::runtime_error);
}

TEST_CASE("round trip through the Bernstein-Szego weight") {
    Rng rng(31);
    for (int t = 0; t < 6; ++t) {
        const int k = rng.randint(1, 10);
        const VerblunskyScheme s = random_complex_scheme(rng, k, 0.05, 0.6);
        const GridFunction w = bernstein_szego_weight(szego_forward(s, k), 1 << 15);
        const VerblunskyScheme got = extract_verblunsky(generic_moments(w, k + 8), k);
        CHECK(max_diff(got, s) < 1e-8);
    }
}

TEST_CASE("round trip against the exact-moment oracle") {
    Rng rng(37);
    const int k = 10;
    const VerblunskyScheme s = random_complex_scheme(rng, k, 0.05, 0.7);
    const MomentSequence mom = moments_from_scheme(s, k + 6);
    const VerblunskyScheme got = extract_verblunsky(mom, k);
    CHECK(max_diff(got, s) < 1e-12);
}

TEST_CASE("rotation consistency of extraction") {
    Rng rng(41);
    const int k = 8;
    const VerblunskyScheme s = random_complex_scheme(rng, k, 0.05, 0.6);
    const MomentSequence mom = moments_from_scheme(s, k + 4);
    const double beta = 0.7;
    std::vector<cplx> tw(mom.c.size());
    for (std::size_t j = 0; j < tw.size(); ++j) {
        const double a = -static_cast<double>(j) * beta;
        tw[j] = cplx(std::cos(a), std::sin(a)) * mom.c[j];
    }
    const VerblunskyScheme got = extract_verblunsky(MomentSequence(tw), k);
    CHECK(max_diff(got, rotate_scheme(s, beta)) < 1e-9);
}

TEST_CASE("two-jump extraction: real, decaying, near the main term") {
    const FHWeightSpec spec(0.1);
    const ExtractionResult r = fh_extract(spec, 128);
    CHECK(r.provenance.source == "closed-form");
    CHECK(r.provenance.K == 136);
    for (const auto& g : r.scheme.gamma) CHECK(g.imag() == 0.0);
    // |gamma_j| <= C/(j+1) with C close to 2 eps / pi
    for (std::size_t j = 16; j < r.scheme.size(); ++j)
        CHECK(std::abs(r.scheme.gamma[j]) <= 3.0 * 0.1 / (kPi * (j + 1.0)));
    // gamma_0 agrees with the main term within the remainder budget
    CHECK(std::abs(r.scheme.gamma[0] - l4_main_term(0, 0.1)) < 1e-4);
}

TEST_CASE("orthogonality certificate of the extracted polynomials") {
    // against the closed-form moments (recursion consistency)
    const FHWeightSpec spec(0.1);
    const std::size_t N = 16;
    const MomentSequence mom = fh_moments(spec, 2 * N);
    const VerblunskyScheme g = extract_verblunsky(mom, N);
    const PolySystem ps = szego_forward(g, static_cast<int>(N));
    for (std::size_t j = 0; j < N; ++j) {
        cplx ip = 0.0;  // integral Phi_N e^{-ij theta} dmu = sum_l a_l conj(c_{l-j})
        for (int l = 0; l <= ps.phi.degree(); ++l) {
            const int d = l - static_cast<int>(j);
            const cplx c = (d >= 0) ? std::conj(mom.c[d]) : mom.c[-d];
            ip += ps.phi.coeff[l] * c;
        }
        CHECK(std::abs(ip) < 1e-7);
    }

    // against grid quadrature for a smooth weight (independent route)
    const VerblunskyScheme s{0.5, -0.2};
    const GridFunction w = bernstein_szego_weight(szego_forward(s, 2), 8192);
    const VerblunskyScheme g2 = extract_verblunsky(generic_moments(w, 16), 8);
    const GridFunction v = eval_grid(szego_forward(g2, 8).phi, 8192);
    for (int j = 0; j < 8; ++j) {
        cplx ip = 0.0;
        for (std::size_t t = 0; t < 8192; ++t) {
            const double a = -j * v.theta(t);
            ip += v.values[t] * cplx(std::cos(a), std::sin(a)) * w.values[t].real();
        }
        ip *= 2.0 * kPi / 8192.0;
        CHECK(std::abs(ip) < 1e-7);
    }
}

TEST_CASE("high-precision extraction quantifies binary64 drift") {
    const FHWeightSpec spec(0.1);
    const VerblunskyScheme std_g = fh_extract(spec, 512).scheme;
    const VerblunskyScheme hi_g = fh_extract(spec, 512, Precision::high).scheme;
    CHECK(max_diff(std_g, hi_g) < 1e-11);
}

TEST_CASE("Caratheodory function closed form") {
    const FHWeightSpec spec(0.1);
    CHECK(std::abs(caratheodory_F(spec, 0.0) - cplx(std::cosh(0.1))) < 1e-15);
    CHECK_THROWS_AS(caratheodory_F(spec, cplx(0.0, 1.0)), std::invalid_argument);

    // antipodal sum is constant
    Rng rng(43);
    for (int t = 0; t < 16; ++t) {
        const double th = rng.uniform(0.0, 2.0 * kPi);
        const cplx z = 0.97 * cplx(std::cos(th), std::sin(th));
        CHECK(std::abs(caratheodory_F(spec, z) + caratheodory_F(spec, -z) -
                       cplx(2.0 * std::cosh(0.1))) < 1e-12);
    }

    // boundary real part equals the weight off the jumps
    for (const double th : {0.3, 1.2, 2.0, 3.0, 4.0, 5.5}) {
        const cplx z(std::cos(th), std::sin(th));
        CHECK(std::abs(caratheodory_F(spec, z).real() - fh_eval(spec, th)) < 1e-8);
    }

    // interior values match the Poisson-kernel quadrature oracle
    const std::size_t m = 8192;
    for (const double th0 : {0.3, 2.0, 4.0}) {
        const double r = 0.7;
        double acc = 0.0;
        for (std::size_t t = 0; t < m; ++t) {
            const double tt = 2.0 * kPi * t / m;
            const double P = (1 - r * r) / (1 - 2 * r * std::cos(th0 - tt) + r * r);
            acc += P * fh_eval(spec, tt);
        }
        acc /= m;
        const cplx z = r * cplx(std::cos(th0), std::sin(th0));
        CHECK(std::abs(caratheodory_F(spec, z).real() - acc) < 1e-4);
    }
}

TEST_CASE("Szego function closed form") {
    const FHWeightSpec spec(0.1);
    CHECK(std::abs(szego_D(spec, 0.0) - cplx(1.0)) < 1e-15);
    CHECK(std::abs(szego_D(spec, 1.0) - cplx(std::exp(0.05))) < 1e-14);
    for (const double th : {0.4, 1.3, 2.2, 3.3, 4.4, 6.0}) {
        const cplx z(std::cos(th), std::sin(th));
        CHECK(std::abs(std::norm(szego_D(spec, z)) - fh_eval(spec, th)) < 1e-12);
    }
}
