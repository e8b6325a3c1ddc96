#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "opuc/moments.hpp"
#include "opuc/szego.hpp"
#include "test_util.hpp"

using namespace opuc;
using namespace opuc::testutil;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("one recursion step") {
    const PolySystem ps = szego_forward(VerblunskyScheme({0.5}), 1);
    CHECK(ps.phi == ComplexPoly{-0.5, 1.0});
    CHECK(ps.phi_star == ComplexPoly{1.0, -0.5});
    CHECK(ps.psi == ComplexPoly{0.5, 1.0});
    CHECK(ps.psi_star == ComplexPoly{1.0, 0.5});
    CHECK(ps.norm_sq == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("free case and a two-step hand value") {
    const PolySystem free = szego_forward(VerblunskyScheme(std::vector<cplx>(6, 0.0)), 6);
    CHECK(free.phi == ComplexPoly{0, 0, 0, 0, 0, 0, 1.0});
    CHECK(free.phi_star == ComplexPoly({1.0}).with_degree(6));

    const PolySystem ps = szego_forward(VerblunskyScheme({0.5, -0.3}), 2);
    CHECK(std::abs(ps.phi.at(2) - cplx(1.0)) < 1e-15);
    CHECK(std::abs(ps.phi.at(1) - cplx(-0.65)) < 1e-15);
    CHECK(std::abs(ps.phi.at(0) - cplx(0.3)) < 1e-15);

    CHECK_THROWS_AS(szego_forward(VerblunskyScheme({0.5}), 2), std::invalid_argument);
    CHECK_THROWS_AS(szego_forward(VerblunskyScheme({1.0}), 1), std::runtime_error);
}

TEST_CASE("real schemes produce exactly real coefficients") {
    Rng rng(3);
    const VerblunskyScheme s = random_real_scheme(rng, 24, 0.8);
    const PolySystem ps = szego_forward(s, 24);
    for (const auto& c : ps.phi.coeff) CHECK(c.imag() == 0.0);
    for (const auto& c : ps.psi_star.coeff) CHECK(c.imag() == 0.0);
}

TEST_CASE("doubling map layout") {
    const VerblunskyScheme one{0.4};
    CHECK(double_scheme(one).gamma == std::vector<cplx>{0.4, -0.4});
    const VerblunskyScheme two{0.4, -0.2};
    CHECK(double_scheme(two).gamma == std::vector<cplx>{0.4, -0.2, 0.2, -0.4});
    CHECK_THROWS_AS(double_scheme(VerblunskyScheme({cplx(0.1, 0.2)})), std::invalid_argument);
}

TEST_CASE("doubling identities hold coefficientwise") {
    const VerblunskyScheme a{0.3, -0.2, 0.5};
    const int k = 3;
    const PolySystem ps = szego_forward(a, k);
    const PolySystem ps2 = szego_forward(double_scheme(a), 2 * k);

    const ComplexPoly B = ps.phi_star * ps.psi_star - ps.phi_star * ps.phi_star;
    CHECK(B.at(0) == cplx(0.0));  // the z^{-1} factor cancels exactly
    const ComplexPoly rhs1 = ps.phi * ps.phi + ps.phi * ps.psi + shift_down_by_z(B);
    CHECK(max_coeff_modulus(cplx(2.0) * ps2.phi - rhs1) < 1e-13);

    const ComplexPoly rhs2 = ps.phi_star * ps.phi_star + ps.phi_star * ps.psi_star -
                             shift_by_z(ps.phi * ps.phi) + shift_by_z(ps.phi * ps.psi);
    CHECK(max_coeff_modulus(cplx(2.0) * ps2.phi_star - rhs2) < 1e-13);
}

TEST_CASE("appending a zero parameter shifts Phi and fixes Phi^*") {
    Rng rng(5);
    const VerblunskyScheme a = random_real_scheme(rng, 9, 0.7);
    const VerblunskyScheme dbl = double_scheme(a);
    const PolySystem ps2 = szego_forward(dbl, 18);
    std::vector<cplx> ext = dbl.gamma;
    ext.push_back(0.0);
    const PolySystem ps3 = szego_forward(VerblunskyScheme(ext), 19);
    CHECK(ps3.phi == shift_by_z(ps2.phi));
    CHECK(ps3.phi_star == ps2.phi_star.with_degree(19));
}

TEST_CASE("rotation of parameters") {
    const VerblunskyScheme a{0.3, -0.1, 0.25};
    CHECK(rotate_scheme(a, 0.0).gamma == a.gamma);
    CHECK(rotate_scheme(a, kPi).gamma == std::vector<cplx>{-0.3, -0.1, -0.25});
    const VerblunskyScheme r = rotate_scheme(a, 1.0);
    for (std::size_t j = 0; j < 3; ++j) {
        const double ang = -(static_cast<double>(j) + 1.0);
        CHECK(std::abs(r.gamma[j] - cplx(std::cos(ang), std::sin(ang)) * a.gamma[j]) < 1e-15);
    }
}

TEST_CASE("determinant identity residual") {
    CHECK(wronskian_residual(szego_forward(VerblunskyScheme(std::vector<cplx>(8, 0.0)), 8)) == 0.0);
    CHECK(wronskian_residual(szego_forward(VerblunskyScheme({0.5}), 1)) < 1e-15);
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        const int k = 32;
        const VerblunskyScheme s = random_complex_scheme(rng, k, 0.0, 0.9);
        CHECK(wronskian_residual(szego_forward(s, k)) < 1e-12);
    }
}

TEST_CASE("boundary identity of the two star polynomials") {
    Rng rng(19);
    const int k = 24;
    const VerblunskyScheme s = random_complex_scheme(rng, k, 0.0, 0.8);
    const PolySystem ps = szego_forward(s, k);
    const GridFunction a = eval_grid(ps.phi_star, 512);
    const GridFunction b = eval_grid(ps.psi_star, 512);
    for (std::size_t t = 0; t < 512; ++t) {
        const double r = std::abs(std::conj(a.values[t]) * b.values[t] +
                                  a.values[t] * std::conj(b.values[t]) - 2.0 * ps.norm_sq);
        CHECK(r < 1e-10);
    }
}

TEST_CASE("Bernstein-Szego weight") {
    const GridFunction flat = bernstein_szego_weight(
        szego_forward(VerblunskyScheme(std::vector<cplx>{}), 0), 64);
    for (const auto& v : flat.values)
        CHECK(v.real() == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-15));

    const VerblunskyScheme s{0.5};
    const GridFunction w = bernstein_szego_weight(szego_forward(s, 1), 8192);
    // pointwise formula
    for (std::size_t k = 0; k < 8192; k += 1111) {
        const cplx z = w.point(k);
        const double expect = 0.75 / (2.0 * kPi * std::norm(1.0 - 0.5 * z));
        CHECK(w.values[k].real() == doctest::Approx(expect).epsilon(1e-13));
    }
    CHECK(std::abs(grid_integral(w).real() - 1.0) < 1e-12);
    const MomentSequence mom = generic_moments(w, 4);
    CHECK(std::abs(mom.c[1] - cplx(0.5)) < 1e-10);
}

TEST_CASE("norm identity against quadrature over the originating weight") {
    Rng rng(23);
    const int k = 8;
    const VerblunskyScheme s = random_complex_scheme(rng, k, 0.0, 0.6);
    const PolySystem ps = szego_forward(s, k);
    const GridFunction w = bernstein_szego_weight(ps, 8192);
    const GridFunction v = eval_grid(ps.phi, 8192);
    double q = 0;
    for (std::size_t t = 0; t < 8192; ++t) q += std::norm(v.values[t]) * w.values[t].real();
    q *= 2.0 * kPi / 8192.0;
    CHECK(q == doctest::Approx(ps.norm_sq).epsilon(1e-8));
}

TEST_CASE("decoupled weight formula") {
    // n = 0, F = 1, sigma_tilde = Lebesgue: weight stays Lebesgue
    const PolySystem triv = szego_forward(VerblunskyScheme(std::vector<cplx>{}), 0);
    const GridFunction F1 = GridFunction::constant(256, 1.0);
    const GridFunction leb = GridFunction::constant(256, 1.0 / (2.0 * kPi));
    const GridFunction w0 = decouple_weight(triv, F1, leb);
    for (const auto& v : w0.values)
        CHECK(v.real() == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-15));

    // F = 1 at general n: sigma' = sigma_tilde' / |phi_n^*|^2
    Rng rng(29);
    const VerblunskyScheme s = random_real_scheme(rng, 4, 0.6);
    const PolySystem ps = szego_forward(s, 4);
    const GridFunction w1 = decouple_weight(ps, GridFunction::constant(512, 1.0),
                                            GridFunction::constant(512, 1.0 / (2.0 * kPi)));
    const GridFunction vs = eval_grid(ps.phi_star, 512);
    for (std::size_t t = 0; t < 512; ++t) {
        const double expect = (1.0 / (2.0 * kPi)) / (std::norm(vs.values[t]) / ps.norm_sq);
        CHECK(w1.values[t].real() == doctest::Approx(expect).epsilon(1e-12));
    }

    CHECK_THROWS_AS(decouple_weight(ps, GridFunction::constant(512, -1.0), leb),
                    std::invalid_argument);  // mismatched m
    CHECK_THROWS_AS(decouple_weight(ps, GridFunction::constant(512, -1.0),
                                    GridFunction::constant(512, 1.0)),
                    std::runtime_error);  // Re F <= 0
}

TEST_CASE("sum rule residuals") {
    const GridFunction leb = GridFunction::constant(128, 1.0 / (2.0 * kPi));
    CHECK(sum_rule_residual(leb, VerblunskyScheme(std::vector<cplx>{})) == 0.0);

    const VerblunskyScheme s{0.5};
    const GridFunction w = bernstein_szego_weight(szego_forward(s, 1), 8192);
    CHECK(sum_rule_residual(w, s) < 1e-10);

    GridFunction bad = leb;
    bad.values[3] = -0.1;
    CHECK_THROWS_AS(sum_rule_residual(bad, s), std::invalid_argument);
}
