#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <numbers>

#include "opuc/special.hpp"
#include "test_util.hpp"

using namespace opuc;
using opuc::testutil::Rng;

namespace {
constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);

std::string fixture_path() {
    return std::string(OPUC_SOURCE_DIR) + "/tests/fixtures/gamma_oracle.csv";
}
}

TEST_CASE("gamma standard values") {
    CHECK(std::abs(complex_gamma(1.0) - cplx(1.0)) < 1e-14);
    CHECK(std::abs(complex_gamma(0.5) - cplx(std::sqrt(kPi))) < 1e-14);
    CHECK(std::abs(complex_gamma(5.0) - cplx(24.0)) < 1e-12);
    CHECK_THROWS_AS(complex_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(complex_gamma(-3.0), std::domain_error);
}

TEST_CASE("the gamma-ratio modulus identity behind the main-term bound") {
    for (const double eps : {0.05, 0.1, 0.2}) {
        const double y = eps / kPi;
        const cplx ratio = complex_gamma(cplx(1.0, -y)) / complex_gamma(cplx(0.0, y));
        CHECK(std::abs(ratio) == doctest::Approx(y).epsilon(1e-12));
    }
}

TEST_CASE("gamma recurrence and reflection on the strip") {
    Rng rng(101);
    int drawn = 0;
    while (drawn < 100) {
        const cplx z(rng.uniform(-5, 5), rng.uniform(-2, 2));
        if (std::abs(z.imag()) < 0.1 && std::abs(z.real() - std::round(z.real())) < 0.1) continue;
        ++drawn;
        const cplx g1 = complex_gamma(z + 1.0);
        CHECK(std::abs(g1 - z * complex_gamma(z)) / std::abs(g1) < 1e-12);
        CHECK(std::abs(complex_gamma(z) * complex_gamma(1.0 - z) * std::sin(kPi * z) / kPi - 1.0) <
              1e-12);
    }
}

TEST_CASE("gamma matches the 30-digit oracle table") {
    std::ifstream in(fixture_path());
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double v[4];
        std::size_t pos = 0;
        for (int f = 0; f < 4; ++f) {
            const std::size_t nx = (f < 3) ? line.find(',', pos) : line.size();
            v[f] = std::strtod(line.substr(pos, nx - pos).c_str(), nullptr);
            pos = nx + 1;
        }
        const cplx ref(v[2], v[3]);
        CHECK(std::abs(complex_gamma(cplx(v[0], v[1])) - ref) / std::abs(ref) < 1e-12);
        ++rows;
    }
    CHECK(rows >= 40);
}

TEST_CASE("digamma values and identities") {
    CHECK(std::abs(complex_digamma(1.0) - cplx(-0.57721566490153286)) < 1e-13);
    CHECK_THROWS_AS(complex_digamma(-2.0), std::domain_error);

    const cplx z(0.3, 0.2);
    const cplx resid = complex_digamma(1.0 - z) - complex_digamma(z) -
                       kPi * std::cos(kPi * z) / std::sin(kPi * z);
    CHECK(std::abs(resid) < 1e-12);

    const double y = 0.1 / kPi;
    CHECK(std::abs(complex_digamma(cplx(1.0, y)) - std::conj(complex_digamma(cplx(1.0, -y)))) <
          1e-14);

    // numerical derivative of ln Gamma, central differences
    const cplx w(1.7, 0.3);
    const double h = 1e-5;
    const cplx num = (std::log(complex_gamma(w + h)) - std::log(complex_gamma(w - h))) / (2.0 * h);
    CHECK(std::abs(num - complex_digamma(w)) < 1e-6);
}

TEST_CASE("psi: small-argument logarithmic behavior along iu") {
    const cplx a(0.0, 0.1 / kPi);
    double prev = 1e300;
    for (const double u : {0.5, 0.1, 0.02, 0.004}) {
        const cplx zeta(0.0, u);
        const cplx lead = -(log_branch_02pi(zeta) + complex_digamma(a) -
                            2.0 * complex_digamma(1.0)) / complex_gamma(a);
        const double gap = std::abs(kummer_psi(a, zeta) - lead);
        CHECK(gap <= u * std::abs(std::log(u)));
        CHECK(gap < prev);
        prev = gap;
    }
}

TEST_CASE("psi a=1 equals the integral representation for Re zeta > 0") {
    // integral_0^inf e^{-zeta t}/(1+t) dt, composite Simpson on [0, T]
    const auto oracle = [](cplx zeta) {
        const double T = 45.0 / zeta.real();
        const int n = 200000;  // even
        const double h = T / n;
        cplx acc = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double t = i * h;
            const cplx f = std::exp(-zeta * t) / (1.0 + t);
            const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            acc += w * f;
        }
        return acc * (h / 3.0);
    };
    for (const cplx zeta : {cplx(2.0, 0.0), cplx(1.0, 1.0), cplx(0.5, 0.1)}) {
        CHECK(std::abs(kummer_psi(1.0, zeta) - oracle(zeta)) < 1e-8);
    }
}

TEST_CASE("psi series and asymptotic branches agree on the matching ring") {
    for (const double sgn : {1.0, -1.0}) {
        const cplx a(0.0, sgn * 0.1 / kPi);
        for (int i = 0; i <= 20; ++i) {
            const double th = 0.02 + (1.5 * kPi - 0.04) * i / 20.0;
            const cplx zeta = 8.0 * cplx(std::cos(th), std::sin(th));
            const cplx s = detail::kummer_series(a, zeta);
            const cplx y = detail::kummer_asymptotic(a, zeta);
            CHECK(std::abs(s - y) / std::abs(s) < 5e-3);
        }
    }
}

TEST_CASE("psi series truncation is self-validating") {
    const cplx a(0.0, 0.1 / kPi);
    for (const cplx zeta : {cplx(4.0, 3.0), cplx(0.0, 8.0), cplx(-7.0, 2.0)}) {
        const cplx v1 = detail::kummer_series_fixed(a, zeta, 40);
        const cplx v2 = detail::kummer_series_fixed(a, zeta, 80);
        CHECK(std::abs(v1 - v2) / std::abs(v2) < 1e-14);
    }
}

TEST_CASE("psi edge cases and branch convention") {
    CHECK(kummer_psi(0.0, cplx(1.0, 1.0)) == cplx(1.0));
    CHECK_THROWS_AS(kummer_psi(cplx(0.5, 0.0), cplx(0.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(kummer_psi(cplx(-1.0, 0.0), cplx(1.0, 0.0)), std::domain_error);

    CHECK(log_branch_02pi(cplx(-1.0, 0.0)).imag() == doctest::Approx(kPi));
    CHECK(log_branch_02pi(cplx(0.0, -1.0)).imag() == doctest::Approx(1.5 * kPi));

    // below the positive-real cut the asymptotic sector does not apply; the
    // series branch must be used even for |zeta| >= 8
    const cplx a(0.0, 0.1 / kPi);
    const cplx zeta = 8.5 * cplx(std::cos(5.9), std::sin(5.9));
    CHECK(kummer_psi(a, zeta) == detail::kummer_series(a, zeta));
}
