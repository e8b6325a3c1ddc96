#include "opuc/grid.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace opuc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

GridFunction::GridFunction(std::size_t m_, std::vector<std::complex<double>> v)
    : m(m_), values(std::move(v)) {
    if (m < 1) throw std::invalid_argument("GridFunction: m must be >= 1");
    if (values.size() != m) throw std::invalid_argument("GridFunction: values length != m");
}

double GridFunction::theta(std::size_t k) const { return kTwoPi * static_cast<double>(k) / static_cast<double>(m); }

std::complex<double> GridFunction::point(std::size_t k) const {
    const double t = theta(k);
    return {std::cos(t), std::sin(t)};
}

GridFunction GridFunction::constant(std::size_t m, std::complex<double> v) {
    GridFunction g(m);
    for (auto& x : g.values) x = v;
    return g;
}

GridStats grid_stats(const GridFunction& g) {
    GridStats s;
    s.sup_modulus = 0;
    s.min_modulus = std::numeric_limits<double>::infinity();
    std::complex<double> sum = 0;
    double sum2 = 0;
    for (const auto& v : g.values) {
        const double a = std::abs(v);
        s.sup_modulus = std::max(s.sup_modulus, a);
        s.min_modulus = std::min(s.min_modulus, a);
        sum += v;
        sum2 += std::norm(v);
    }
    s.mean = sum / static_cast<double>(g.m);
    s.integral_mod2 = kTwoPi / static_cast<double>(g.m) * sum2;
    return s;
}

std::complex<double> grid_integral(const GridFunction& g) {
    std::complex<double> sum = 0;
    for (const auto& v : g.values) sum += v;
    return kTwoPi / static_cast<double>(g.m) * sum;
}

void check_same_m(const GridFunction& a, const GridFunction& b) {
    if (a.m != b.m) throw std::invalid_argument("grid size mismatch");
}

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
    check_same_m(a, b);
    GridFunction r(a.m);
    for (std::size_t k = 0; k < a.m; ++k) r.values[k] = a.values[k] + b.values[k];
    return r;
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    check_same_m(a, b);
    GridFunction r(a.m);
    for (std::size_t k = 0; k < a.m; ++k) r.values[k] = a.values[k] - b.values[k];
    return r;
}

GridFunction operator*(const GridFunction& a, const GridFunction& b) {
    check_same_m(a, b);
    GridFunction r(a.m);
    for (std::size_t k = 0; k < a.m; ++k) r.values[k] = a.values[k] * b.values[k];
    return r;
}

GridFunction operator/(const GridFunction& a, const GridFunction& b) {
    check_same_m(a, b);
    GridFunction r(a.m);
    for (std::size_t k = 0; k < a.m; ++k) r.values[k] = a.values[k] / b.values[k];
    return r;
}

GridFunction conj_grid(const GridFunction& a) {
    GridFunction r(a.m);
    for (std::size_t k = 0; k < a.m; ++k) r.values[k] = std::conj(a.values[k]);
    return r;
}

GridFunction real_grid(const GridFunction& a) {
    GridFunction r(a.m);
    for (std::size_t k = 0; k < a.m; ++k) r.values[k] = a.values[k].real();
    return r;
}

}  // namespace opuc
