#include "opuc/complex_poly.hpp"

#include <cmath>
#include <stdexcept>

namespace opuc {

ComplexPoly::ComplexPoly(std::vector<cplx> c) : coeff(std::move(c)) {
    if (coeff.empty()) throw std::invalid_argument("ComplexPoly: empty coefficient list");
}

int ComplexPoly::actual_degree() const {
    for (int k = degree(); k > 0; --k)
        if (coeff[k] != cplx(0.0)) return k;
    return 0;
}

ComplexPoly ComplexPoly::with_degree(int d) const {
    if (d < actual_degree())
        throw std::invalid_argument("with_degree: would truncate nonzero coefficients");
    std::vector<cplx> c(coeff.begin(), coeff.begin() + std::min<int>(d + 1, coeff.size()));
    c.resize(d + 1, cplx(0.0));
    return ComplexPoly(std::move(c));
}

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
    std::vector<cplx> c(std::max(a.coeff.size(), b.coeff.size()), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.at(k) + b.at(k);
    return ComplexPoly(std::move(c));
}

ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) {
    std::vector<cplx> c(std::max(a.coeff.size(), b.coeff.size()), 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.at(k) - b.at(k);
    return ComplexPoly(std::move(c));
}

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
    std::vector<cplx> c(a.coeff.size() + b.coeff.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeff.size(); ++i)
        for (std::size_t j = 0; j < b.coeff.size(); ++j) c[i + j] += a.coeff[i] * b.coeff[j];
    return ComplexPoly(std::move(c));
}

ComplexPoly operator*(cplx s, const ComplexPoly& p) {
    std::vector<cplx> c(p.coeff);
    for (auto& x : c) x *= s;
    return ComplexPoly(std::move(c));
}

ComplexPoly shift_by_z(const ComplexPoly& p) {
    std::vector<cplx> c(p.coeff.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.coeff.size(); ++k) c[k + 1] = p.coeff[k];
    return ComplexPoly(std::move(c));
}

ComplexPoly shift_down_by_z(const ComplexPoly& p, double tol) {
    if (std::abs(p.coeff[0]) > tol)
        throw std::invalid_argument("shift_down_by_z: constant term does not vanish (|c0| = " +
                                    std::to_string(std::abs(p.coeff[0])) + ")");
    if (p.coeff.size() == 1) return ComplexPoly{cplx(0.0)};
    std::vector<cplx> c(p.coeff.begin() + 1, p.coeff.end());
    return ComplexPoly(std::move(c));
}

ComplexPoly star(const ComplexPoly& p, int n) {
    if (p.actual_degree() > n)
        throw std::invalid_argument("star: order smaller than actual degree of p");
    std::vector<cplx> c(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) c[k] = std::conj(p.at(n - k));
    return ComplexPoly(std::move(c));
}

cplx eval(const ComplexPoly& p, cplx z) {
    cplx v = 0.0;
    for (int k = p.degree(); k >= 0; --k) v = v * z + p.coeff[k];
    return v;
}

GridFunction eval_grid(const ComplexPoly& p, std::size_t m) {
    if (m < 1) throw std::invalid_argument("eval_grid: m must be >= 1");
    GridFunction g(m);
    for (std::size_t k = 0; k < m; ++k) g.values[k] = eval(p, g.point(k));
    return g;
}

double max_coeff_modulus(const ComplexPoly& p) {
    double v = 0;
    for (const auto& c : p.coeff) v = std::max(v, std::abs(c));
    return v;
}

}  // namespace opuc
