#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace opuc {

/// Complex values on the uniform grid theta_k = 2*pi*k/m of the unit circle.
struct GridFunction {
    std::size_t m = 1;
    std::vector<std::complex<double>> values;

    GridFunction() : values(1, 0.0) {}
    explicit GridFunction(std::size_t m_) : m(m_), values(m_, 0.0) {}
    GridFunction(std::size_t m_, std::vector<std::complex<double>> v);

    double theta(std::size_t k) const;
    std::complex<double> point(std::size_t k) const;  // e^{i theta_k}

    static GridFunction constant(std::size_t m, std::complex<double> v);
};

struct GridStats {
    double sup_modulus = 0;
    double min_modulus = 0;
    std::complex<double> mean = 0;
    double integral_mod2 = 0;  // (2*pi/m) * sum |values|^2
};

GridStats grid_stats(const GridFunction& g);

/// Oversampled grid for sup-norm work on a degree-d polynomial.
inline std::size_t default_grid_size(int degree) {
    const std::size_t d = degree > 0 ? static_cast<std::size_t>(degree) : 0;
    return std::max<std::size_t>(4096, 16 * d);
}

/// (2*pi/m) * sum of values (periodic rectangle rule).
std::complex<double> grid_integral(const GridFunction& g);

// Pointwise combination; mismatched m throws.
GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(const GridFunction& a, const GridFunction& b);
GridFunction operator/(const GridFunction& a, const GridFunction& b);

GridFunction conj_grid(const GridFunction& a);
GridFunction real_grid(const GridFunction& a);

void check_same_m(const GridFunction& a, const GridFunction& b);

}  // namespace opuc
