#pragma once

#include <complex>
#include <vector>

#include "opuc/grid.hpp"

namespace opuc {

using cplx = std::complex<double>;

/// Dense complex polynomial, coefficients in ascending powers.
///
/// The declared degree is coeff.size()-1 and may exceed the index of the
/// last nonzero coefficient; trailing zeros are kept explicitly because the
/// star operation depends on the declared order, not on the support.
struct ComplexPoly {
    std::vector<cplx> coeff;

    ComplexPoly() : coeff{cplx(0.0)} {}
    explicit ComplexPoly(std::vector<cplx> c);
    ComplexPoly(std::initializer_list<cplx> c) : ComplexPoly(std::vector<cplx>(c)) {}

    static ComplexPoly constant(cplx v) { return ComplexPoly{v}; }

    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    /// Index of the last nonzero coefficient (0 for the zero polynomial).
    int actual_degree() const;

    cplx at(int k) const {
        return (k >= 0 && k < static_cast<int>(coeff.size())) ? coeff[k] : cplx(0.0);
    }

    /// Copy with the declared degree forced to d (pads or errors on truncation
    /// of nonzero coefficients).
    ComplexPoly with_degree(int d) const;

    bool operator==(const ComplexPoly& o) const { return coeff == o.coeff; }
};

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b);
ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b);
ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
ComplexPoly operator*(cplx s, const ComplexPoly& p);

/// Multiplication by z (coefficient shift up).
ComplexPoly shift_by_z(const ComplexPoly& p);

/// Exact division by z as a coefficient shift down. The constant term must
/// vanish (|c0| <= tol); throws otherwise.
ComplexPoly shift_down_by_z(const ComplexPoly& p, double tol = 1e-12);

/// Star operation of order n:  p*(z) = z^n conj(p(1/conj(z))).
/// Coefficient k of the result is conj(coefficient n-k of p).
ComplexPoly star(const ComplexPoly& p, int n);

/// Horner evaluation.
cplx eval(const ComplexPoly& p, cplx z);

/// Values p(e^{2*pi*i*k/m}), k = 0..m-1. Fixed evaluation order per point.
GridFunction eval_grid(const ComplexPoly& p, std::size_t m);

double max_coeff_modulus(const ComplexPoly& p);

}  // namespace opuc
