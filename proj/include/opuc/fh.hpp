#pragma once

#include "opuc/complex_poly.hpp"
#include "opuc/grid.hpp"

namespace opuc {

/// Two-jump weight on the circle: value e^epsilon on arg z in [0, pi/2) u
/// [3pi/2, 2pi), value e^{-epsilon} on [pi/2, 3pi/2). Jump points at +-i,
/// jump exponents beta_1 = -i epsilon/pi, beta_2 = +i epsilon/pi, half-open
/// arc convention.
struct FHWeightSpec {
    double epsilon;

    explicit FHWeightSpec(double eps);

    cplx z1() const { return {0.0, 1.0}; }
    cplx z2() const { return {0.0, -1.0}; }
    cplx beta1() const;
    cplx beta2() const;
};

/// Weight value at theta (reduced mod 2*pi).
double fh_eval(const FHWeightSpec& spec, double theta);

/// Grid restriction of the weight; probability = true divides by 2*pi*cosh(eps)
/// so the grid integrates to 1.
GridFunction fh_weight_grid(const FHWeightSpec& spec, std::size_t m, bool probability = true);

/// Carathéodory function of f dtheta/(2 pi):
///   F(z) = -i (e^eps - e^{-eps})/pi * Log((i-z)/(i+z)) + (e^eps + e^{-eps})/2,
/// principal logarithm (cut on the negative reals). z != +-i.
cplx caratheodory_F(const FHWeightSpec& spec, cplx z);

/// Szego function D(z) = exp(eps/(pi i) * Log((i-z)/(i+z))), same branch;
/// |D_+|^2 = f on the circle. z != +-i.
cplx szego_D(const FHWeightSpec& spec, cplx z);

}  // namespace opuc
