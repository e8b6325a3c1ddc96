#include "opuc/fh.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace opuc {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

FHWeightSpec::FHWeightSpec(double eps) : epsilon(eps) {
    if (!(eps > 0.0) || eps > 0.3)
        throw std::invalid_argument("FHWeightSpec: epsilon must lie in (0, 0.3]");
}

cplx FHWeightSpec::beta1() const { return {0.0, -epsilon / kPi}; }
cplx FHWeightSpec::beta2() const { return {0.0, epsilon / kPi}; }

double fh_eval(const FHWeightSpec& spec, double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0) t += kTwoPi;
    const bool upper = (t >= kPi / 2.0) && (t < 3.0 * kPi / 2.0);
    return upper ? std::exp(-spec.epsilon) : std::exp(spec.epsilon);
}

GridFunction fh_weight_grid(const FHWeightSpec& spec, std::size_t m, bool probability) {
    GridFunction g(m);
    const double scale = probability ? 1.0 / (kTwoPi * std::cosh(spec.epsilon)) : 1.0;
    for (std::size_t k = 0; k < m; ++k) g.values[k] = scale * fh_eval(spec, g.theta(k));
    return g;
}

namespace {
cplx mobius_log(cplx z) {
    const cplx i(0.0, 1.0);
    if (z == i || z == -i) throw std::invalid_argument("evaluation at a jump point z = +-i");
    return std::log((i - z) / (i + z));  // principal branch
}
}

cplx caratheodory_F(const FHWeightSpec& spec, cplx z) {
    const double e = spec.epsilon;
    const cplx i(0.0, 1.0);
    return -i * (std::exp(e) - std::exp(-e)) / kPi * mobius_log(z) +
           0.5 * (std::exp(-e) + std::exp(e));
}

cplx szego_D(const FHWeightSpec& spec, cplx z) {
    const cplx i(0.0, 1.0);
    return std::exp(spec.epsilon / (kPi * i) * mobius_log(z));
}

}  // namespace opuc
