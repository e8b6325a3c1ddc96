#pragma once

#include <string>
#include <vector>

#include "opuc/fh.hpp"
#include "opuc/grid.hpp"
#include "opuc/szego.hpp"

namespace opuc {

/// Trigonometric moments c_k = integral of e^{-ik theta} d(mu) of a circle
/// probability measure, normalized so c_0 = 1. The Hermitian extension
/// c_{-k} = conj(c_k) is implied, not stored.
struct MomentSequence {
    std::vector<cplx> c;  // c[0..K]

    MomentSequence() : c{1.0} {}
    explicit MomentSequence(std::vector<cplx> cc);

    std::size_t K() const { return c.size() - 1; }
};

enum class Precision { standard, high };

struct ExtractionProvenance {
    std::string source;  // "closed-form" or "grid"
    std::size_t m = 0;   // grid size when source == "grid"
    std::size_t K = 0;
    Precision precision = Precision::standard;
};

struct ExtractionResult {
    VerblunskyScheme scheme;
    ExtractionProvenance provenance;
};

/// Closed-form moments of f/(2 pi cosh eps):
///   c_0 = 1,  c_k = 2 sinh(eps) sin(k pi/2) / (pi k cosh(eps)) for k != 0.
MomentSequence fh_moments(const FHWeightSpec& spec, std::size_t K);

/// c_k = (rectangle-rule integral of w e^{-ik theta}) / (integral of w).
/// Requires w real nonnegative with strictly positive integral and m >= 8K.
MomentSequence generic_moments(const GridFunction& w, std::size_t K);

/// Inverts the Szego recursion at z = 0:
///   gamma_k = (sum_j conj(a_{j,k}) c_{j+1}) / prod_{j<k}(1-|gamma_j|^2),
/// compensated summation in the inner products. Requires N <= K. Throws,
/// naming the failing index, if some |gamma_k| >= 1 - 1e-10.
VerblunskyScheme extract_verblunsky(const MomentSequence& mom, std::size_t N,
                                    Precision precision = Precision::standard);

/// Extraction from the closed-form two-jump moments (K = N + 8). In high
/// precision the moments and the whole recursion run in binary128.
ExtractionResult fh_extract(const FHWeightSpec& spec, std::size_t N,
                            Precision precision = Precision::standard);

namespace detail {
/// binary128 extraction path (quadmath), used by Precision::high.
std::vector<cplx> extract_quad(const std::vector<cplx>& moments, std::size_t N);
std::vector<cplx> fh_extract_quad(double epsilon, std::size_t N);
}

}  // namespace opuc
