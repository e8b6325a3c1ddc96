#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "opuc/complex_poly.hpp"
#include "opuc/grid.hpp"
#include "opuc/moments.hpp"
#include "opuc/steklov.hpp"
#include "opuc/szego.hpp"

namespace opuc {

using json = nlohmann::json;

// {"re":..,"im":..} encoding for scalars; schemas:
//   ComplexPoly       {"degree": d, "coeffs": [..]}
//   VerblunskyScheme  {"gamma": [..]}
//   PolySystem        {"phi":.., "phi_star":.., "psi":.., "psi_star":.., "norm_sq":..}
//   MomentSequence    {"K":.., "c": [..]}
//   SteklovScheme     {"n":.., "epsilon":.., "gamma": [..]}
json to_json(const cplx& z);
cplx cplx_from_json(const json& j);

json to_json(const ComplexPoly& p);
ComplexPoly poly_from_json(const json& j);

json to_json(const VerblunskyScheme& s);
VerblunskyScheme scheme_from_json(const json& j);

json to_json(const PolySystem& ps);

json to_json(const MomentSequence& m);
MomentSequence moments_from_json(const json& j);

json to_json(const SteklovScheme& s);
SteklovScheme steklov_from_json(const json& j);

json to_json(const ExtractionProvenance& p);

/// 17-significant-digit, locale-independent number formatting.
std::string format_double(double v);

/// GridFunction CSV: '#'-prefixed metadata lines, then the header
/// theta,re,im and one row per grid point in increasing theta.
std::string grid_to_csv(const GridFunction& g, const std::map<std::string, std::string>& metadata);
GridFunction grid_from_csv(const std::string& text);

/// Serialize with the metadata object under "meta" (deterministic key order).
std::string json_with_meta(json body, const std::map<std::string, std::string>& metadata);

}  // namespace opuc
