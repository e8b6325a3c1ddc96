#include "opuc/json_io.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace opuc {

json to_json(const cplx& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

cplx cplx_from_json(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

json to_json(const ComplexPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeff) coeffs.push_back(to_json(c));
    return json{{"degree", p.degree()}, {"coeffs", coeffs}};
}

ComplexPoly poly_from_json(const json& j) {
    std::vector<cplx> c;
    for (const auto& e : j.at("coeffs")) c.push_back(cplx_from_json(e));
    ComplexPoly p(std::move(c));
    if (p.degree() != j.at("degree").get<int>())
        throw std::invalid_argument("ComplexPoly JSON: degree does not match coeffs length");
    return p;
}

json to_json(const VerblunskyScheme& s) {
    json g = json::array();
    for (const auto& x : s.gamma) g.push_back(to_json(x));
    return json{{"gamma", g}};
}

VerblunskyScheme scheme_from_json(const json& j) {
    std::vector<cplx> g;
    for (const auto& e : j.at("gamma")) g.push_back(cplx_from_json(e));
    return VerblunskyScheme(std::move(g));
}

json to_json(const PolySystem& ps) {
    return json{{"phi", to_json(ps.phi)},
                {"phi_star", to_json(ps.phi_star)},
                {"psi", to_json(ps.psi)},
                {"psi_star", to_json(ps.psi_star)},
                {"norm_sq", ps.norm_sq}};
}

json to_json(const MomentSequence& m) {
    json c = json::array();
    for (const auto& x : m.c) c.push_back(to_json(x));
    return json{{"K", m.K()}, {"c", c}};
}

MomentSequence moments_from_json(const json& j) {
    std::vector<cplx> c;
    for (const auto& e : j.at("c")) c.push_back(cplx_from_json(e));
    return MomentSequence(std::move(c));
}

json to_json(const SteklovScheme& s) {
    json j = to_json(s.gamma);
    j["n"] = s.n;
    j["epsilon"] = s.epsilon;
    return j;
}

SteklovScheme steklov_from_json(const json& j) {
    SteklovScheme s;
    s.n = j.at("n").get<int>();
    s.epsilon = j.at("epsilon").get<double>();
    s.gamma = scheme_from_json(j);
    return s;
}

json to_json(const ExtractionProvenance& p) {
    return json{{"source", p.source},
                {"m", p.m},
                {"K", p.K},
                {"precision", p.precision == Precision::high ? "high" : "standard"}};
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

std::string grid_to_csv(const GridFunction& g,
                        const std::map<std::string, std::string>& metadata) {
    std::ostringstream out;
    for (const auto& [k, v] : metadata) out << "# " << k << ": " << v << "\n";
    out << "theta,re,im\n";
    for (std::size_t k = 0; k < g.m; ++k)
        out << format_double(g.theta(k)) << ',' << format_double(g.values[k].real()) << ','
            << format_double(g.values[k].imag()) << "\n";
    return out.str();
}

GridFunction grid_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<cplx> vals;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line.rfind("theta,re,im", 0) != 0)
                throw std::invalid_argument("grid CSV: missing theta,re,im header");
            header_seen = true;
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::invalid_argument("grid CSV: malformed row");
        const double re = std::strtod(line.substr(c1 + 1, c2 - c1 - 1).c_str(), nullptr);
        const double im = std::strtod(line.substr(c2 + 1).c_str(), nullptr);
        vals.emplace_back(re, im);
    }
    if (vals.empty()) throw std::invalid_argument("grid CSV: no rows");
    const std::size_t m = vals.size();
    return GridFunction(m, std::move(vals));
}

std::string json_with_meta(json body, const std::map<std::string, std::string>& metadata) {
    json meta;
    for (const auto& [k, v] : metadata) meta[k] = v;
    body["meta"] = meta;
    return body.dump(2) + "\n";
}

}  // namespace opuc
