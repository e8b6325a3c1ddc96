#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "opuc/moments.hpp"

namespace opuc {

/// One acceptance criterion outcome: a stable id, pass/fail, and the measured
/// numbers that justify it.
struct CriterionResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct SuiteOutcome {
    std::vector<CriterionResult> results;
    nlohmann::json data;  // suite-specific tables for reports

    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

/// Thresholds as shipped in share/criteria.json (embedded at build time).
nlohmann::json default_criteria();

/// Source of two-jump extractions for the suites; lets the CLI route through
/// its artifact cache. Empty means compute via fh_extract.
using SchemeProvider =
    std::function<VerblunskyScheme(double epsilon, std::size_t N, Precision precision)>;

// The numbered verification suites. Each pins its tolerances from the
// criteria document; seeds make the random draws reproducible.
SuiteOutcome verify_identities(const nlohmann::json& criteria, std::uint64_t seed);
SuiteOutcome verify_rotation(const nlohmann::json& criteria, std::uint64_t seed);
SuiteOutcome verify_roundtrip(const nlohmann::json& criteria, std::uint64_t seed);
SuiteOutcome verify_sum_rule(const nlohmann::json& criteria, std::uint64_t seed,
                             const SchemeProvider& provider = {});
SuiteOutcome verify_l4(const nlohmann::json& criteria, Precision precision,
                       const SchemeProvider& provider = {});
SuiteOutcome verify_construction(const nlohmann::json& criteria,
                                 const SchemeProvider& provider = {});
SuiteOutcome verify_growth(const nlohmann::json& criteria, const SchemeProvider& provider = {});
SuiteOutcome verify_l1(const nlohmann::json& criteria, const SchemeProvider& provider = {});
SuiteOutcome verify_special(const nlohmann::json& criteria, const std::string& fixture_csv_path);

}  // namespace opuc
