#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pfq/decomp.hpp"
#include "pfq/report.hpp"

namespace pfq::cli {

using Json = nlohmann::ordered_json;

// {"n": int, "entries": [[rational-string, ...], ...]}. Entries may also be
// JSON integers. Throws ParseError on malformed input and SkewViolation on
// a skew-symmetry failure.
RSkew skew_from_json(const Json& j);
RSkew read_skew_file(const std::string& path);

Json matrix_to_json(const RMatrix& m);
Json rationals_to_json(const std::vector<Rational>& v);

// Field order: trial, params, lhs, rhs, equal, cross_check, passed, skipped,
// resampled, detail, then elapsed_ms when timing is on.
Json report_to_json(const VerificationReport& r, bool timing);

}  // namespace pfq::cli
