#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "hqcf/cfword.hpp"
#include "hqcf/fp.hpp"
#include "hqcf/hyperquad.hpp"
#include "hqcf/laurent.hpp"

namespace hqcf {

using json = nlohmann::ordered_json;

// Series window: {top, prec, coeffs: [c_top, .., c_prec]}.
json series_json(const Series& s);
Series series_from_json(uint32_t p, const json& j);

// Continued-fraction word: array of polynomial strings.
json word_json(const Word& w);
Word word_from_json(uint32_t p, const json& j);

// Generated-word report: {family, k, p, t, letters}.
json words_json(const std::string& family, uint64_t k, const Session& sess, const Word& w);

// Rule-verification row: {rule, trials, passes, first_failure?}.
json report_json(const ReportRow& row);

// Engine state: {P, Q, R, m, n, tag?}.
json state_json(const TransitionState& s);

}  // namespace hqcf
