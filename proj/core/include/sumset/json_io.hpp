#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "sumset/certificate.hpp"
#include "sumset/search.hpp"

namespace sumset {

using nlohmann::json;

// Rationals serialize as a bare integer when the denominator is 1 (and the
// numerator fits a 64-bit int), else as the string "p/q" in reduced form.
json to_json(const Rat& r);
Rat rat_from_json(const json& j, const std::string& where);

json to_json(const RatVec& v);
RatVec ratvec_from_json(const json& j, const std::string& where);

json to_json(const std::set<RatVec>& s);
json to_json(const Color& c);
json to_json(const std::set<Color>& s);
json to_json(const F2Vec& v);
json to_json(const std::set<F2Vec>& s);

json to_json(const Instance& inst);
Instance instance_from_json(const json& j);

json to_json(const CoverReport& report);
json to_json(const FoldedInstance& folded);
json to_json(const LemmaReport& report);
json to_json(const Certificate& cert);
json to_json(const LemmaCounterexample& ce);

/// objective_key is "minB" or "minSum".
json search_result_to_json(const SearchResult& result, const std::string& objective_key);

/// Strict parse of a whole document; throws BadInput naming the problem.
json parse_document(const std::string& text);

}  // namespace sumset
