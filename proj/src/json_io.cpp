#include "hqcf/json_io.hpp"

#include "hqcf/error.hpp"

namespace hqcf {

json series_json(const Series& s) {
  json j;
  j["top"] = s.top();
  j["prec"] = s.prec();
  j["coeffs"] = s.window();
  return j;
}

Series series_from_json(uint32_t p, const json& j) {
  if (!j.is_object() || !j.contains("top") || !j.contains("prec") || !j.contains("coeffs"))
    throw ConfigError("series json needs top, prec, coeffs");
  int64_t top = j.at("top").get<int64_t>();
  int64_t prec = j.at("prec").get<int64_t>();
  std::vector<uint32_t> coeffs = j.at("coeffs").get<std::vector<uint32_t>>();
  return Series::from_window(p, top, prec, std::move(coeffs));
}

json word_json(const Word& w) {
  json j = json::array();
  for (size_t i = 0; i < w.size(); ++i) j.push_back(w[i].str());
  return j;
}

Word word_from_json(uint32_t p, const json& j) {
  if (!j.is_array()) throw ConfigError("word json must be an array of polynomial strings");
  Word w;
  for (const auto& item : j) w.push_back(Poly::parse(p, item.get<std::string>()));
  return w;
}

json words_json(const std::string& family, uint64_t k, const Session& sess, const Word& w) {
  json j;
  j["family"] = family;
  j["k"] = k;
  j["p"] = sess.p;
  j["t"] = sess.t;
  j["letters"] = word_json(w);
  return j;
}

json report_json(const ReportRow& row) {
  json j;
  j["rule"] = row.rule;
  j["trials"] = row.trials;
  j["passes"] = row.passes;
  if (!row.first_failure.empty()) j["first_failure"] = row.first_failure;
  return j;
}

json state_json(const TransitionState& s) {
  json j;
  j["P"] = s.P.str();
  j["Q"] = s.Q.str();
  j["R"] = s.R.str();
  j["m"] = s.m;
  j["n"] = s.n;
  if (auto tag = s.classify()) j["tag"] = tag_name(*tag);
  return j;
}

}  // namespace hqcf
