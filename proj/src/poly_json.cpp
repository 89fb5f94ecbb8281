#include "vaip/poly_json.hpp"

#include <charconv>

namespace vaip {

using nlohmann::json;

json to_json(const MVPolynomial& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json coeffs = json::object();
    for (const auto& [k, c] : t.exponent.coeffs()) coeffs[std::to_string(k + 1)] = c;
    terms.push_back({{"var", t.var + 1},
                     {"coeff", t.coeff},
                     {"exp", {{"const", t.exponent.constant()}, {"coeffs", coeffs}}}});
  }
  return {{"terms", terms}, {"constant", p.constant()}};
}

namespace {

bool fail(std::string* why, std::string msg) {
  if (why) *why = std::move(msg);
  return false;
}

bool is_int(const json& j) { return j.is_number_integer(); }

bool positive_index_key(const std::string& key) {
  if (key.empty() || key[0] < '1' || key[0] > '9') return false;
  int v = 0;
  auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
  return ec == std::errc{} && end == key.data() + key.size();
}

}  // namespace

bool matches_schema(const json& j, std::string* why) {
  if (!j.is_object()) return fail(why, "polynomial must be an object");
  if (j.size() != 2 || !j.contains("terms") || !j.contains("constant"))
    return fail(why, "polynomial needs exactly 'terms' and 'constant'");
  if (!is_int(j["constant"])) return fail(why, "'constant' must be an integer");
  if (!j["terms"].is_array()) return fail(why, "'terms' must be an array");
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || t.size() != 3 || !t.contains("var") ||
        !t.contains("coeff") || !t.contains("exp"))
      return fail(why, "term needs exactly 'var', 'coeff', 'exp'");
    if (!is_int(t["var"]) || t["var"].get<Int>() < 1)
      return fail(why, "'var' must be a positive integer");
    if (!is_int(t["coeff"]) || t["coeff"].get<Int>() == 0)
      return fail(why, "'coeff' must be a nonzero integer");
    const auto& e = t["exp"];
    if (!e.is_object() || e.size() != 2 || !e.contains("const") || !e.contains("coeffs"))
      return fail(why, "'exp' needs exactly 'const' and 'coeffs'");
    if (!is_int(e["const"])) return fail(why, "'exp.const' must be an integer");
    if (!e["coeffs"].is_object()) return fail(why, "'exp.coeffs' must be an object");
    for (const auto& [key, val] : e["coeffs"].items()) {
      if (!positive_index_key(key))
        return fail(why, "coefficient key '" + key + "' is not a positive index");
      if (!is_int(val) || val.get<Int>() == 0)
        return fail(why, "coefficient for '" + key + "' must be a nonzero integer");
    }
  }
  return true;
}

MVPolynomial from_json(const json& j) {
  std::string why;
  if (!matches_schema(j, &why)) throw Error("bad polynomial JSON: " + why);
  MVPolynomial p(j["constant"].get<Int>());
  for (const auto& t : j["terms"]) {
    AffineExponent e(t["exp"]["const"].get<Int>());
    for (const auto& [key, val] : t["exp"]["coeffs"].items())
      e.add_symbol(std::stoi(key) - 1, val.get<Int>());
    p.add_term(t["var"].get<int>() - 1, e, t["coeff"].get<Int>());
  }
  return p;
}

}  // namespace vaip
