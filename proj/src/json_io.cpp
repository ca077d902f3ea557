#include "liepic/json_io.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace liepic {

Json integer_json(const mpz_class& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return Json(z.get_si());
  return Json(z.get_str());
}

Json to_json(const PicardReport& r) {
  Json j;
  j["lie"] = r.lie.name();
  j["genus"] = r.genus;
  j["pic"] = r.pic;
  j["generator_weights"] = r.generator_weights;
  j["canonical_generator"] = r.canonical_generator;
  j["m_G"] = integer_json(r.m_G);
  j["beta_image_exponent"] = integer_json(r.beta_image_exponent);
  j["genus1_model"] = r.genus1_model ? Json(r.genus1_model->weights()) : Json(nullptr);
  j["locally_factorial"] = r.locally_factorial;
  return j;
}

Json to_json(const VerlindeResult& r) {
  // Decimal digits actually carried by the working precision.
  const int digits = static_cast<int>(static_cast<double>(r.precision_bits) * 0.30103) / 2;
  Json j;
  j["value_decimal"] = r.value.to_decimal(std::max(digits, 6));
  j["rounded"] = integer_json(r.rounded);
  j["abs_gap"] = r.abs_gap.is_zero() ? std::string("0") : r.abs_gap.to_scientific(6);
  j["count_P_ell"] = integer_json(r.count_P_ell);
  return j;
}

Json to_json(const Table& t) {
  Json j;
  j["name"] = t.name;
  j["title"] = t.title;
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  return j;
}

Json envelope(const std::string& command, Json inputs, Json result, std::optional<long> precision_bits) {
  Json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["result"] = std::move(result);
  if (precision_bits) j["precision_bits"] = *precision_bits;
  j["version"] = kVersion;
  return j;
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

}  // namespace

std::string to_text(const Json& j) {
  std::vector<std::pair<std::string, std::string>> lines;
  flatten(j, "", lines);
  std::size_t width = 0;
  for (const auto& [k, v] : lines) width = std::max(width, k.size());
  std::string s;
  for (const auto& [k, v] : lines) s += k + std::string(width - k.size(), ' ') + " : " + v + "\n";
  return s;
}

}  // namespace liepic
