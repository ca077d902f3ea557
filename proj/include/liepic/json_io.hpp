#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>
#include <json.hpp>

#include "liepic/picard_report.hpp"
#include "liepic/tables.hpp"
#include "liepic/verlinde.hpp"

namespace liepic {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

/// JSON number when the value fits in 64 bits, decimal string otherwise.
Json integer_json(const mpz_class& z);

Json to_json(const PicardReport& r);
/// {value_decimal, rounded, abs_gap, count_P_ell}
Json to_json(const VerlindeResult& r);
Json to_json(const Table& t);

/// {command, inputs, result[, precision_bits], version} in that order.
Json envelope(const std::string& command, Json inputs, Json result, std::optional<long> precision_bits = std::nullopt);

/// Aligned "key: value" lines, one per scalar leaf; nested keys joined by '.'.
std::string to_text(const Json& j);

}  // namespace liepic
