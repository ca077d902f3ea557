#include "liepic/lie_type.hpp"

#include <cctype>
#include <charconv>

#include "liepic/error.hpp"

namespace liepic {

namespace {

bool in_range(Series s, int k) {
  switch (s) {
    case Series::A: return k >= 1;
    case Series::B: return k >= 3;
    case Series::C: return k >= 2;
    case Series::D: return k >= 4;
    case Series::E: return k >= 6 && k <= 8;
    case Series::F: return k == 4;
    case Series::G: return k == 2;
  }
  return false;
}

}  // namespace

std::string admissible_range(Series series) {
  switch (series) {
    case Series::A: return "A_k requires k >= 1";
    case Series::B: return "B_k requires k >= 3";
    case Series::C: return "C_k requires k >= 2";
    case Series::D: return "D_k requires k >= 4";
    case Series::E: return "E_k requires k in {6, 7, 8}";
    case Series::F: return "F_k requires k = 4";
    case Series::G: return "G_k requires k = 2";
  }
  return {};
}

LieType::LieType(Series series, int rank) : series_(series), rank_(rank) {
  if (!in_range(series, rank)) {
    std::string msg = "invalid Lie type " + std::string(1, static_cast<char>(series)) +
                      std::to_string(rank) + ": " + admissible_range(series);
    if (series == Series::B && rank == 2) msg += " (B2 is isomorphic to C2; use C2)";
    if (series == Series::D && rank == 3) msg += " (D3 is isomorphic to A3; use A3)";
    raise(ErrorKind::InvalidType, msg);
  }
}

LieType LieType::parse(std::string_view token) {
  auto bad = [&](const std::string& why) -> LieType {
    raise(ErrorKind::InvalidType, "cannot parse Lie type '" + std::string(token) + "': " + why +
                                      " (expected a series letter A-G followed by a rank, e.g. E8)");
  };
  if (token.size() < 2) return bad("too short");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(token.front())));
  if (letter < 'A' || letter > 'G') return bad("unknown series");
  int rank = 0;
  auto digits = token.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return bad("rank is not an integer");
  return LieType(static_cast<Series>(letter), rank);
}

std::string LieType::name() const {
  return std::string(1, static_cast<char>(series_)) + std::to_string(rank_);
}

std::vector<LieType> admissible_types(int max_rank) {
  std::vector<LieType> out;
  for (int k = 1; k <= max_rank; ++k) out.emplace_back(Series::A, k);
  for (int k = 3; k <= max_rank; ++k) out.emplace_back(Series::B, k);
  for (int k = 2; k <= max_rank; ++k) out.emplace_back(Series::C, k);
  for (int k = 4; k <= max_rank; ++k) out.emplace_back(Series::D, k);
  for (int k = 6; k <= std::min(max_rank, 8); ++k) out.emplace_back(Series::E, k);
  if (max_rank >= 4) out.emplace_back(Series::F, 4);
  if (max_rank >= 2) out.emplace_back(Series::G, 2);
  return out;
}

}  // namespace liepic
