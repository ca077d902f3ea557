#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace liepic {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Cartan type of a simple, simply-connected group: series letter plus rank.
///
/// Admissible ranks: A k>=1, B k>=3, C k>=2, D k>=4, E k in {6,7,8}, F k=4,
/// G k=2. B2 is rejected in favour of C2. Construction throws
/// ErrorKind::InvalidType otherwise.
class LieType {
 public:
  LieType(Series series, int rank);

  /// Parses compact tokens such as "E8", "a3", "G2".
  static LieType parse(std::string_view token);

  Series series() const noexcept { return series_; }
  int rank() const noexcept { return rank_; }
  std::string name() const;

  bool simply_laced() const noexcept {
    return series_ == Series::A || series_ == Series::D || series_ == Series::E;
  }

  friend auto operator<=>(const LieType&, const LieType&) = default;

 private:
  Series series_;
  int rank_;
};

std::string admissible_range(Series series);

/// Every admissible type with rank <= max_rank, in the order
/// A1.., B3.., C2.., D4.., E6.., F4, G2.
std::vector<LieType> admissible_types(int max_rank);

}  // namespace liepic
