#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "liepic/lie_type.hpp"

namespace liepic {

/// A regenerated table: family rows (rank left symbolic) followed by concrete
/// instances up to rank 8.
struct Table {
  std::string name;
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Concrete types shown in every table: A1-A8, B3-B8, C2-C8, D4-D8, E6-E8, F4, G2.
std::vector<LieType> table_types();

/// Fundamental weights of minimal Dynkin index and m_G.
Table prop23_table();
/// Weighted projective type (1, comarks) of the genus-1 moduli space.
Table wps_table();
/// Comarks a_i^vee in Bourbaki order.
Table comarks_table();

/// "prop23", "wps" or "comarks"; throws ErrorKind::Usage otherwise.
Table table_by_name(std::string_view name);

std::string to_markdown(const Table& t);
std::string to_csv(const Table& t);

/// "(1,1,2,...,2,1)": in tuples longer than four, runs of three or more equal
/// values are elided.
std::string compress_tuple(const std::vector<long>& values);

}  // namespace liepic
