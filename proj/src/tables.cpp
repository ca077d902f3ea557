#include "liepic/tables.hpp"

#include <functional>

#include "liepic/error.hpp"
#include "liepic/rep_theory.hpp"
#include "liepic/root_system.hpp"
#include "liepic/wps.hpp"

namespace liepic {

namespace {

constexpr int kMaxTableRank = 8;

struct Family {
  Series series;
  int generic_rank;      // instance used to render the family row
  const char* label;     // "A_k (k>=1)"
};

// Family order used by both tables.
const std::vector<Family>& families() {
  static const std::vector<Family> f{
      {Series::A, kMaxTableRank, "A_k (k>=1)"}, {Series::C, kMaxTableRank, "C_k (k>=2)"},
      {Series::B, kMaxTableRank, "B_k (k>=3)"}, {Series::D, kMaxTableRank, "D_k (k>=4)"},
      {Series::G, 2, "G2"},                     {Series::F, 4, "F4"},
      {Series::E, 6, "E6"},                     {Series::E, 7, "E7"},
      {Series::E, 8, "E8"},
  };
  return f;
}

bool classical(Series s) { return s == Series::A || s == Series::B || s == Series::C || s == Series::D; }

std::string omega_label(int i, int rank, bool symbolic) {
  if (symbolic && i == rank) return "omega_k";
  if (symbolic && i == rank - 1) return "omega_(k-1)";
  return "omega_" + std::to_string(i);
}

std::string omega_list(const std::vector<int>& idx, int rank, bool symbolic) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ", ";
    s += omega_label(idx[i], rank, symbolic);
  }
  return s;
}

std::vector<long> comarks_of(const RootDatum& d) { return {d.comarks().begin(), d.comarks().end()}; }

Table build(std::string name, std::string title, std::vector<std::string> value_columns,
            const std::function<std::vector<std::string>(const RootDatum&, bool)>& values) {
  Table t{std::move(name), std::move(title), {"scope", "type"}, {}};
  t.columns.insert(t.columns.end(), value_columns.begin(), value_columns.end());
  for (const auto& f : families()) {
    const bool symbolic = classical(f.series);
    const RootDatum d = RootDatum::build(LieType(f.series, f.generic_rank));
    std::vector<std::string> row{"family", f.label};
    auto v = values(d, symbolic);
    row.insert(row.end(), v.begin(), v.end());
    t.rows.push_back(std::move(row));
  }
  for (const auto& lie : table_types()) {
    const RootDatum d = RootDatum::build(lie);
    std::vector<std::string> row{"instance", lie.name()};
    auto v = values(d, false);
    row.insert(row.end(), v.begin(), v.end());
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

std::vector<LieType> table_types() {
  std::vector<LieType> out;
  for (const auto& lie : admissible_types(kMaxTableRank)) out.push_back(lie);
  return out;
}

std::string compress_tuple(const std::vector<long>& values) {
  std::string s = "(";
  std::size_t i = 0;
  bool first = true;
  auto emit = [&](const std::string& x) {
    if (!first) s += ",";
    s += x;
    first = false;
  };
  while (i < values.size()) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    const std::size_t run = j - i;
    if (run >= 3 && values.size() > 4) {
      emit(std::to_string(values[i]));
      emit("...");
      emit(std::to_string(values[i]));
    } else {
      for (std::size_t m = i; m < j; ++m) emit(std::to_string(values[m]));
    }
    i = j;
  }
  return s + ")";
}

Table prop23_table() {
  return build("prop23", "Fundamental weights omega_d of minimal Dynkin index", {"omega_d", "m_G"},
               [](const RootDatum& d, bool symbolic) -> std::vector<std::string> {
                 const auto od = omega_d(d);
                 return {omega_list(od.indices, static_cast<int>(d.rank()), symbolic), od.m_G.get_str()};
               });
}

Table wps_table() {
  return build("wps", "Weighted projective type of the genus-1 moduli space", {"weights"},
               [](const RootDatum& d, bool symbolic) -> std::vector<std::string> {
                 const auto w = wps_from_group(d).weights();
                 return {symbolic ? compress_tuple(w) : WpsWeights(w).to_string()};
               });
}

Table comarks_table() {
  return build("comarks", "Comarks (coefficients of theta^vee in simple coroots)", {"comarks", "dual_coxeter"},
               [](const RootDatum& d, bool symbolic) -> std::vector<std::string> {
                 const auto c = comarks_of(d);
                 std::string tuple = "(";
                 for (std::size_t i = 0; i < c.size(); ++i) tuple += (i ? "," : "") + std::to_string(c[i]);
                 tuple += ")";
                 return {symbolic ? compress_tuple(c) : tuple, symbolic ? "-" : std::to_string(d.dual_coxeter())};
               });
}

Table table_by_name(std::string_view name) {
  if (name == "prop23") return prop23_table();
  if (name == "wps") return wps_table();
  if (name == "comarks") return comarks_table();
  raise(ErrorKind::Usage, "unknown table '" + std::string(name) + "' (expected prop23, wps or comarks)");
}

std::string to_markdown(const Table& t) {
  std::string s = "| ";
  for (std::size_t i = 0; i < t.columns.size(); ++i) s += (i ? " | " : "") + t.columns[i];
  s += " |\n|";
  for (std::size_t i = 0; i < t.columns.size(); ++i) s += "---|";
  s += "\n";
  for (const auto& row : t.rows) {
    s += "| ";
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? " | " : "") + row[i];
    s += " |\n";
  }
  return s;
}

std::string to_csv(const Table& t) {
  std::string s;
  for (std::size_t i = 0; i < t.columns.size(); ++i) s += (i ? "," : "") + csv_field(t.columns[i]);
  s += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + csv_field(row[i]);
    s += "\n";
  }
  return s;
}

}  // namespace liepic
