#include <doctest.h>

#include <algorithm>

#include "liepic/error.hpp"
#include "liepic/json_io.hpp"
#include "liepic/tables.hpp"

using namespace liepic;

namespace {

const std::vector<std::string>* find_row(const Table& t, const std::string& scope, const std::string& type) {
  for (const auto& r : t.rows)
    if (r[0] == scope && r[1] == type) return &r;
  return nullptr;
}

}  // namespace

TEST_SUITE("tables_json") {
  TEST_CASE("compressed tuples") {
    CHECK(compress_tuple({1, 1, 2, 2, 2, 2, 1, 1}) == "(1,1,2,...,2,1,1)");
    CHECK(compress_tuple({1, 2, 1}) == "(1,2,1)");
    CHECK(compress_tuple({1, 1, 1, 1}) == "(1,1,1,1)");
    CHECK(compress_tuple({}) == "()");
  }

  TEST_CASE("table rows") {
    const auto p = prop23_table();
    const auto* e7 = find_row(p, "instance", "E7");
    REQUIRE(e7);
    CHECK((*e7)[2] == "omega_7");
    CHECK((*e7)[3] == "12");
    const auto* a = find_row(p, "family", "A_k (k>=1)");
    REQUIRE(a);
    CHECK((*a)[2] == "omega_1, omega_k");
    CHECK((*a)[3] == "1");
    const auto* d = find_row(p, "family", "D_k (k>=4)");
    REQUIRE(d);
    CHECK((*d)[2] == "omega_1");
    CHECK((*find_row(p, "instance", "E8"))[3] == "60");
    CHECK((*find_row(p, "instance", "G2"))[3] == "2");

    const auto w = wps_table();
    CHECK((*find_row(w, "instance", "F4"))[2] == "(1,2,3,2,1)");
    CHECK((*find_row(w, "family", "B_k (k>=3)"))[2] == "(1,1,2,...,2,1)");
    const auto c = comarks_table();
    CHECK((*find_row(c, "instance", "G2"))[2] == "(1,2)");
    CHECK((*find_row(c, "instance", "E8"))[3] == "30");
    CHECK(std::count_if(c.rows.begin(), c.rows.end(), [](const auto& r) { return r[0] == "instance"; }) ==
          static_cast<long>(table_types().size()));
  }

  TEST_CASE("tables are byte-stable") {
    for (const char* name : {"prop23", "wps", "comarks"}) {
      CHECK(to_csv(table_by_name(name)) == to_csv(table_by_name(name)));
      CHECK(to_markdown(table_by_name(name)) == to_markdown(table_by_name(name)));
      CHECK(to_json(table_by_name(name)).dump() == to_json(table_by_name(name)).dump());
    }
    CHECK_THROWS_AS(table_by_name("nope"), Error);
  }

  TEST_CASE("csv quoting") {
    const auto csv = to_csv(wps_table());
    CHECK(csv.find("instance,F4,\"(1,2,3,2,1)\"\n") != std::string::npos);
    CHECK(csv.rfind("scope,type,weights\n", 0) == 0);
  }

  TEST_CASE("integers beyond 64 bits become strings") {
    CHECK(integer_json(mpz_class(42)).is_number_integer());
    const mpz_class big("123456789012345678901234567890");
    CHECK(integer_json(big) == "123456789012345678901234567890");
  }

  TEST_CASE("envelope round trip") {
    const auto r = report(LieType(Series::E, 8), 2);
    const Json e = envelope("report", Json{{"type", "E8"}, {"genus", 2}}, to_json(r));
    const std::string s = e.dump();
    CHECK(Json::parse(s) == e);
    CHECK(Json::parse(s).dump() == s);
    std::vector<std::string> keys;
    for (const auto& [k, v] : e.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "inputs", "result", "version"});
    CHECK(e["result"]["m_G"] == 60);
    CHECK(e["version"] == kVersion);
  }

  TEST_CASE("text and JSON carry the same numbers") {
    const auto d = RootDatum::build(LieType(Series::A, 1));
    const auto v = verlinde_dim(d, 2, 2);
    const Json e = envelope("verlinde", Json{{"type", "A1"}}, to_json(v), v.precision_bits);
    const std::string text = to_text(e);
    CHECK(text.find("result.rounded") != std::string::npos);
    CHECK(text.find(": 10\n") != std::string::npos);
    CHECK(text.find(e["result"]["value_decimal"].get<std::string>()) != std::string::npos);
    CHECK(e["precision_bits"] == v.precision_bits);
  }
}
