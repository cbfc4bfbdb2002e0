#include "doctest.h"
#include "maxmod/config.hpp"
#include "maxmod/csv.hpp"
#include "maxmod/svg.hpp"

using namespace maxmod;

TEST_CASE("config parsing with sections, comments and lists") {
  Config c = Config::parse_string(
      "[model]\n"
      "variant = hardy   # comment\n"
      "alpha = 2.5\n"
      "\n"
      "[tune]\n"
      "radii = 403.4287934927351, 1096.6331584284585\n"
      "steps = 12\n");
  CHECK(c.get_str("model", "variant") == "hardy");
  CHECK(c.get_num("model", "alpha") == 2.5);
  CHECK(c.get_int("tune", "steps", 0) == 12);
  CHECK(c.get_num("model", "missing", 7.0) == 7.0);
  auto radii = c.get_list("tune", "radii");
  REQUIRE(radii.size() == 2);
  CHECK(radii[1] == doctest::Approx(1096.6331584284585));
}

TEST_CASE("config diagnostics carry line numbers") {
  try {
    Config::parse_string("[model]\nvariant hardy\n");
    FAIL("expected a parse error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(Config::parse_string("[model\nx=1\n"), ConfigError);
  Config c = Config::parse_string("[m]\nx = abc\n");
  CHECK_THROWS_AS(c.get_num("m", "x"), ConfigError);
}

TEST_CASE("csv formatting is deterministic and exact") {
  CHECK(fmt_g17(0.1) == "0.10000000000000001");
  CHECK(fmt_g17(1.0) == "1");
  CsvWriter a({"r", "theta"});
  a.row({fmt_g17(3.141592653589793), fmt_g17(0.5)});
  CsvWriter b({"r", "theta"});
  b.row({fmt_g17(3.141592653589793), fmt_g17(0.5)});
  CHECK(a.str() == b.str());
  CHECK(a.str().substr(0, 8) == "r,theta\n");
  CHECK_THROWS(a.row({"1"}));
}

TEST_CASE("svg smoke") {
  SvgCanvas svg(0.0, 10.0, 0.0, 2.0, 500);
  svg.line(0, 0, 10, 2);
  svg.polyline({{0.0, 0.0}, {5.0, 1.0}, {10.0, 0.5}}, "#00c");
  svg.marker(5.0, 1.0);
  svg.fill_rect(1, 2, 0.5, 1.5, gray_fill(0.5));
  std::string s = svg.str();
  CHECK(s.find("<svg") != std::string::npos);
  CHECK(s.find("polyline") != std::string::npos);
  CHECK(s.find("</svg>") != std::string::npos);
}
