#include <doctest.h>

#include "cetqft/diagrams.hpp"
#include "cetqft/dsl.hpp"
#include "cetqft/report.hpp"
#include "cetqft/surface.hpp"

#include <json.hpp>

#include <sstream>

using namespace cetqft;

namespace {

std::string data(const std::string& f) { return read_text_file(std::string(CETQFT_DATA_DIR) + "/" + f); }

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(1.0 / 3) == "0.333333333333");
  CHECK(format_complex({0.5, 0.0}) == "(0.5, 0)");
  CHECK(format_complex({1e-17, -2.0}) == "(0, -2)");
  CHECK(format_complex({-1e-13, 1e-20}) == "(-1e-13, 0)");
}

TEST_CASE("presentations") {
  auto h = parse_presentation("# lens\ngenus 1\nword S T^2 S\nframing -3\n");
  CHECK(h.genus == 1);
  CHECK(h.word == " S T^2 S");
  CHECK(h.framing == -3);
  CHECK(parse_presentation("word \n").word.find_first_not_of(' ') == std::string::npos);
  CHECK_THROWS_AS(parse_presentation("genus 2\nword S\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_presentation("framing 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_presentation("word S Q\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_presentation("word S\nframing x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_presentation("word S\nflavour 3\n"), std::invalid_argument);
  for (const char* f : {"s3.heeg", "s2xs1.heeg", "lens1.heeg", "lens2.heeg", "lens3.heeg"}) {
    CAPTURE(f);
    CHECK_NOTHROW(parse_presentation(data(f)));
  }
  CHECK_THROWS(read_text_file("/nonexistent/file"));
}

TEST_CASE("shipped surfaces round-trip") {
  for (const char* f : {"disk.dsl", "torus.dsl", "one_holed_torus.dsl", "four_holed.dsl", "genus2.dsl"}) {
    CAPTURE(f);
    std::string text = data(f);
    CHECK(serialize_surface(parse_surface(text)) == text);
  }
  CHECK_THROWS_AS(parse_surface(data("bad_band.dsl")), SurfaceError);
}

TEST_CASE("shipped diagram") {
  FusionBasis B(Params(4));
  auto d = parse_diagram(data("loop2.tangle"), B);
  LinearMap f = evaluate(d, B);
  REQUIRE(f.m.size() == 1);
  CHECK(std::abs(f.m(0, 0) - q_int(2, B.params())) < 1e-12);
}

TEST_CASE("report rendering") {
  std::vector<Record> recs = {{"verify", 4, "1a", "", 1.25e-15, true}, {"verify", 4, "3a", "", 2.0, false}};
  std::string text = render_text(recs);
  CHECK(text.find("1/2 checks passed\n") != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);
  std::istringstream in(render_records(recs));
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["r"] == 4);
    CHECK(j["residual"].is_number());
    ++n;
  }
  CHECK(n == 2);
  CHECK_FALSE(all_pass(recs));
}

TEST_CASE("report battery is deterministic") {
  auto a = report_records({3});
  auto b = report_records({3});
  CHECK(render_records(a) == render_records(b));
  CHECK(all_pass(a));
}
