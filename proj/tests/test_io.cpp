#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <sstream>

#include "flatcert/io.hpp"
#include "flatcert/jets.hpp"

using namespace flatcert;
using io::Json;

TEST_CASE("format_double round trips") {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<std::uint64_t> bits;
  int tried = 0;
  while (tried < 2000) {
    const std::uint64_t b = bits(gen);
    double v;
    std::memcpy(&v, &b, sizeof v);
    if (!std::isfinite(v)) continue;
    ++tried;
    CHECK(std::stod(io::format_double(v)) == v);
  }
  CHECK(io::format_double(0.5) == "0.5");
  CHECK(io::format_double(-2.0) == "-2");
  CHECK(io::format_double(0.1) == "0.1");
}

TEST_CASE("point CSV round trip") {
  const std::vector<Point> pts{Point{0.1, -2.5}, Point{1e-300, 3.0}, Point{-0.0, 7.25}};
  for (bool header : {false, true}) {
    std::stringstream buf;
    io::write_points_csv(buf, pts, header);
    if (header) CHECK(buf.str().rfind("x1,x2\n", 0) == 0);
    const auto back = io::read_points_csv(buf, header);
    REQUIRE(back.size() == pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(back[i] == pts[i]);
  }
}

TEST_CASE("point CSV parsing details") {
  std::istringstream in("1, 2\r\n\n  +3.5 ,-4e-2\n");
  const auto pts = io::read_points_csv(in, false);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == Point{1.0, 2.0});
  CHECK(pts[1] == Point{3.5, -0.04});

  std::istringstream empty("");
  CHECK(io::read_points_csv(empty, true).empty());
}

TEST_CASE("malformed CSV names the line") {
  auto message = [](const std::string& text) {
    std::istringstream in(text);
    try {
      io::read_points_csv(in, false);
    } catch (const std::runtime_error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("1,2\n3,abc\n") == "CSV line 2: malformed number 'abc'");
  CHECK(message("1,2\n3,4,5\n") == "CSV line 2: expected 2 columns, got 3");
  CHECK(message("1,\n") == "CSV line 1: empty field");
  CHECK(message("1,2\n\n1,inf\n") == "CSV line 3: malformed number 'inf'");
  CHECK(message("1;2\n") == "CSV line 1: malformed number '1;2'");
}

TEST_CASE("points with an appended column") {
  std::ostringstream out;
  io::write_points_with_column(out, {Point{2.0, 0.0}, Point{-1.0, 0.0}}, {0.0, 1.0}, "distance", true);
  CHECK(out.str() == "x1,x2,distance\n2,0,0\n-1,0,1\n");
  CHECK_THROWS_AS(io::write_points_with_column(out, {Point{1.0, 0.0}}, {}, "d", false), std::domain_error);
}

TEST_CASE("arc sample CSV") {
  std::istringstream in("s,x,y\n-0.1,0.01,0\n0,0,0\n0.1,0.01,0\n");
  const auto samples = io::read_arc_samples_csv(in, true);
  REQUIRE(samples.size() == 3);
  CHECK(samples[0].s == -0.1);
  CHECK(samples[2].x == Point{0.01, 0.0});
  std::istringstream narrow("1\n2\n");
  CHECK_THROWS_AS(io::read_arc_samples_csv(narrow, false), std::runtime_error);
}

TEST_CASE("form JSON round trip") {
  const auto form = HomogeneousForm::from_terms(2, {{{2, 0}, 1.5}, {{0, 2}, -0.25}});
  const Json j = io::to_json(form);
  CHECK(j.at("order") == "grlex");
  CHECK(j.at("n") == 2);
  CHECK(j.at("m") == 2);
  const auto back = io::form_from_json(Json::parse(j.dump()));
  CHECK(back.coeffs() == form.coeffs());
  Json bad = j;
  bad["order"] = "lex";
  CHECK_THROWS_AS(io::form_from_json(bad), std::runtime_error);
}

TEST_CASE("arc jet JSON round trip") {
  const auto jet = circle_arc_jet(3, 4);
  const Json j = io::to_json(jet);
  CHECK(j.at("K") == 4);
  CHECK(j.at("n") == 2);
  const auto back = io::arc_jet_from_json(Json::parse(j.dump()));
  REQUIRE(back.order() == 4);
  for (int k = 1; k <= 4; ++k) CHECK(back.derivative(k) == jet.derivative(k));

  const Json bare = Json::array({j, j});
  const Json wrapped{{"arcs", bare}};
  CHECK(io::arc_jets_from_json(bare).size() == 2);
  CHECK(io::arc_jets_from_json(wrapped).size() == 2);

  Json wrong_k = j;
  wrong_k["K"] = 3;
  CHECK_THROWS_AS(io::arc_jet_from_json(wrong_k), std::runtime_error);
  Json wrong_n = j;
  wrong_n["n"] = 3;
  CHECK_THROWS_AS(io::arc_jet_from_json(wrong_n), std::runtime_error);
  CHECK_THROWS_AS(io::arc_jets_from_json(Json{{"arcs", 5}}), std::runtime_error);
  CHECK_THROWS(io::arc_jets_from_json(Json{{"jets", bare}}));

  const Json minimal = Json::parse(R"({"derivatives": [[1, 0], [0, 0]]})");
  CHECK(io::arc_jet_from_json(minimal).order() == 2);
}

TEST_CASE("non-finite numbers are spelled out") {
  std::vector<AnnulusExponent> annuli(1);
  annuli[0].k = 2;
  annuli[0].nu = std::numeric_limits<double>::infinity();
  annuli[0].fit_nu = std::numeric_limits<double>::quiet_NaN();
  ExponentFitReport report;
  report.annuli = annuli;
  const Json j = io::to_json(report);
  const Json& a = j.at("annuli").at(0);
  CHECK(a.at("nu") == "inf");
  CHECK(a.at("fit_nu") == "nan");
  CHECK(Json::parse(j.dump()).at("annuli").at(0).at("nu") == "inf");
}

TEST_CASE("nondegeneracy report JSON") {
  std::vector<ArcJet> arcs{ArcJet({Point{1.0, 0.0}}), ArcJet({Point{0.0, 0.0}})};
  const auto report = jet_nondegeneracy(arcs, 1);
  const Json j = io::to_json(report);
  CHECK(j.at("tangents").at(0) == Json::array({1.0, 0.0}));
  CHECK(j.at("tangents").at(1).is_null());
  CHECK(j.at("constant_arcs") == Json::array({1}));
  CHECK(j.at("degrees").at(0).at("tangent_dimension") == 1);
}
