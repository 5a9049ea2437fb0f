#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "corrpriv/distribution.hpp"
#include "corrpriv/io.hpp"

using namespace corrpriv;

namespace {

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content)
      : path("/tmp/corrpriv_io_" + name) {
    std::ofstream(path) << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("JSON joint round-trips through serialization") {
  auto d = dsbs(0.1);
  TempFile f("rt.json", joint_to_json(d));
  auto back = load_joint(f.path);
  CHECK((back.pmf - d.pmf).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(back.x_alphabet == d.x_alphabet);
  REQUIRE(back.x_values.has_value());
  CHECK((*back.x_values - *d.x_values).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("CSV joint round-trips through serialization") {
  auto d = dsbs(0.25);
  TempFile f("rt.csv", joint_to_csv(d));
  auto back = load_joint(f.path);
  CHECK((back.pmf - d.pmf).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(back.y_alphabet == d.y_alphabet);
}

TEST_CASE("CSV loader names the offending line and column") {
  TempFile f("bad.csv", ",0,1\n0,0.45,oops\n1,0.05,0.45\n");
  try {
    load_joint(f.path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    std::string msg = e.what();
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("column 3") != std::string::npos);
    CHECK(msg.find("oops") != std::string::npos);
  }
}

TEST_CASE("CSV loader rejects ragged rows with a line number") {
  TempFile f("ragged.csv", ",0,1\n0,0.45,0.05\n1,0.5\n");
  CHECK_THROWS_AS(load_joint(f.path), ParseError);
}

TEST_CASE("malformed JSON is reported as a parse error") {
  TempFile f("bad.json", "{\"pmf\": [[0.5, 0.5");
  CHECK_THROWS_AS(load_joint(f.path), ParseError);
}

TEST_CASE("missing file is a parse error naming the path") {
  try {
    load_joint("/nonexistent/nope.csv");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("nope.csv") != std::string::npos);
  }
}

TEST_CASE("values file loads one number per line, skipping blanks") {
  TempFile f("vals.txt", "-1\n\n 1 \n2.5\n");
  auto v = load_values_file(f.path);
  REQUIRE(v.size() == 3);
  CHECK(v(0) == -1.0);
  CHECK(v(2) == 2.5);
}

TEST_CASE("values file reports bad lines by number") {
  TempFile f("badvals.txt", "1\nxyz\n");
  try {
    load_values_file(f.path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("format_double is stable and round-trippable") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == format_double(0.1));
  double v = 0.531004406411;
  CHECK(std::stod(format_double(v)) == doctest::Approx(v).epsilon(1e-12));
}
