#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "hbspace/error.hpp"
#include "hbspace/textio.hpp"

using namespace hb;
using testing::max_diff;

TEST_CASE("format_double round trips") {
  for (double x : {0.0, 1.0, -2.5, 0.1, 1.0 / 3.0, 6.02214076e23, 5e-324, 0.618033988749894848}) {
    CHECK(std::strtod(io::format_double(x).c_str(), nullptr) == x);
  }
}

TEST_CASE("coefficient text") {
  const TruncatedSeries f{cplx(1, -0.5), 0.1, cplx(0, 1.0 / 3.0)};
  std::ostringstream ss;
  io::write_coefficients(ss, f);
  const auto g = io::parse_coefficients(ss.str());
  CHECK(max_diff(f, g) == 0.0);

  CHECK(max_diff(io::parse_coefficients("0 0\n1 0\n"), oracle::Vec{0.0, 1.0}) == 0.0);
  CHECK(max_diff(io::parse_coefficients("  2.5   -1\n\n"), oracle::Vec{cplx(2.5, -1)}) == 0.0);
  CHECK_THROWS_AS(io::parse_coefficients(""), ParseError);
  CHECK_THROWS_AS(io::parse_coefficients("1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_coefficients("1 x\n"), ParseError);
}

TEST_CASE("files are written atomically and read back") {
  const auto dir = std::filesystem::temp_directory_path() / "hb_textio_test";
  std::filesystem::create_directories(dir);
  const auto p = dir / "f.txt";
  io::write_coefficients_file(p, {1.0, cplx(2, 3)});
  CHECK(max_diff(io::read_coefficients_file(p), oracle::Vec{1.0, cplx(2, 3)}) == 0.0);
  for (const auto& e : std::filesystem::directory_iterator(dir)) CHECK(e.path().filename() == "f.txt");
  CHECK_THROWS_AS(io::read_file(dir / "missing.txt"), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("documents") {
  io::Document d;
  d.set("name", std::string("x"));
  d.set("value", 0.25);
  d.set("count", 7LL);
  d.add_block("f", {1.0, cplx(0, -1)});
  const auto e = io::parse_document(io::render(d));
  CHECK(e.scalar("name") == "x");
  CHECK(e.number("value") == 0.25);
  CHECK(e.integer("count") == 7);
  CHECK(e.has("count"));
  CHECK_FALSE(e.has("nothing"));
  CHECK(max_diff(e.block("f"), oracle::Vec{1.0, cplx(0, -1)}) == 0.0);
  CHECK_THROWS_AS(e.block("g"), Error);
  CHECK_THROWS_AS(e.number("missing"), Error);
  CHECK_THROWS_AS(e.integer("value"), Error);
  CHECK(io::render(e) == io::render(d));
}
