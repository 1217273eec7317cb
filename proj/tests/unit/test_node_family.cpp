#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "doctest.h"
#include "uniqlab/node_family.hpp"

using namespace uniqlab;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("uniqlab_nodes_" + name);
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_SUITE("node_family") {
  TEST_CASE("power nodes are n^alpha exactly") {
    const auto f = NodeFamily::power(0.5);
    CHECK(f(0) == 0.0);
    CHECK(f(4) == 2.0);
    CHECK(f(9) == 3.0);
    for (std::size_t n = 0; n < 1000; ++n) CHECK(f(n) == std::pow(double(n), 0.5));
    CHECK(*f.gap_exponent() == doctest::Approx(1.0));
    CHECK_FALSE(f.size().has_value());
    CHECK(f.describe() == "power(0.5)");
    CHECK_THROWS_AS(NodeFamily::power(1.0), std::invalid_argument);
  }

  TEST_CASE("log nodes") {
    const auto f = NodeFamily::logarithmic();
    CHECK(f(0) == 0.0);
    CHECK(f(9) == doctest::Approx(std::log(10.0)).epsilon(1e-15));
    CHECK(std::isinf(*f.gap_exponent()));
    const auto v = f.take(100);
    for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i] > v[i - 1]);
  }

  TEST_CASE("custom lists") {
    const auto f = NodeFamily::custom({0.5, 1.0, 4.0});
    CHECK(f.size() == 3u);
    CHECK(f(2) == 4.0);
    CHECK_THROWS_AS(f(3), std::out_of_range);
    CHECK(f.take(10).size() == 3);
    CHECK_FALSE(f.gap_exponent().has_value());
    CHECK_THROWS_AS(NodeFamily::custom({1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(NodeFamily::custom({2.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(NodeFamily::custom({}), std::invalid_argument);
    CHECK_THROWS_AS(NodeFamily::custom({1.0, INFINITY}), std::invalid_argument);
  }

  TEST_CASE("node file format") {
    const auto p = write_temp("ok.txt", "# header\n0.5\n\n  1.25  # inline\n3\n");
    const auto f = NodeFamily::parse("custom:" + p.string(), 0.3);
    REQUIRE(f.size() == 3u);
    CHECK(f(1) == 1.25);
    CHECK_THROWS_AS(NodeFamily::from_file(write_temp("bad1.txt", "1\n0.5\n")), std::invalid_argument);
    CHECK_THROWS_AS(NodeFamily::from_file(write_temp("bad2.txt", "1 2\n")), std::runtime_error);
    CHECK_THROWS_AS(NodeFamily::from_file(write_temp("bad3.txt", "abc\n")), std::runtime_error);
    CHECK_THROWS_AS(NodeFamily::from_file(write_temp("bad4.txt", "-1\n")), std::runtime_error);
    CHECK_THROWS_AS(NodeFamily::from_file("/nonexistent/nodes.txt"), std::runtime_error);
    CHECK_THROWS_AS(NodeFamily::parse("cubic", 0.3), std::invalid_argument);
    CHECK(NodeFamily::parse("log", 0.3).kind() == NodeKind::log);
    CHECK(NodeFamily::parse("power", 0.3).alpha() == 0.3);
  }
}
