#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "etu/decay_times.hpp"
#include "etu/error.hpp"
#include "etu/io.hpp"

using namespace etu;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an etu::Error");
  return Errc::domain_error;
}

RealTable gaussian_table() {
  RealTable t{UniformGrid::from_range(-8.0, 8.0, 1601), {}};
  for (double E : t.grid.nodes()) t.values.push_back(std::exp(-0.5 * E * E) / std::sqrt(2.0 * M_PI));
  return t;
}

}  // namespace

TEST_CASE("real CSV round trip") {
  const RealTable t = gaussian_table();
  std::stringstream ss;
  write_csv(ss, t, "E,P");
  CHECK(ss.str().rfind("E,P\n", 0) == 0);
  const RealTable back = read_real_csv(ss);
  REQUIRE(back.values.size() == t.values.size());
  CHECK(back.grid.start == t.grid.start);
  CHECK(std::abs(back.grid.step - t.grid.step) < 1e-15);
  for (std::size_t i = 0; i < t.values.size(); ++i) CHECK(std::abs(back.values[i] - t.values[i]) <= 1e-12);
}

TEST_CASE("complex CSV round trip") {
  ComplexTable t{UniformGrid::centered(0.1, 11), {}};
  for (std::size_t i = 0; i < 11; ++i) t.values.emplace_back(std::cos(0.3 * i), -std::sin(0.7 * i));
  std::stringstream ss;
  write_csv(ss, t);
  const ComplexTable back = read_complex_csv(ss);
  for (std::size_t i = 0; i < 11; ++i) CHECK(std::abs(back.values[i] - t.values[i]) <= 1e-12);
}

TEST_CASE("CSV rejects non-uniform and malformed input") {
  std::stringstream uneven("t,f\n0,1\n0.1,2\n0.25,3\n");
  CHECK(code_of([&] { read_real_csv(uneven); }) == Errc::non_uniform_grid);
  std::stringstream word("t,f\n0,1\n0.1,x\n");
  CHECK(code_of([&] { read_real_csv(word); }) == Errc::parse_error);
  std::stringstream columns("t,f\n0,1,2\n0.1,2,3\n");
  CHECK(code_of([&] { read_real_csv(columns); }) == Errc::parse_error);
  std::stringstream empty("");
  CHECK(code_of([&] { read_real_csv(empty); }) == Errc::parse_error);
}

TEST_CASE("JSON tables") {
  const RealTable t = gaussian_table();
  const RealTable back = real_table_from_json(to_json(t));
  CHECK(back.grid.size == t.grid.size);
  for (std::size_t i = 0; i < t.values.size(); ++i) CHECK(std::abs(back.values[i] - t.values[i]) <= 1e-12);

  ComplexTable c{UniformGrid{0.0, 0.5, 3}, {{1, 2}, {3, -4}, {0.5, 0.25}}};
  const ComplexTable cb = complex_table_from_json(to_json(c));
  for (std::size_t i = 0; i < 3; ++i) CHECK(cb.values[i] == c.values[i]);

  CHECK(code_of([] { real_table_from_json(R"({"grid":{"start":0,"step":1,"size":3},"values":[1,2]})"); }) ==
        Errc::parse_error);
  CHECK(code_of([] { real_table_from_json("{"); }) == Errc::parse_error);
}

TEST_CASE("sampled distribution from CSV matches the in-memory one") {
  const RealTable t = gaussian_table();
  std::stringstream ss;
  write_csv(ss, t, "E,P");
  const RealTable back = read_real_csv(ss);
  const auto a = EnergyDistribution::normalized_sampled(t.grid, t.values);
  const auto b = EnergyDistribution::normalized_sampled(back.grid, back.values);
  CHECK(std::abs(a.moments().variance - b.moments().variance) < 1e-12);
  CHECK(std::abs(half_life(survival_amplitude(a)) - half_life(survival_amplitude(b))) < 1e-10);
}

TEST_CASE("state JSON") {
  GaussianStateParams p;
  p.q_mean = 1.5;
  p.sigma_qp = 0.125;
  p.omega = 0.0;
  p.hbar = 2.0;
  const GaussianStateParams back = state_from_json(to_json(p));
  CHECK(back.q_mean == p.q_mean);
  CHECK(back.sigma_qp == p.sigma_qp);
  CHECK(back.omega == 0.0);
  CHECK(back.hbar == 2.0);
  CHECK(to_json(p).find("\"sigma_qp\"") != std::string::npos);

  const GaussianStateParams partial = state_from_json(R"({"q_mean": 2})");
  CHECK(partial.q_mean == 2.0);
  CHECK(partial.sigma_q == 0.5);
  CHECK(code_of([] { state_from_json(R"({"q_mean": 2, "spin": 1})"); }) == Errc::parse_error);
  CHECK(code_of([] { state_from_json(R"({"q_mean": "two"})"); }) == Errc::parse_error);
}

TEST_CASE("atomic writes leave nothing behind on failure") {
  const auto dir = std::filesystem::temp_directory_path() / "etu_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.txt";
  std::filesystem::remove(path);
  CHECK_THROWS(write_file_atomically(path, [](std::ostream& os) {
    os << "half";
    raise(Errc::non_convergence, "boom");
  }));
  CHECK_FALSE(std::filesystem::exists(path));
  CHECK(std::filesystem::is_empty(dir));
  write_file_atomically(path, [](std::ostream& os) { os << "whole"; });
  CHECK(read_file(path) == "whole");
  std::filesystem::remove_all(dir);
}
