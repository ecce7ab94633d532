#pragma once

#include <complex>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "etu/gaussian_wigner.hpp"
#include "etu/grid.hpp"
#include "etu/signal.hpp"

namespace etu {

/// A real sampled function, e.g. P(E) or f(t).
struct RealTable {
  UniformGrid grid;
  std::vector<double> values;
};

/// A complex sampled function, e.g. F(omega).
struct ComplexTable {
  UniformGrid grid;
  std::vector<Complex> values;
};

// CSV: header row, then one node per line. Abscissae must be uniform to
// 1e-9 relative (NonUniformGrid otherwise); malformed input is ParseError.
// The header names the columns ("E,P", "t,f", "omega,ReF,ImF").
void write_csv(std::ostream& os, const RealTable& t, const std::string& header);
void write_csv(std::ostream& os, const ComplexTable& t, const std::string& header = "omega,ReF,ImF");
RealTable read_real_csv(std::istream& is);
ComplexTable read_complex_csv(std::istream& is);

// JSON: {"grid": {"start", "step", "size"}, "values": [...]}, complex values
// as {"re": [...], "im": [...]}.
std::string to_json(const RealTable& t);
std::string to_json(const ComplexTable& t);
RealTable real_table_from_json(const std::string& text);
ComplexTable complex_table_from_json(const std::string& text);

std::string to_json(const GaussianStateParams& p);
/// Missing fields keep their defaults; unknown fields are a ParseError.
GaussianStateParams state_from_json(const std::string& text);

std::string read_file(const std::filesystem::path& path);

/// Writes through a temporary file in the same directory and renames it into
/// place, so a failure never leaves a partial file behind.
void write_file_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer);

}  // namespace etu
