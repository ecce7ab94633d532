#include "etu/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "etu/error.hpp"

namespace etu {
namespace {

using json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& field, std::size_t line) {
  const std::string s = trim(field);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    raise(Errc::parse_error, "line " + std::to_string(line) + ": '" + s + "' is not a number");
  return v;
}

std::vector<std::vector<double>> read_rows(std::istream& is, std::size_t columns) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::vector<double>> rows;
  bool header = true;
  while (std::getline(is, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    if (header) {  // column names are informational
      header = false;
      continue;
    }
    std::vector<double> row;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) row.push_back(parse_double(field, lineno));
    if (row.size() != columns)
      raise(Errc::parse_error, "line " + std::to_string(lineno) + ": expected " + std::to_string(columns) + " columns");
    rows.push_back(std::move(row));
  }
  if (header) raise(Errc::parse_error, "empty table");
  if (rows.size() < 2) raise(Errc::parse_error, "a table needs at least two rows");
  return rows;
}

UniformGrid grid_from(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  const UniformGrid g = UniformGrid::from_range(rows.front()[0], rows.back()[0], n);
  if (!(g.step > 0.0)) raise(Errc::non_uniform_grid, "abscissae must increase");
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(rows[i][0] - g.at(i)) > 1e-9 * std::max(std::abs(g.at(i)), g.step))
      raise(Errc::non_uniform_grid, "node " + std::to_string(i) + " is off the uniform grid");
  return g;
}

void put(std::ostream& os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

json grid_json(const UniformGrid& g) { return json{{"start", g.start}, {"step", g.step}, {"size", g.size}}; }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    raise(Errc::parse_error, e.what());
  }
}

UniformGrid grid_from_json(const json& j) {
  try {
    const json& g = j.at("grid");
    UniformGrid out{g.at("start").get<double>(), g.at("step").get<double>(), g.at("size").get<std::size_t>()};
    if (!(out.step > 0.0) || out.size < 2) raise(Errc::parse_error, "grid needs step > 0 and size >= 2");
    return out;
  } catch (const json::exception& e) {
    raise(Errc::parse_error, e.what());
  }
}

template <class T>
std::vector<T> array_of(const json& j, const char* key, std::size_t n) {
  try {
    auto v = j.at(key).get<std::vector<T>>();
    if (v.size() != n) raise(Errc::parse_error, std::string(key) + " does not match the grid size");
    return v;
  } catch (const json::exception& e) {
    raise(Errc::parse_error, e.what());
  }
}

}  // namespace

void write_csv(std::ostream& os, const RealTable& t, const std::string& header) {
  os << header << '\n';
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    put(os, t.grid.at(i));
    os << ',';
    put(os, t.values[i]);
    os << '\n';
  }
}

void write_csv(std::ostream& os, const ComplexTable& t, const std::string& header) {
  os << header << '\n';
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    put(os, t.grid.at(i));
    os << ',';
    put(os, t.values[i].real());
    os << ',';
    put(os, t.values[i].imag());
    os << '\n';
  }
}

RealTable read_real_csv(std::istream& is) {
  const auto rows = read_rows(is, 2);
  RealTable t{grid_from(rows), {}};
  for (const auto& r : rows) t.values.push_back(r[1]);
  return t;
}

ComplexTable read_complex_csv(std::istream& is) {
  const auto rows = read_rows(is, 3);
  ComplexTable t{grid_from(rows), {}};
  for (const auto& r : rows) t.values.emplace_back(r[1], r[2]);
  return t;
}

std::string to_json(const RealTable& t) {
  return json{{"grid", grid_json(t.grid)}, {"values", t.values}}.dump();
}

std::string to_json(const ComplexTable& t) {
  std::vector<double> re, im;
  for (const Complex& z : t.values) re.push_back(z.real()), im.push_back(z.imag());
  return json{{"grid", grid_json(t.grid)}, {"re", re}, {"im", im}}.dump();
}

RealTable real_table_from_json(const std::string& text) {
  const json j = parse(text);
  RealTable t{grid_from_json(j), {}};
  t.values = array_of<double>(j, "values", t.grid.size);
  return t;
}

ComplexTable complex_table_from_json(const std::string& text) {
  const json j = parse(text);
  ComplexTable t{grid_from_json(j), {}};
  const auto re = array_of<double>(j, "re", t.grid.size);
  const auto im = array_of<double>(j, "im", t.grid.size);
  for (std::size_t i = 0; i < re.size(); ++i) t.values.emplace_back(re[i], im[i]);
  return t;
}

std::string to_json(const GaussianStateParams& p) {
  return json{{"q_mean", p.q_mean},   {"p_mean", p.p_mean}, {"sigma_q", p.sigma_q}, {"sigma_p", p.sigma_p},
              {"sigma_qp", p.sigma_qp}, {"mass", p.mass},     {"omega", p.omega},     {"hbar", p.hbar}}
      .dump(2);
}

GaussianStateParams state_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object()) raise(Errc::parse_error, "a state is a JSON object");
  GaussianStateParams p;
  const std::pair<const char*, double*> fields[] = {
      {"q_mean", &p.q_mean}, {"p_mean", &p.p_mean}, {"sigma_q", &p.sigma_q}, {"sigma_p", &p.sigma_p},
      {"sigma_qp", &p.sigma_qp}, {"mass", &p.mass}, {"omega", &p.omega}, {"hbar", &p.hbar}};
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const auto& [name, slot] : fields) {
      if (key != name) continue;
      if (!value.is_number()) raise(Errc::parse_error, key + " must be a number");
      *slot = value.get<double>();
      known = true;
    }
    if (!known) raise(Errc::parse_error, "unknown state field '" + key + "'");
  }
  return p;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::parse_error, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer) {
  std::filesystem::path tmp = path;
  tmp += ".partial";
  try {
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) raise(Errc::parse_error, "cannot write " + path.string());
      writer(out);
      out.flush();
      if (!out) raise(Errc::parse_error, "write to " + path.string() + " failed");
    }
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw;
  }
}

}  // namespace etu
