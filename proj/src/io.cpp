#include "fracdev/io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace fracdev {

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << csv_escape(cells[i]);
  }
  os << '\n';
}

std::vector<double> parse_grid(const std::string& spec) {
  const auto bad = [&]() {
    return std::invalid_argument("grid spec '" + spec +
                                 "': expected a:b:n with integer n >= 1");
  };
  const auto c1 = spec.find(':');
  const auto c2 = spec.find(':', c1 == std::string::npos ? 0 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) throw bad();
  double a, b;
  long n;
  try {
    std::size_t pos;
    a = std::stod(spec.substr(0, c1), &pos);
    if (pos != c1) throw bad();
    const std::string mid = spec.substr(c1 + 1, c2 - c1 - 1);
    b = std::stod(mid, &pos);
    if (pos != mid.size()) throw bad();
    const std::string last = spec.substr(c2 + 1);
    n = std::stol(last, &pos);
    if (pos != last.size()) throw bad();
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
  if (n < 1 || !std::isfinite(a) || !std::isfinite(b)) throw bad();
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    grid.push_back(a);
    return grid;
  }
  for (long i = 0; i < n; ++i)
    grid.push_back(a + (b - a) * static_cast<double>(i) /
                           static_cast<double>(n - 1));
  return grid;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "jsonl") return OutputFormat::jsonl;
  throw std::invalid_argument("unknown output format '" + name +
                              "' (expected csv or jsonl)");
}

}  // namespace fracdev
