#ifndef FRACDEV_IO_HPP
#define FRACDEV_IO_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fracdev {

// Shortest round-trip decimal representation (std::to_chars), so repeated
// runs emit byte-identical files. Infinities print as "inf"/"-inf".
std::string format_double(double v);

// RFC 4180: quote fields containing commas, quotes or newlines, doubling
// embedded quotes.
std::string csv_escape(const std::string& field);

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells);

// "a:b:n" -> n points evenly spaced from a to b inclusive (n >= 1; n = 1
// yields {a}). Throws std::invalid_argument on malformed input.
std::vector<double> parse_grid(const std::string& spec);

enum class OutputFormat { csv, jsonl };

OutputFormat parse_format(const std::string& name);

}  // namespace fracdev

#endif  // FRACDEV_IO_HPP
