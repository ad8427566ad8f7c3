#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shockdecay::csv {

// Shortest round-trippable form with 17 significant digits ("%.17g").
std::string format_double(double v);

void write_header(std::ostream& os, std::string_view header);
void write_row(std::ostream& os, std::span<const double> values);

// Reads a numeric CSV whose first line equals `expected_header`. Rows must have as
// many fields as the header. Throws std::runtime_error with the line number.
std::vector<std::vector<double>> read_numeric(std::istream& is, std::string_view expected_header);

}  // namespace shockdecay::csv
