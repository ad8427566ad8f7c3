#include "shockdecay/csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace shockdecay::csv {

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_header(std::ostream& os, std::string_view header)
{
    os << header << '\n';
}

void write_row(std::ostream& os, std::span<const double> values)
{
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ',';
        os << format_double(values[i]);
    }
    os << '\n';
}

namespace {

std::size_t count_fields(std::string_view header)
{
    std::size_t n = 1;
    for (char c : header)
        if (c == ',') ++n;
    return n;
}

std::string strip_cr(std::string line)
{
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

std::vector<std::vector<double>> read_numeric(std::istream& is, std::string_view expected_header)
{
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("csv: empty input");
    line = strip_cr(line);
    if (line != expected_header)
        throw std::runtime_error("csv: line 1: expected header '" + std::string(expected_header) +
                                 "', got '" + line + "'");
    const std::size_t nfields = count_fields(expected_header);

    std::vector<std::vector<double>> rows;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(field, &used));
                if (used != field.size()) throw std::invalid_argument(field);
            } catch (const std::exception&) {
                throw std::runtime_error("csv: line " + std::to_string(lineno) + ": bad number '" +
                                         field + "'");
            }
        }
        if (row.size() != nfields)
            throw std::runtime_error("csv: line " + std::to_string(lineno) + ": expected " +
                                     std::to_string(nfields) + " fields, got " +
                                     std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace shockdecay::csv
