#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gegen {

/// Column-named numeric table. NaN cells are written as empty fields.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    void add_row(std::vector<double> row)
    {
        if (row.size() != header.size()) {
            throw std::logic_error("CsvTable: row width does not match header");
        }
        rows.push_back(std::move(row));
    }

    std::size_t column(const std::string& name) const
    {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) {
                return i;
            }
        }
        throw std::out_of_range("CsvTable: no column " + name);
    }
};

/// 17 significant digits: round-trips every double.
inline std::string format_double(double v)
{
    if (std::isnan(v)) {
        return "";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_csv(std::ostream& os, const CsvTable& t)
{
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        os << (i ? "," : "") << t.header[i];
    }
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << format_double(row[i]);
        }
        os << '\n';
    }
}

inline std::string to_csv(const CsvTable& t)
{
    std::ostringstream os;
    write_csv(os, t);
    return os.str();
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

}  // namespace detail

inline CsvTable read_csv(std::istream& is)
{
    CsvTable t;
    std::string line;
    if (!std::getline(is, line)) {
        throw std::runtime_error("read_csv: empty input");
    }
    t.header = detail::split_csv_line(line);
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        const auto cells = detail::split_csv_line(line);
        if (cells.size() != t.header.size()) {
            throw std::runtime_error("read_csv: ragged row");
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) {
            row.push_back(c.empty() ? std::numeric_limits<double>::quiet_NaN()
                                    : std::strtod(c.c_str(), nullptr));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace gegen
