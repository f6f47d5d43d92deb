#ifndef MAGNUS_REPORT_IO_HPP
#define MAGNUS_REPORT_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include <magnus/bounds.hpp>
#include <magnus/coefficients.hpp>
#include <magnus/linalg.hpp>
#include <magnus/series_analysis.hpp>
#include <magnus/tree.hpp>
#include <magnus/validation.hpp>

namespace magnus
{

enum class Format { csv, json, pretty };

std::optional<Format> parse_format(std::string_view name);

// Empty cell renders as "" in CSV/pretty and null in JSON.
using Cell = std::variant<std::monostate, std::string, double, std::int64_t, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// CSV floats use 9 significant digits; JSON keeps round-trip precision.
std::string format_double(double value);
void write_table(std::ostream &out, const Table &table, Format format);
nlohmann::json to_json(const Table &table);

// Decimal column for exact coefficients: d.dddddddde+XX.
std::string decimal(const Rational &value);

Table nu_table(const NuTable &table);
// Method "all": one row per n with the three methods' values. The equality
// column compares recursion with enumeration (empty beyond the enumeration
// cap); the simplified recursion drops the r >= 3 terms and is listed as is.
Table nu_table_all(const NuTable &recursion, const NuTable &enumeration, const NuTable &simplified);
Table tree_table(const TreeSet &set, bool with_coefficients);
Table bound_table(const BoundReport &report);
nlohmann::json to_json(const BoundReport &report);
Table comparison_to_table(const std::vector<ComparisonRow> &rows);
Table phi_table(std::size_t n, double beta, const std::vector<std::pair<std::size_t, double>> &curve);
Table lhs_series_table(const LogSeries &series);
Table scaling_table(const std::vector<ScalingReport> &rows);
Table validation_table(const numeric::ValidationReport &report);
nlohmann::json to_json(const numeric::ValidationReport &report);

// row, col, re, im
void dump_matrix_csv(std::ostream &out, const numeric::Matrix &m);

} // namespace magnus

#endif
