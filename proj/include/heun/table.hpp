#ifndef HEUN_TABLE_HPP
#define HEUN_TABLE_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heun::cli
{

class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class TableFormat
{
    csv,
    json,
};

std::optional<TableFormat> parse_table_format(std::string_view name) noexcept;

struct TableRow
{
    double x = 0.0;
    double value = 0.0;
    double error_estimate = 0.0;
    std::string method;

    bool operator==(const TableRow&) const = default;
};

/// 17 significant digits; enough to round-trip any double.
std::string format_number(double v);

/// CSV: header `x,value,error_estimate,method`, one row per record. JSON: an array of
/// objects with the same keys in the same order. Returns the number of rows written;
/// throws IoError when the sink fails.
std::size_t emit_table(std::span<const TableRow> rows, TableFormat format, std::ostream& sink);

/// Inverse of emit_table. Throws IoError on malformed input.
std::vector<TableRow> parse_table(std::istream& source, TableFormat format);

} // namespace heun::cli

#endif
