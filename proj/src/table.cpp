#include "heun/table.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>

namespace heun::cli
{

std::optional<TableFormat> parse_table_format(std::string_view name) noexcept
{
    if (name == "csv") {
        return TableFormat::csv;
    }
    if (name == "json") {
        return TableFormat::json;
    }
    return std::nullopt;
}

std::string format_number(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace
{

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_number(const std::string& s)
{
    if (s == "nan") {
        return std::numeric_limits<double>::quiet_NaN();
    }
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
        throw IoError("table: malformed number '" + s + "'");
    }
    return v;
}

nlohmann::ordered_json json_number(double v)
{
    if (!std::isfinite(v)) {
        return nullptr;
    }
    return v;
}

double json_to_number(const nlohmann::ordered_json& v)
{
    if (v.is_null()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return v.get<double>();
}

constexpr const char* csv_header = "x,value,error_estimate,method";

} // namespace

std::size_t emit_table(std::span<const TableRow> rows, TableFormat format, std::ostream& sink)
{
    if (format == TableFormat::csv) {
        sink << csv_header << '\n';
        for (const TableRow& r : rows) {
            sink << format_number(r.x) << ',' << format_number(r.value) << ',' << format_number(r.error_estimate) << ','
                 << csv_field(r.method) << '\n';
        }
    } else {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const TableRow& r : rows) {
            nlohmann::ordered_json obj;
            obj["x"] = json_number(r.x);
            obj["value"] = json_number(r.value);
            obj["error_estimate"] = json_number(r.error_estimate);
            obj["method"] = r.method;
            doc.push_back(std::move(obj));
        }
        sink << doc.dump(2) << '\n';
    }
    sink.flush();
    if (!sink) {
        throw IoError("emit_table: failed writing to the output sink");
    }
    return rows.size();
}

std::vector<TableRow> parse_table(std::istream& source, TableFormat format)
{
    std::vector<TableRow> rows;
    if (format == TableFormat::csv) {
        std::string line;
        if (!std::getline(source, line) || line != csv_header) {
            throw IoError("parse_table: missing CSV header");
        }
        while (std::getline(source, line)) {
            if (line.empty()) {
                continue;
            }
            const auto fields = split_csv_line(line);
            if (fields.size() != 4) {
                throw IoError("parse_table: expected 4 CSV fields");
            }
            rows.push_back(TableRow{parse_number(fields[0]), parse_number(fields[1]), parse_number(fields[2]), fields[3]});
        }
        return rows;
    }
    try {
        const auto doc = nlohmann::ordered_json::parse(source);
        for (const auto& obj : doc) {
            rows.push_back(TableRow{json_to_number(obj.at("x")), json_to_number(obj.at("value")),
                                    json_to_number(obj.at("error_estimate")), obj.at("method").get<std::string>()});
        }
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("parse_table: ") + e.what());
    }
    return rows;
}

} // namespace heun::cli
