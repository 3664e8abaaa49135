#include "output.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>

namespace ar2::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string render(const Cell& cell, int precision) {
    struct Visitor {
        int precision;
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(std::uint64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v, precision); }
        std::string operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{precision}, cell);
}

ordered_json to_json(const Cell& cell) {
    struct Visitor {
        ordered_json operator()(std::monostate) const { return nullptr; }
        ordered_json operator()(bool b) const { return b; }
        ordered_json operator()(std::int64_t v) const { return v; }
        ordered_json operator()(std::uint64_t v) const { return v; }
        ordered_json operator()(double v) const {
            if (std::isnan(v)) return nullptr;
            if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
            return v;
        }
        ordered_json operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, cell);
}

}  // namespace

std::string format_double(double value, int precision) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = precision <= 0 ? std::to_chars(buf, buf + sizeof buf, value)
                                    : std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, precision);
    return {buf, res.ptr};
}

void write_csv(std::ostream& out, const Report& report, int precision) {
    for (const auto& [key, value] : report.metadata) out << "# " << key << ": " << render(value, precision) << '\n';
    for (const auto& w : report.warnings) out << "# WARNING: " << w << '\n';
    for (std::size_t i = 0; i < report.columns.size(); ++i) {
        out << (i ? "," : "") << csv_field(report.columns[i]);
    }
    out << '\n';
    for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(render(row[i], precision));
        out << '\n';
    }
}

void write_json(std::ostream& out, const Report& report) {
    ordered_json doc;
    doc["metadata"] = ordered_json::object();
    for (const auto& [key, value] : report.metadata) doc["metadata"][key] = to_json(value);
    doc["warnings"] = report.warnings;
    doc["rows"] = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json obj = ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < report.columns.size(); ++i) obj[report.columns[i]] = to_json(row[i]);
        doc["rows"].push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

void write_report(std::ostream& out, const Report& report, Format format, int precision) {
    if (format == Format::Json) {
        write_json(out, report);
    } else {
        write_csv(out, report, precision);
    }
}

}  // namespace ar2::cli
