#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ar2::cli {

enum class Format { Csv, Json };

/// One output cell. monostate renders as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, bool, std::int64_t, std::uint64_t, double, std::string>;

/// A table plus its header block. Metadata keys keep insertion order.
struct Report {
    std::vector<std::pair<std::string, Cell>> metadata;
    std::vector<std::string> warnings;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void meta(std::string key, Cell value) { metadata.emplace_back(std::move(key), std::move(value)); }
};

/// Locale-independent rendering of a double with `precision` significant
/// digits; precision <= 0 gives the shortest round-trip form.
[[nodiscard]] std::string format_double(double value, int precision);

/// CSV: "# key: value" header lines, "# WARNING: ..." lines, the column
/// row, then data rows (RFC 4180 quoting, '\n' line ends).
void write_csv(std::ostream& out, const Report& report, int precision);

/// {"metadata": {...}, "warnings": [...], "rows": [{...}, ...]}
void write_json(std::ostream& out, const Report& report);

void write_report(std::ostream& out, const Report& report, Format format, int precision);

}  // namespace ar2::cli
