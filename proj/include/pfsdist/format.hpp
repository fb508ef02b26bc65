#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pfsdist {

enum class TableFormat { Csv, Markdown, Plain };

std::optional<TableFormat> parse_table_format(std::string_view name);

/// Fixed-point decimal rendering with round-half-away-from-zero, independent
/// of locale. decimals must be in [0, 12].
std::string format_fixed(double value, int decimals);

/// Renders header + rows in the requested format. Output is byte-identical
/// across runs for identical input: csv joins cells with commas, markdown
/// emits a pipe table, plain pads columns with spaces.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows,
                         TableFormat format);

}  // namespace pfsdist
