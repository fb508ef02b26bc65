#include "pfsdist/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace pfsdist {

std::optional<TableFormat> parse_table_format(std::string_view name) {
    if (name == "csv") return TableFormat::Csv;
    if (name == "md" || name == "markdown") return TableFormat::Markdown;
    if (name == "plain") return TableFormat::Plain;
    return std::nullopt;
}

std::string format_fixed(double value, int decimals) {
    if (decimals < 0 || decimals > 12) {
        throw std::invalid_argument("format_fixed: decimals outside [0,12]");
    }
    if (!std::isfinite(value)) {
        return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
    }

    const bool negative = std::signbit(value) && value != 0.0;
    double scale = 1.0;
    for (int i = 0; i < decimals; ++i) scale *= 10.0;

    const double scaled = std::abs(value) * scale;
    if (scaled >= 9.2e18) {  // would overflow the integer path
        throw std::invalid_argument("format_fixed: value too large");
    }
    auto units = static_cast<std::uint64_t>(std::floor(scaled + 0.5));

    std::string digits = std::to_string(units);
    if (digits.size() <= static_cast<std::size_t>(decimals)) {
        digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
    }

    std::string out;
    if (negative && units != 0) out.push_back('-');
    out.append(digits, 0, digits.size() - static_cast<std::size_t>(decimals));
    if (decimals > 0) {
        out.push_back('.');
        out.append(digits, digits.size() - static_cast<std::size_t>(decimals),
                   static_cast<std::size_t>(decimals));
    }
    return out;
}

namespace {

std::string join(const std::vector<std::string>& cells, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != 0) out += sep;
        out += cells[i];
    }
    return out;
}

}  // namespace

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows,
                         TableFormat format) {
    std::string out;
    switch (format) {
        case TableFormat::Csv: {
            out += join(header, ",");
            out += '\n';
            for (const auto& row : rows) {
                out += join(row, ",");
                out += '\n';
            }
            break;
        }
        case TableFormat::Markdown: {
            out += "| " + join(header, " | ") + " |\n|";
            for (std::size_t i = 0; i < header.size(); ++i) out += " --- |";
            out += '\n';
            for (const auto& row : rows) {
                out += "| " + join(row, " | ") + " |\n";
            }
            break;
        }
        case TableFormat::Plain: {
            std::vector<std::size_t> widths(header.size(), 0);
            for (std::size_t c = 0; c < header.size(); ++c) {
                widths[c] = header[c].size();
            }
            for (const auto& row : rows) {
                for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c) {
                    widths[c] = std::max(widths[c], row[c].size());
                }
            }
            auto emit_row = [&](const std::vector<std::string>& row) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    if (c != 0) out += "  ";
                    out += row[c];
                    if (c + 1 < row.size()) {
                        out.append(widths[c] - row[c].size(), ' ');
                    }
                }
                out += '\n';
            };
            emit_row(header);
            for (const auto& row : rows) emit_row(row);
            break;
        }
    }
    return out;
}

}  // namespace pfsdist
