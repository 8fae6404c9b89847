#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "citemet/format.hpp"
#include "citemet/ranking.hpp"

namespace citemet {

struct SeriesPoint {
    double x = 0.0;
    double y = 0.0;
};

// One labeled curve; x is strictly increasing within a series.
struct Series {
    std::string label;
    std::vector<SeriesPoint> points;
};

struct TableRow {
    std::uint64_t key = 0;
    double value = 0.0;  // full precision; rounding is a render concern
};

struct Table {
    std::string key_name;
    std::string value_name;
    std::vector<TableRow> rows;
};

// AF for a fixed citable-item count b across a list of citation counts.
inline Table af_table(std::uint64_t b, const std::vector<std::uint64_t>& citation_values) {
    if (b == 0) throw std::invalid_argument("af_table requires b >= 1");
    if (citation_values.empty()) throw std::invalid_argument("af_table requires citation values");
    Table table{"citations", "af", {}};
    table.rows.reserve(citation_values.size());
    for (std::uint64_t a : citation_values) table.rows.push_back({a, af_score({a, b})});
    return table;
}

inline Table asf_table(const std::vector<unsigned>& h_values) {
    Table table{"h", "asf", {}};
    table.rows.reserve(h_values.size());
    for (unsigned h : h_values) table.rows.push_back({h, asf_score(h)});
    return table;
}

// Points (a, AF(a, b)) for a = 0..a_max.
inline Series af_curve(std::uint64_t b, std::uint64_t a_max) {
    if (b == 0) throw std::invalid_argument("af_curve requires b >= 1");
    if (a_max < 1) throw std::invalid_argument("af_curve requires a_max >= 1");
    Series series;
    series.label = "b=" + std::to_string(b);
    series.points.reserve(a_max + 1);
    for (std::uint64_t a = 0; a <= a_max; ++a) {
        series.points.push_back({static_cast<double>(a), af_score({a, b})});
    }
    return series;
}

// Points (h, AsF(h)) for h = 0..h_max.
inline Series asf_curve(unsigned h_max) {
    if (h_max < 1) throw std::invalid_argument("asf_curve requires h_max >= 1");
    Series series;
    series.label = "asf";
    series.points.reserve(h_max + 1);
    for (unsigned h = 0; h <= h_max; ++h) {
        series.points.push_back({static_cast<double>(h), asf_score(h)});
    }
    return series;
}

enum class RenderFormat { plain_table, csv };

namespace detail {

inline std::string pad_left(const std::string& s, std::size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

inline std::string pad_right(const std::string& s, std::size_t width) {
    return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

// Rows of cells -> aligned plain table. Right-aligns everything except
// columns flagged text; the last column carries no trailing padding.
inline std::string align_rows(const std::vector<std::vector<std::string>>& rows,
                              const std::vector<bool>& text_column) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            const bool last = c + 1 == row.size();
            std::string cell = text_column[c] ? (last ? row[c] : pad_right(row[c], widths[c]))
                                              : pad_left(row[c], widths[c]);
            line += cell;
            if (!last) line += "  ";
        }
        out += line;
        out += '\n';
    }
    return out;
}

// Integer-valued metrics print without a decimal point in both formats.
inline bool integer_metric(Metric m) { return m == Metric::h || m == Metric::g; }

inline std::string metric_value_plain(Metric m, double v) {
    if (integer_metric(m)) return std::to_string(static_cast<long long>(v));
    return format_display(v);
}

inline std::string metric_value_csv(Metric m, double v) {
    if (integer_metric(m)) return std::to_string(static_cast<long long>(v));
    return format_csv_number(v);
}

}  // namespace detail

// All render output is deterministic: byte-identical for identical inputs.
// csv uses LF endings, '.' decimals and no thousands separators; values keep
// six significant digits while plain tables use the one-decimal display.
inline std::string render(const Table& table, RenderFormat format) {
    if (format == RenderFormat::csv) {
        std::string out = table.key_name + "," + table.value_name + "\n";
        for (const auto& row : table.rows) {
            out += std::to_string(row.key);
            out += ',';
            out += format_csv_number(row.value);
            out += '\n';
        }
        return out;
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({table.key_name, table.value_name});
    for (const auto& row : table.rows) {
        rows.push_back({std::to_string(row.key), format_display(row.value)});
    }
    return detail::align_rows(rows, {false, false});
}

inline std::string render(const std::vector<Series>& series_list, RenderFormat format) {
    if (format == RenderFormat::csv) {
        std::string out = "label,x,y\n";
        for (const auto& series : series_list) {
            for (const auto& point : series.points) {
                out += series.label;
                out += ',';
                out += format_coordinate(point.x);
                out += ',';
                out += format_csv_number(point.y);
                out += '\n';
            }
        }
        return out;
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"label", "x", "y"});
    for (const auto& series : series_list) {
        for (const auto& point : series.points) {
            rows.push_back({series.label, format_coordinate(point.x), format_display(point.y)});
        }
    }
    return detail::align_rows(rows, {true, false, false});
}

inline std::string render(const Series& series, RenderFormat format) {
    return render(std::vector<Series>{series}, format);
}

// Undefined values render as "n/a" in plain tables and an empty csv field.
inline std::string render(const std::vector<RankingEntry>& entries, RenderFormat format) {
    const std::string column = entries.empty() ? "value" : metric_name(entries.front().metric);
    if (format == RenderFormat::csv) {
        std::string out = "rank,subject," + column + "\n";
        for (const auto& e : entries) {
            out += std::to_string(e.rank);
            out += ',';
            out += e.subject_id;
            out += ',';
            if (e.value) out += detail::metric_value_csv(e.metric, *e.value);
            out += '\n';
        }
        return out;
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"rank", "subject", column});
    for (const auto& e : entries) {
        rows.push_back({std::to_string(e.rank), e.subject_id,
                        e.value ? detail::metric_value_plain(e.metric, *e.value) : "n/a"});
    }
    return detail::align_rows(rows, {false, true, false});
}

}  // namespace citemet
