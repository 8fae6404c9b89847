#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "citemet/dataset.hpp"
#include "citemet/metrics.hpp"

namespace citemet {

enum class Metric { impact_factor, af, h, g, asf };

inline const char* metric_name(Metric m) {
    switch (m) {
        case Metric::impact_factor: return "if";
        case Metric::af: return "af";
        case Metric::h: return "h";
        case Metric::g: return "g";
        default: return "asf";
    }
}

inline std::optional<Metric> metric_from(std::string_view s) {
    if (s == "if") return Metric::impact_factor;
    if (s == "af") return Metric::af;
    if (s == "h") return Metric::h;
    if (s == "g") return Metric::g;
    if (s == "asf") return Metric::asf;
    return std::nullopt;
}

inline bool is_journal_metric(Metric m) {
    return m == Metric::impact_factor || m == Metric::af;
}

inline bool is_researcher_metric(Metric m) { return !is_journal_metric(m); }

struct RankingEntry {
    std::string subject_id;
    Metric metric = Metric::af;
    std::optional<double> value;  // nullopt = undefined, sorts after all values
    std::size_t rank = 0;         // 1-based dense rank; ties share a rank
};

// Sorts by (value descending, undefined last, subject_id ascending) and
// assigns dense ranks: equal values share a rank, the next distinct value
// gets the previous rank + 1. All undefined entries tie with one another.
inline void assign_dense_ranks(std::vector<RankingEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const RankingEntry& l, const RankingEntry& r) {
        if (l.value.has_value() != r.value.has_value()) return l.value.has_value();
        if (l.value.has_value() && *l.value != *r.value) return *l.value > *r.value;
        return l.subject_id < r.subject_id;
    });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i == 0) {
            entries[i].rank = 1;
            continue;
        }
        const bool tied = entries[i].value.has_value() == entries[i - 1].value.has_value() &&
                          (!entries[i].value.has_value() || *entries[i].value == *entries[i - 1].value);
        entries[i].rank = tied ? entries[i - 1].rank : entries[i - 1].rank + 1;
    }
}

// One entry per journal. Journals whose metric has no value (ineligible IF,
// zero-count AF) keep the undefined marker rather than failing the ranking.
inline std::vector<RankingEntry> rank_journals(const Dataset& ds, int report_year, Metric metric,
                                               int if_window = 2) {
    if (!is_journal_metric(metric)) {
        throw std::invalid_argument(std::string("metric '") + metric_name(metric) +
                                    "' is not a journal metric");
    }
    std::vector<RankingEntry> entries;
    entries.reserve(ds.journal_ids().size());
    for (const auto& id : ds.journal_ids()) {
        const MetricReport report = journal_report(ds, id, report_year, if_window);
        RankingEntry entry{id, metric, std::nullopt, 0};
        entry.value = metric == Metric::impact_factor ? report.if_value : report.af_value;
        entries.push_back(std::move(entry));
    }
    assign_dense_ranks(entries);
    return entries;
}

// One entry per distinct author appearing in the dataset.
inline std::vector<RankingEntry> rank_researchers(const Dataset& ds, Metric metric) {
    if (!is_researcher_metric(metric)) {
        throw std::invalid_argument(std::string("metric '") + metric_name(metric) +
                                    "' is not a researcher metric");
    }
    std::vector<RankingEntry> entries;
    entries.reserve(ds.author_ids().size());
    for (const auto& id : ds.author_ids()) {
        const ResearcherReport report = researcher_report(ds, id);
        double value = 0.0;
        switch (metric) {
            case Metric::h: value = report.h; break;
            case Metric::g: value = report.g; break;
            default: value = report.asf; break;
        }
        entries.push_back({id, metric, value, 0});
    }
    assign_dense_ranks(entries);
    return entries;
}

}  // namespace citemet
