#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "citemet/dataset.hpp"
#include "citemet/types.hpp"

namespace citemet {

// A and B for one journal and report year: B counts citable items published
// in [report_year - window, report_year - 1]; A counts report-year citations
// to *anything* the journal published in that range, citable or not.
inline CountPair window_counts(const Dataset& ds, const std::string& journal_id, int report_year,
                               int window) {
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    if (!ds.has_journal(journal_id)) throw UnknownJournal(journal_id);
    CountPair counts;
    for (int year = report_year - window; year <= report_year - 1; ++year) {
        counts.b += ds.citable_items(journal_id, year);
        for (std::size_t idx : ds.publications_of(journal_id, year)) {
            counts.a += ds.citations_in_year(ds.publications()[idx].article_id, report_year);
        }
    }
    return counts;
}

// IF = A / B. Undefined when B = 0; that is not the same thing as IF = 0.
inline double impact_factor(CountPair c) {
    if (c.b == 0) throw UndefinedRatio("impact factor undefined: no citable items in window");
    return static_cast<double>(c.a) / static_cast<double>(c.b);
}

// AF = 100 * A / (A + B), a percentage in [0, 100]. Well defined whenever
// A + B > 0, including B = 0 (then AF = 100).
inline double af_score(CountPair c) {
    if (c.a + c.b == 0) throw UndefinedRatio("AF undefined: no citations and no citable items");
    return 100.0 * static_cast<double>(c.a) / static_cast<double>(c.a + c.b);
}

// Journals indexed from their first volume qualify after two full years of
// indexing (earlier years count as known zeros); journals picked up mid-run
// need three.
inline Eligibility if_eligibility(const JournalMeta& meta, const Dataset& ds, int report_year) {
    if (ds.journal_publication_count(meta.journal_id) == 0) return Eligibility::no_data();
    const int indexed_years = report_year - meta.first_indexed_year;
    const int required = meta.indexed_from_first_volume ? 2 : 3;
    if (indexed_years >= required) return Eligibility::eligible();
    return Eligibility::too_new(required - indexed_years);
}

// Largest h such that at least h entries are >= h. Order-independent.
inline unsigned h_index(std::vector<std::uint64_t> citation_counts) {
    std::sort(citation_counts.begin(), citation_counts.end(), std::greater<>());
    unsigned h = 0;
    for (std::size_t i = 0; i < citation_counts.size(); ++i) {
        if (citation_counts[i] >= i + 1) h = static_cast<unsigned>(i + 1);
        else break;
    }
    return h;
}

// Largest g <= n such that the top g entries together hold at least g^2
// citations. Capped at the paper count; order-independent.
inline unsigned g_index(std::vector<std::uint64_t> citation_counts) {
    std::sort(citation_counts.begin(), citation_counts.end(), std::greater<>());
    unsigned g = 0;
    std::uint64_t prefix = 0;
    for (std::size_t i = 0; i < citation_counts.size(); ++i) {
        prefix += citation_counts[i];
        const std::uint64_t candidate = static_cast<std::uint64_t>(i + 1);
        if (prefix >= candidate * candidate) g = static_cast<unsigned>(candidate);
    }
    return g;
}

// AsF = 100 * h / (h + 1); strictly below 100 for every finite h.
inline double asf_score(unsigned h) {
    return 100.0 * static_cast<double>(h) / (static_cast<double>(h) + 1.0);
}

struct MetricReport {
    std::string journal_id;
    int report_year = 0;
    int if_window = 2;
    CountPair if_counts;
    CountPair af_counts;  // always the one-year window
    Eligibility eligibility;
    std::optional<double> if_value;  // present iff eligible and if_counts.b > 0
    std::optional<double> af_value;  // absent only when af_counts are (0, 0)
};

inline MetricReport journal_report(const Dataset& ds, const std::string& journal_id,
                                   int report_year, int if_window = 2) {
    MetricReport report;
    report.journal_id = journal_id;
    report.report_year = report_year;
    report.if_window = if_window;
    report.if_counts = window_counts(ds, journal_id, report_year, if_window);
    report.af_counts = window_counts(ds, journal_id, report_year, 1);
    report.eligibility = if_eligibility(ds.journal_meta(journal_id), ds, report_year);
    if (report.eligibility.status == Eligibility::Status::eligible && report.if_counts.b > 0) {
        report.if_value = impact_factor(report.if_counts);
    }
    if (report.af_counts.a + report.af_counts.b > 0) {
        report.af_value = af_score(report.af_counts);
    }
    return report;
}

struct ResearcherReport {
    std::string author_id;
    std::vector<std::uint64_t> citation_counts;  // per paper, descending
    unsigned h = 0;
    unsigned g = 0;
    double asf = 0.0;
};

// Unknown authors are not an error; they just have no papers.
inline ResearcherReport researcher_report(const Dataset& ds, const std::string& author_id) {
    ResearcherReport report;
    report.author_id = author_id;
    for (std::size_t idx : ds.publications_of_author(author_id)) {
        report.citation_counts.push_back(ds.citations_total(ds.publications()[idx].article_id));
    }
    std::sort(report.citation_counts.begin(), report.citation_counts.end(), std::greater<>());
    report.h = h_index(report.citation_counts);
    report.g = g_index(report.citation_counts);
    report.asf = asf_score(report.h);
    return report;
}

}  // namespace citemet
