#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "citemet/ingest_types.hpp"
#include "citemet/types.hpp"

namespace citemet {

class Dataset;
struct BuildResult;

BuildResult build_dataset(const Parsed<PublicationRecord>& pubs,
                          const Parsed<CitationRecord>& cites,
                          const Parsed<JournalMeta>& journals);

// Validated, immutable, indexed store of publications, citations and journal
// metadata. Only build_dataset can construct one, so every Dataset satisfies
// the referential invariants by construction. All reads are pure; instances
// are safe to share across threads.
class Dataset {
public:
    const std::vector<PublicationRecord>& publications() const { return pubs_; }
    const std::vector<CitationRecord>& citations() const { return cites_; }

    // Sorted ascending; rankings and batch reports iterate these.
    const std::vector<std::string>& journal_ids() const { return journal_ids_; }
    const std::vector<std::string>& author_ids() const { return author_ids_; }

    bool has_journal(const std::string& journal_id) const {
        return journals_.count(journal_id) != 0;
    }

    const JournalMeta& journal_meta(const std::string& journal_id) const {
        auto it = journals_.find(journal_id);
        if (it == journals_.end()) throw UnknownJournal(journal_id);
        return it->second;
    }

    const PublicationRecord* publication_by_id(const std::string& article_id) const {
        auto it = pub_index_.find(article_id);
        return it == pub_index_.end() ? nullptr : &pubs_[it->second];
    }

    std::uint64_t journal_publication_count(const std::string& journal_id) const {
        auto it = journal_pub_totals_.find(journal_id);
        return it == journal_pub_totals_.end() ? 0 : it->second;
    }

    // Indices into publications() for one (journal, year) cell; empty if the
    // journal published nothing that year (missing years are known zeros).
    const std::vector<std::size_t>& publications_of(const std::string& journal_id, int year) const {
        static const std::vector<std::size_t> kEmpty;
        auto it = journal_years_.find(journal_id);
        if (it == journal_years_.end()) return kEmpty;
        auto yt = it->second.find(year);
        return yt == it->second.end() ? kEmpty : yt->second.pubs;
    }

    std::uint64_t citable_items(const std::string& journal_id, int year) const {
        auto it = journal_years_.find(journal_id);
        if (it == journal_years_.end()) return 0;
        auto yt = it->second.find(year);
        return yt == it->second.end() ? 0 : yt->second.citable;
    }

    std::uint64_t citations_in_year(const std::string& cited_id, int year) const {
        auto it = citation_years_.find(cited_id);
        if (it == citation_years_.end()) return 0;
        const auto& years = it->second;  // sorted
        auto range = std::equal_range(years.begin(), years.end(), year);
        return static_cast<std::uint64_t>(range.second - range.first);
    }

    std::uint64_t citations_total(const std::string& cited_id) const {
        auto it = citation_years_.find(cited_id);
        return it == citation_years_.end() ? 0 : it->second.size();
    }

    // Indices into publications() listing this author, ordered by article_id.
    const std::vector<std::size_t>& publications_of_author(const std::string& author_id) const {
        static const std::vector<std::size_t> kEmpty;
        auto it = author_pubs_.find(author_id);
        return it == author_pubs_.end() ? kEmpty : it->second;
    }

private:
    struct YearSlot {
        std::vector<std::size_t> pubs;
        std::uint64_t citable = 0;
    };

    Dataset(std::vector<PublicationRecord> pubs, std::vector<CitationRecord> cites,
            std::unordered_map<std::string, JournalMeta> journals)
        : pubs_(std::move(pubs)), cites_(std::move(cites)), journals_(std::move(journals)) {
        journal_ids_.reserve(journals_.size());
        for (const auto& [id, meta] : journals_) journal_ids_.push_back(id);
        std::sort(journal_ids_.begin(), journal_ids_.end());

        for (std::size_t i = 0; i < pubs_.size(); ++i) {
            const auto& p = pubs_[i];
            pub_index_.emplace(p.article_id, i);
            auto& slot = journal_years_[p.journal_id][p.pub_year];
            slot.pubs.push_back(i);
            if (is_citable(p.doc_type)) ++slot.citable;
            ++journal_pub_totals_[p.journal_id];
            for (const auto& a : p.author_ids) author_pubs_[a].push_back(i);
        }
        for (const auto& c : cites_) citation_years_[c.cited_id].push_back(c.citation_year);
        for (auto& [id, years] : citation_years_) std::sort(years.begin(), years.end());

        author_ids_.reserve(author_pubs_.size());
        for (auto& [author, indices] : author_pubs_) {
            std::sort(indices.begin(), indices.end(), [this](std::size_t l, std::size_t r) {
                return pubs_[l].article_id < pubs_[r].article_id;
            });
            author_ids_.push_back(author);
        }
    }

    friend BuildResult build_dataset(const Parsed<PublicationRecord>&,
                                     const Parsed<CitationRecord>&,
                                     const Parsed<JournalMeta>&);

    std::vector<PublicationRecord> pubs_;
    std::vector<CitationRecord> cites_;
    std::unordered_map<std::string, JournalMeta> journals_;
    std::vector<std::string> journal_ids_;
    std::vector<std::string> author_ids_;
    std::unordered_map<std::string, std::size_t> pub_index_;
    std::unordered_map<std::string, std::map<int, YearSlot>> journal_years_;
    std::unordered_map<std::string, std::uint64_t> journal_pub_totals_;
    std::unordered_map<std::string, std::vector<int>> citation_years_;
    std::map<std::string, std::vector<std::size_t>> author_pubs_;
};

struct BuildResult {
    std::optional<Dataset> dataset;
    std::vector<ParseIssue> issues;

    bool ok() const { return dataset.has_value(); }
};

namespace detail {

inline SourceRef origin_of(const std::vector<SourceRef>& origins, std::size_t i,
                           const char* fallback_name) {
    if (i < origins.size()) return origins[i];
    return {fallback_name, i + 1};
}

}  // namespace detail

// Cross-record validation. Collects every violation; succeeds iff there are
// none. citing_id is allowed to reference items outside the dataset.
inline BuildResult build_dataset(const Parsed<PublicationRecord>& pubs,
                                 const Parsed<CitationRecord>& cites,
                                 const Parsed<JournalMeta>& journals) {
    BuildResult result;

    // Inputs are expected to be individually well-formed; if not, hand their
    // issues back instead of building on bad records.
    for (const auto* parsed_issues : {&pubs.issues, &cites.issues, &journals.issues}) {
        result.issues.insert(result.issues.end(), parsed_issues->begin(), parsed_issues->end());
    }
    if (!result.issues.empty()) return result;

    std::unordered_map<std::string, JournalMeta> journal_map;
    for (std::size_t i = 0; i < journals.records.size(); ++i) {
        const auto& j = journals.records[i];
        if (!journal_map.emplace(j.journal_id, j).second) {
            auto ref = detail::origin_of(journals.origins, i, "<journals>");
            result.issues.push_back({ref.file, ref.line, IssueKind::duplicate_article_id,
                                     "duplicate journal_id '" + j.journal_id + "'"});
        }
    }

    std::unordered_map<std::string, std::size_t> pub_index;
    for (std::size_t i = 0; i < pubs.records.size(); ++i) {
        const auto& p = pubs.records[i];
        auto ref = detail::origin_of(pubs.origins, i, "<publications>");
        if (!pub_index.emplace(p.article_id, i).second) {
            result.issues.push_back({ref.file, ref.line, IssueKind::duplicate_article_id,
                                     "duplicate article_id '" + p.article_id + "'"});
            continue;
        }
        auto jt = journal_map.find(p.journal_id);
        if (jt == journal_map.end()) {
            result.issues.push_back({ref.file, ref.line, IssueKind::unknown_journal_id,
                                     "publication '" + p.article_id + "' references journal '" +
                                         p.journal_id + "' with no metadata"});
        } else if (p.pub_year < jt->second.first_indexed_year) {
            result.issues.push_back({ref.file, ref.line, IssueKind::bad_year,
                                     "publication '" + p.article_id + "' year " +
                                         std::to_string(p.pub_year) + " precedes journal '" +
                                         p.journal_id + "' first_indexed_year " +
                                         std::to_string(jt->second.first_indexed_year)});
        }
    }

    for (std::size_t i = 0; i < cites.records.size(); ++i) {
        const auto& c = cites.records[i];
        auto ref = detail::origin_of(cites.origins, i, "<citations>");
        auto pt = pub_index.find(c.cited_id);
        if (pt == pub_index.end()) {
            result.issues.push_back({ref.file, ref.line, IssueKind::unknown_cited_id,
                                     "citation targets unknown article '" + c.cited_id + "'"});
            continue;
        }
        const auto& target = pubs.records[pt->second];
        if (c.citation_year < target.pub_year) {
            result.issues.push_back(
                {ref.file, ref.line, IssueKind::citation_precedes_publication,
                 "citation year " + std::to_string(c.citation_year) + " precedes publication of '" +
                     c.cited_id + "' (" + std::to_string(target.pub_year) + ")"});
        }
    }

    if (!result.issues.empty()) return result;
    result.dataset.emplace(Dataset(pubs.records, cites.records, std::move(journal_map)));
    return result;
}

// Convenience for records built in code rather than parsed from files.
inline BuildResult build_dataset(std::vector<PublicationRecord> pubs,
                                 std::vector<CitationRecord> cites,
                                 std::vector<JournalMeta> journals) {
    Parsed<PublicationRecord> p;
    p.records = std::move(pubs);
    Parsed<CitationRecord> c;
    c.records = std::move(cites);
    Parsed<JournalMeta> j;
    j.records = std::move(journals);
    return build_dataset(p, c, j);
}

}  // namespace citemet
