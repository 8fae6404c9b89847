#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace citemet {

// Publication years earlier than this are treated as data errors.
inline constexpr int kMinPubYear = 1500;

enum class DocType { article, review, proceedings, note, editorial, letter, other };

// Citable items enter the denominator B. Citations *to* any item, citable or
// not, still count in the numerator A.
inline bool is_citable(DocType t) {
    switch (t) {
        case DocType::article:
        case DocType::review:
        case DocType::proceedings:
        case DocType::note:
            return true;
        default:
            return false;
    }
}

inline const char* doc_type_name(DocType t) {
    switch (t) {
        case DocType::article: return "article";
        case DocType::review: return "review";
        case DocType::proceedings: return "proceedings";
        case DocType::note: return "note";
        case DocType::editorial: return "editorial";
        case DocType::letter: return "letter";
        default: return "other";
    }
}

inline std::optional<DocType> doc_type_from(std::string_view s) {
    if (s == "article") return DocType::article;
    if (s == "review") return DocType::review;
    if (s == "proceedings") return DocType::proceedings;
    if (s == "note") return DocType::note;
    if (s == "editorial") return DocType::editorial;
    if (s == "letter") return DocType::letter;
    if (s == "other") return DocType::other;
    return std::nullopt;
}

struct PublicationRecord {
    std::string article_id;
    std::string journal_id;
    int pub_year = 0;
    DocType doc_type = DocType::other;
    std::vector<std::string> author_ids;  // ordered, no duplicates

    friend bool operator==(const PublicationRecord&, const PublicationRecord&) = default;
};

struct CitationRecord {
    std::string citing_id;  // may reference an item outside the dataset
    std::string cited_id;   // must resolve to a publication
    int citation_year = 0;

    friend bool operator==(const CitationRecord&, const CitationRecord&) = default;
};

struct JournalMeta {
    std::string journal_id;
    int first_indexed_year = 0;
    bool indexed_from_first_volume = false;

    friend bool operator==(const JournalMeta&, const JournalMeta&) = default;
};

// A = citation count, B = citable-item count for one report window.
struct CountPair {
    std::uint64_t a = 0;
    std::uint64_t b = 0;

    friend bool operator==(const CountPair&, const CountPair&) = default;
};

// Whether a journal is old enough (in indexed years) to receive an impact
// factor: two years when indexed from its first volume, three otherwise.
struct Eligibility {
    enum class Status { eligible, too_new, no_data };

    Status status = Status::no_data;
    int years_remaining = 0;  // >= 1 iff status == too_new

    static Eligibility eligible() { return {Status::eligible, 0}; }
    static Eligibility too_new(int years) { return {Status::too_new, years}; }
    static Eligibility no_data() { return {Status::no_data, 0}; }

    friend bool operator==(const Eligibility&, const Eligibility&) = default;
};

struct UnknownJournal : std::runtime_error {
    explicit UnknownJournal(const std::string& journal_id)
        : std::runtime_error("unknown journal '" + journal_id + "'") {}
};

// A ratio whose defining formula has no value for the given counts. Distinct
// from a ratio that evaluates to zero.
struct UndefinedRatio : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace citemet
