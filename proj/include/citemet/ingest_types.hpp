#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace citemet {

enum class IssueKind {
    bad_field_count,
    empty_token,
    bad_year,
    bad_doc_type,
    duplicate_article_id,
    unknown_cited_id,
    unknown_journal_id,
    citation_precedes_publication,
    bad_boolean,
};

inline const char* issue_kind_name(IssueKind k) {
    switch (k) {
        case IssueKind::bad_field_count: return "bad_field_count";
        case IssueKind::empty_token: return "empty_token";
        case IssueKind::bad_year: return "bad_year";
        case IssueKind::bad_doc_type: return "bad_doc_type";
        case IssueKind::duplicate_article_id: return "duplicate_article_id";
        case IssueKind::unknown_cited_id: return "unknown_cited_id";
        case IssueKind::unknown_journal_id: return "unknown_journal_id";
        case IssueKind::citation_precedes_publication: return "citation_precedes_publication";
        case IssueKind::bad_boolean: return "bad_boolean";
    }
    return "unknown";
}

struct ParseIssue {
    std::string file;
    std::size_t line = 0;  // 1-based physical line in the source file
    IssueKind kind = IssueKind::bad_field_count;
    std::string detail;
};

inline std::string to_string(const ParseIssue& issue) {
    std::string out = issue.file;
    out += ':';
    out += std::to_string(issue.line);
    out += ": ";
    out += issue_kind_name(issue.kind);
    out += ": ";
    out += issue.detail;
    return out;
}

// Where a record came from, so later validation stages can point at the
// offending source line.
struct SourceRef {
    std::string file;
    std::size_t line = 0;
};

// Parser output: records plus every issue found. A file is accepted only when
// issues is empty; records stay available for callers that want to look at
// what did parse.
template <typename T>
struct Parsed {
    std::vector<T> records;
    std::vector<SourceRef> origins;  // parallel to records
    std::vector<ParseIssue> issues;

    bool ok() const { return issues.empty(); }
};

enum class Format { delimited, jsonl, auto_detect };

struct IngestOptions {
    Format format = Format::auto_detect;
    bool strict = false;  // stop at the first issue instead of collecting all
};

inline bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// auto resolves by extension before any parsing: .jsonl -> jsonl,
// .csv/.tsv (and anything else) -> delimited.
inline Format resolve_format(Format f, std::string_view source_name) {
    if (f != Format::auto_detect) return f;
    if (ends_with(source_name, ".jsonl")) return Format::jsonl;
    return Format::delimited;
}

// Comma for .csv, tab for .tsv.
inline char delimiter_for(std::string_view source_name) {
    return ends_with(source_name, ".tsv") ? '\t' : ',';
}

}  // namespace citemet
