#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "json.hpp"

#include "citemet/dataset.hpp"
#include "citemet/ingest_types.hpp"
#include "citemet/types.hpp"

// File formats (canonical interchange, UTF-8, LF or CRLF):
//
//   publications  header  article_id,journal_id,pub_year,doc_type,author_ids
//                 author_ids is a ';'-separated sublist and may be empty
//   citations     header  citing_id,cited_id,citation_year
//   journals      header  journal_id,first_indexed_year,indexed_from_first_volume
//                 boolean tokens are exactly true|false
//
// Delimiter is ',' for .csv and '\t' for .tsv; .jsonl carries one object per
// line with the same field names and author_ids as an array. Ids are machine
// tokens: no quoting, no embedded delimiters.

namespace citemet {

namespace detail {

inline std::vector<std::string> split(std::string_view line, char delim) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(delim, start);
        if (pos == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            return fields;
        }
        fields.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

inline std::string join(const std::vector<std::string>& fields, char delim) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += delim;
        out += fields[i];
    }
    return out;
}

inline std::optional<int> parse_int(std::string_view token) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || token.empty()) return std::nullopt;
    return value;
}

// Physical lines, 1-based, CRLF tolerated.
struct LineReader {
    std::string text;
    std::size_t pos = 0;
    std::size_t line_no = 0;

    explicit LineReader(std::istream& in)
        : text(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()) {}

    std::optional<std::string_view> next() {
        if (pos >= text.size()) return std::nullopt;
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string_view line(text.data() + pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = end + 1;
        ++line_no;
        return line;
    }
};

// Shared scaffolding for the three record parsers. parse_line appends the
// record itself so it can decide whether a damaged line still yields one.
template <typename T, typename ParseDelimitedLine, typename ParseJsonLine>
Parsed<T> parse_records(std::istream& in, const IngestOptions& opts, const std::string& source_name,
                        const std::string& expected_header, ParseDelimitedLine&& parse_delimited,
                        ParseJsonLine&& parse_json) {
    Parsed<T> out;
    const Format format = resolve_format(opts.format, source_name);
    const char delim = delimiter_for(source_name);
    LineReader reader(in);

    auto issue = [&](std::size_t line, IssueKind kind, std::string detail) {
        out.issues.push_back({source_name, line, kind, std::move(detail)});
    };

    if (format == Format::delimited) {
        auto header = reader.next();
        if (!header) {
            issue(1, IssueKind::bad_field_count, "missing header row");
            return out;
        }
        const std::string expected = join(split(expected_header, ','), delim);
        if (*header != expected) {
            issue(1, IssueKind::bad_field_count, "expected header '" + expected + "'");
            return out;
        }
    }

    while (auto line = reader.next()) {
        if (line->empty()) continue;
        const std::size_t before = out.issues.size();
        const std::size_t records_before = out.records.size();
        if (format == Format::delimited) {
            parse_delimited(*line, delim, reader.line_no, out);
        } else {
            parse_json(*line, reader.line_no, out);
        }
        for (std::size_t i = records_before; i < out.records.size(); ++i) {
            out.origins.push_back({source_name, reader.line_no});
        }
        if (opts.strict && out.issues.size() > before) {
            // strict mode rejects the file at the first issue, including a
            // record the lenient path would have kept
            out.records.resize(records_before);
            out.origins.resize(records_before);
            out.issues.resize(before + 1);
            return out;
        }
    }
    return out;
}

inline nlohmann::json parse_json_object(std::string_view line, std::size_t line_no,
                                        const std::string& source_name,
                                        std::vector<ParseIssue>& issues) {
    nlohmann::json value = nlohmann::json::parse(line, nullptr, false);
    if (value.is_discarded()) {
        issues.push_back({source_name, line_no, IssueKind::bad_field_count, "invalid JSON"});
        return nlohmann::json();
    }
    if (!value.is_object()) {
        issues.push_back({source_name, line_no, IssueKind::bad_field_count, "expected a JSON object"});
        return nlohmann::json();
    }
    return value;
}

}  // namespace detail

inline Parsed<PublicationRecord> parse_publications(std::istream& in, const IngestOptions& opts,
                                                    const std::string& source_name) {
    std::unordered_set<std::string> seen_ids;

    auto finish_record = [&](PublicationRecord&& rec, std::vector<std::string> authors,
                             std::size_t line_no, Parsed<PublicationRecord>& out) {
        // repeated author tokens within one record are normalized away,
        // keeping the first occurrence
        std::vector<std::string> unique_authors;
        for (auto& a : authors) {
            if (std::find(unique_authors.begin(), unique_authors.end(), a) == unique_authors.end()) {
                unique_authors.push_back(std::move(a));
            }
        }
        if (!seen_ids.insert(rec.article_id).second) {
            out.issues.push_back({source_name, line_no, IssueKind::duplicate_article_id,
                                  "duplicate article_id '" + rec.article_id + "'"});
            return;
        }
        rec.author_ids = std::move(unique_authors);
        out.records.push_back(std::move(rec));
    };

    auto parse_delimited = [&](std::string_view line, char delim, std::size_t line_no,
                               Parsed<PublicationRecord>& out) {
        auto issue = [&](IssueKind kind, std::string detail) {
            out.issues.push_back({source_name, line_no, kind, std::move(detail)});
        };
        auto fields = detail::split(line, delim);
        if (fields.size() != 5) {
            issue(IssueKind::bad_field_count,
                  "expected 5 fields, got " + std::to_string(fields.size()));
            return;
        }
        if (fields[0].empty()) return issue(IssueKind::empty_token, "empty article_id");
        if (fields[1].empty()) return issue(IssueKind::empty_token, "empty journal_id");
        auto year = detail::parse_int(fields[2]);
        if (!year) return issue(IssueKind::bad_year, "bad pub_year '" + fields[2] + "'");
        if (*year < kMinPubYear) {
            return issue(IssueKind::bad_year,
                         "pub_year " + fields[2] + " before " + std::to_string(kMinPubYear));
        }
        auto doc_type = doc_type_from(fields[3]);
        if (!doc_type) {
            issue(IssueKind::bad_doc_type, "unknown doc_type '" + fields[3] + "'");
            if (opts.strict) return;
            doc_type = DocType::other;  // lenient mode keeps the record
        }
        std::vector<std::string> authors;
        if (!fields[4].empty()) {
            authors = detail::split(fields[4], ';');
            for (const auto& a : authors) {
                if (a.empty()) return issue(IssueKind::empty_token, "empty author id");
            }
        }
        finish_record({fields[0], fields[1], *year, *doc_type, {}}, std::move(authors), line_no, out);
    };

    auto parse_json = [&](std::string_view line, std::size_t line_no,
                          Parsed<PublicationRecord>& out) {
        auto issue = [&](IssueKind kind, std::string detail) {
            out.issues.push_back({source_name, line_no, kind, std::move(detail)});
        };
        auto obj = detail::parse_json_object(line, line_no, source_name, out.issues);
        if (!obj.is_object()) return;
        for (const char* key : {"article_id", "journal_id", "pub_year", "doc_type", "author_ids"}) {
            if (!obj.contains(key)) {
                return issue(IssueKind::bad_field_count, std::string("missing field '") + key + "'");
            }
        }
        for (const char* key : {"article_id", "journal_id"}) {
            if (!obj[key].is_string()) {
                return issue(IssueKind::bad_field_count, std::string("field '") + key + "' must be a string");
            }
        }
        std::string article_id = obj["article_id"].get<std::string>();
        std::string journal_id = obj["journal_id"].get<std::string>();
        if (article_id.empty()) return issue(IssueKind::empty_token, "empty article_id");
        if (journal_id.empty()) return issue(IssueKind::empty_token, "empty journal_id");
        if (!obj["pub_year"].is_number_integer()) {
            return issue(IssueKind::bad_year, "pub_year must be an integer");
        }
        const int year = obj["pub_year"].get<int>();
        if (year < kMinPubYear) {
            return issue(IssueKind::bad_year,
                         "pub_year " + std::to_string(year) + " before " + std::to_string(kMinPubYear));
        }
        if (!obj["doc_type"].is_string()) {
            return issue(IssueKind::bad_doc_type, "doc_type must be a string");
        }
        auto doc_type = doc_type_from(obj["doc_type"].get<std::string>());
        if (!doc_type) {
            issue(IssueKind::bad_doc_type,
                  "unknown doc_type '" + obj["doc_type"].get<std::string>() + "'");
            if (opts.strict) return;
            doc_type = DocType::other;
        }
        if (!obj["author_ids"].is_array()) {
            return issue(IssueKind::bad_field_count, "author_ids must be an array");
        }
        std::vector<std::string> authors;
        for (const auto& a : obj["author_ids"]) {
            if (!a.is_string()) {
                return issue(IssueKind::bad_field_count, "author_ids must contain strings");
            }
            if (a.get<std::string>().empty()) return issue(IssueKind::empty_token, "empty author id");
            authors.push_back(a.get<std::string>());
        }
        finish_record({std::move(article_id), std::move(journal_id), year, *doc_type, {}},
                      std::move(authors), line_no, out);
    };

    return detail::parse_records<PublicationRecord>(
        in, opts, source_name, "article_id,journal_id,pub_year,doc_type,author_ids",
        parse_delimited, parse_json);
}

inline Parsed<CitationRecord> parse_citations(std::istream& in, const IngestOptions& opts,
                                              const std::string& source_name) {
    auto parse_delimited = [&](std::string_view line, char delim, std::size_t line_no,
                               Parsed<CitationRecord>& out) {
        auto issue = [&](IssueKind kind, std::string detail) {
            out.issues.push_back({source_name, line_no, kind, std::move(detail)});
        };
        auto fields = detail::split(line, delim);
        if (fields.size() != 3) {
            issue(IssueKind::bad_field_count,
                  "expected 3 fields, got " + std::to_string(fields.size()));
            return;
        }
        if (fields[0].empty()) return issue(IssueKind::empty_token, "empty citing_id");
        if (fields[1].empty()) return issue(IssueKind::empty_token, "empty cited_id");
        auto year = detail::parse_int(fields[2]);
        if (!year) return issue(IssueKind::bad_year, "bad citation_year '" + fields[2] + "'");
        out.records.push_back({fields[0], fields[1], *year});
    };

    auto parse_json = [&](std::string_view line, std::size_t line_no, Parsed<CitationRecord>& out) {
        auto issue = [&](IssueKind kind, std::string detail) {
            out.issues.push_back({source_name, line_no, kind, std::move(detail)});
        };
        auto obj = detail::parse_json_object(line, line_no, source_name, out.issues);
        if (!obj.is_object()) return;
        for (const char* key : {"citing_id", "cited_id", "citation_year"}) {
            if (!obj.contains(key)) {
                return issue(IssueKind::bad_field_count, std::string("missing field '") + key + "'");
            }
        }
        for (const char* key : {"citing_id", "cited_id"}) {
            if (!obj[key].is_string()) {
                return issue(IssueKind::bad_field_count, std::string("field '") + key + "' must be a string");
            }
            if (obj[key].get<std::string>().empty()) {
                return issue(IssueKind::empty_token, std::string("empty ") + key);
            }
        }
        if (!obj["citation_year"].is_number_integer()) {
            return issue(IssueKind::bad_year, "citation_year must be an integer");
        }
        out.records.push_back({obj["citing_id"].get<std::string>(),
                               obj["cited_id"].get<std::string>(),
                               obj["citation_year"].get<int>()});
    };

    return detail::parse_records<CitationRecord>(
        in, opts, source_name, "citing_id,cited_id,citation_year", parse_delimited, parse_json);
}

inline Parsed<JournalMeta> parse_journals(std::istream& in, const IngestOptions& opts,
                                          const std::string& source_name) {
    auto parse_delimited = [&](std::string_view line, char delim, std::size_t line_no,
                               Parsed<JournalMeta>& out) {
        auto issue = [&](IssueKind kind, std::string detail) {
            out.issues.push_back({source_name, line_no, kind, std::move(detail)});
        };
        auto fields = detail::split(line, delim);
        if (fields.size() != 3) {
            issue(IssueKind::bad_field_count,
                  "expected 3 fields, got " + std::to_string(fields.size()));
            return;
        }
        if (fields[0].empty()) return issue(IssueKind::empty_token, "empty journal_id");
        auto year = detail::parse_int(fields[1]);
        if (!year) return issue(IssueKind::bad_year, "bad first_indexed_year '" + fields[1] + "'");
        bool from_first_volume = false;
        if (fields[2] == "true") from_first_volume = true;
        else if (fields[2] == "false") from_first_volume = false;
        else return issue(IssueKind::bad_boolean, "expected true|false, got '" + fields[2] + "'");
        out.records.push_back({fields[0], *year, from_first_volume});
    };

    auto parse_json = [&](std::string_view line, std::size_t line_no, Parsed<JournalMeta>& out) {
        auto issue = [&](IssueKind kind, std::string detail) {
            out.issues.push_back({source_name, line_no, kind, std::move(detail)});
        };
        auto obj = detail::parse_json_object(line, line_no, source_name, out.issues);
        if (!obj.is_object()) return;
        for (const char* key : {"journal_id", "first_indexed_year", "indexed_from_first_volume"}) {
            if (!obj.contains(key)) {
                return issue(IssueKind::bad_field_count, std::string("missing field '") + key + "'");
            }
        }
        if (!obj["journal_id"].is_string()) {
            return issue(IssueKind::bad_field_count, "field 'journal_id' must be a string");
        }
        if (obj["journal_id"].get<std::string>().empty()) {
            return issue(IssueKind::empty_token, "empty journal_id");
        }
        if (!obj["first_indexed_year"].is_number_integer()) {
            return issue(IssueKind::bad_year, "first_indexed_year must be an integer");
        }
        if (!obj["indexed_from_first_volume"].is_boolean()) {
            return issue(IssueKind::bad_boolean, "indexed_from_first_volume must be a boolean");
        }
        out.records.push_back({obj["journal_id"].get<std::string>(),
                               obj["first_indexed_year"].get<int>(),
                               obj["indexed_from_first_volume"].get<bool>()});
    };

    return detail::parse_records<JournalMeta>(
        in, opts, source_name, "journal_id,first_indexed_year,indexed_from_first_volume",
        parse_delimited, parse_json);
}

// --- serialization (canonical comma-delimited or jsonl) ---------------------

inline std::string serialize_publications(const std::vector<PublicationRecord>& records,
                                          Format format) {
    std::string out;
    if (format == Format::jsonl) {
        for (const auto& r : records) {
            nlohmann::json obj{{"article_id", r.article_id},
                               {"journal_id", r.journal_id},
                               {"pub_year", r.pub_year},
                               {"doc_type", doc_type_name(r.doc_type)},
                               {"author_ids", r.author_ids}};
            out += obj.dump();
            out += '\n';
        }
        return out;
    }
    out = "article_id,journal_id,pub_year,doc_type,author_ids\n";
    for (const auto& r : records) {
        out += r.article_id;
        out += ',';
        out += r.journal_id;
        out += ',';
        out += std::to_string(r.pub_year);
        out += ',';
        out += doc_type_name(r.doc_type);
        out += ',';
        out += detail::join(r.author_ids, ';');
        out += '\n';
    }
    return out;
}

inline std::string serialize_citations(const std::vector<CitationRecord>& records, Format format) {
    std::string out;
    if (format == Format::jsonl) {
        for (const auto& r : records) {
            nlohmann::json obj{{"citing_id", r.citing_id},
                               {"cited_id", r.cited_id},
                               {"citation_year", r.citation_year}};
            out += obj.dump();
            out += '\n';
        }
        return out;
    }
    out = "citing_id,cited_id,citation_year\n";
    for (const auto& r : records) {
        out += r.citing_id;
        out += ',';
        out += r.cited_id;
        out += ',';
        out += std::to_string(r.citation_year);
        out += '\n';
    }
    return out;
}

inline std::string serialize_journals(const std::vector<JournalMeta>& records, Format format) {
    std::string out;
    if (format == Format::jsonl) {
        for (const auto& r : records) {
            nlohmann::json obj{{"journal_id", r.journal_id},
                               {"first_indexed_year", r.first_indexed_year},
                               {"indexed_from_first_volume", r.indexed_from_first_volume}};
            out += obj.dump();
            out += '\n';
        }
        return out;
    }
    out = "journal_id,first_indexed_year,indexed_from_first_volume\n";
    for (const auto& r : records) {
        out += r.journal_id;
        out += ',';
        out += std::to_string(r.first_indexed_year);
        out += ',';
        out += r.indexed_from_first_volume ? "true" : "false";
        out += '\n';
    }
    return out;
}

// --- file loading ------------------------------------------------------------

struct FileError : std::runtime_error {
    explicit FileError(const std::string& path) : std::runtime_error("cannot open '" + path + "'") {}
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

// Parse all three files, then cross-validate. Parse issues from every file
// are collected before referential checks run; in strict mode the first
// issue stops the whole load.
inline BuildResult load_dataset(const std::string& pubs_path, const std::string& cites_path,
                                const std::string& journals_path, const IngestOptions& opts) {
    std::istringstream pubs_in(read_file(pubs_path));
    auto pubs = parse_publications(pubs_in, opts, pubs_path);
    if (opts.strict && !pubs.ok()) return {std::nullopt, pubs.issues};

    std::istringstream cites_in(read_file(cites_path));
    auto cites = parse_citations(cites_in, opts, cites_path);
    if (opts.strict && !cites.ok()) return {std::nullopt, cites.issues};

    std::istringstream journals_in(read_file(journals_path));
    auto journals = parse_journals(journals_in, opts, journals_path);
    if (opts.strict && !journals.ok()) return {std::nullopt, journals.issues};

    auto result = build_dataset(pubs, cites, journals);
    if (opts.strict && result.issues.size() > 1) result.issues.resize(1);
    return result;
}

}  // namespace citemet
