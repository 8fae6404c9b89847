#pragma once

// Shared test scaffolding: the hand-enumerated fixture, random record
// generators, and a tiny process runner for end-to-end checks. Framework-free
// so both the Catch2 suites and the acceptance binary can use it.

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "citemet/citemet.hpp"

namespace testsupport {

// The reference fixture: one journal, 7 publications in 2010 (5 citable,
// 2 editorials), 11 citations in 2011 of which 3 target the editorials.
// Window counts for 2011 are therefore (a=11, b=5): AF = 1100/16 = 68.75,
// two-year IF = 11/5 = 2.2.
inline std::vector<citemet::PublicationRecord> fixture_publications() {
    return {
        {"p1", "jalpha", 2010, citemet::DocType::article, {"a1", "a2"}},
        {"p2", "jalpha", 2010, citemet::DocType::article, {"a1"}},
        {"p3", "jalpha", 2010, citemet::DocType::review, {"a2"}},
        {"p4", "jalpha", 2010, citemet::DocType::proceedings, {"a3"}},
        {"p5", "jalpha", 2010, citemet::DocType::note, {"a1", "a3"}},
        {"p6", "jalpha", 2010, citemet::DocType::editorial, {}},
        {"p7", "jalpha", 2010, citemet::DocType::editorial, {"a4"}},
    };
}

inline std::vector<citemet::CitationRecord> fixture_citations() {
    std::vector<citemet::CitationRecord> cites;
    auto cite = [&](const std::string& target) {
        cites.push_back({"x" + std::to_string(cites.size() + 1), target, 2011});
    };
    for (int i = 0; i < 4; ++i) cite("p1");  // a1/a2's strongest paper
    for (int i = 0; i < 2; ++i) cite("p2");
    cite("p3");
    cite("p4");
    cite("p6");  // editorials draw citations too; they count in A, not B
    cite("p6");
    cite("p7");
    return cites;
}

inline std::vector<citemet::JournalMeta> fixture_journals() {
    return {{"jalpha", 2008, true}};
}

inline citemet::Dataset fixture_dataset() {
    auto result = citemet::build_dataset(fixture_publications(), fixture_citations(),
                                         fixture_journals());
    if (!result.ok()) throw std::runtime_error("fixture dataset must build");
    return std::move(*result.dataset);
}

// --- random instances --------------------------------------------------------

inline std::vector<std::uint64_t> random_counts(std::mt19937& rng, std::size_t max_len = 50,
                                                std::uint64_t max_count = 100) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<std::uint64_t> count_dist(0, max_count);
    std::vector<std::uint64_t> counts(len_dist(rng));
    for (auto& c : counts) c = count_dist(rng);
    return counts;
}

struct SyntheticRecords {
    std::vector<citemet::PublicationRecord> pubs;
    std::vector<citemet::CitationRecord> cites;
    std::vector<citemet::JournalMeta> journals;
};

// Journals publishing in 2010, cited during 2011. All journals are old
// enough to hold an impact factor; ensure_citable keeps every B positive.
inline SyntheticRecords random_journal_set(std::mt19937& rng, bool ensure_citable) {
    std::uniform_int_distribution<int> journal_count(2, 8);
    std::uniform_int_distribution<int> year_dist(2000, 2008);
    std::uniform_int_distribution<int> citable_dist(ensure_citable ? 1 : 0, 20);
    std::uniform_int_distribution<int> editorial_dist(0, 3);
    std::uniform_int_distribution<int> citation_dist(0, 60);

    SyntheticRecords data;
    int pub_seq = 0;
    int cite_seq = 0;
    const int journals = journal_count(rng);
    for (int j = 0; j < journals; ++j) {
        const std::string jid = "j" + std::to_string(j);
        data.journals.push_back({jid, year_dist(rng), (rng() & 1) != 0});
        std::vector<std::string> article_ids;
        const int citable = citable_dist(rng);
        const int editorials = editorial_dist(rng);
        for (int p = 0; p < citable + editorials; ++p) {
            const std::string pid = "p" + std::to_string(pub_seq++);
            data.pubs.push_back({pid, jid, 2010,
                                 p < citable ? citemet::DocType::article
                                             : citemet::DocType::editorial,
                                 {}});
            article_ids.push_back(pid);
        }
        if (article_ids.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, article_ids.size() - 1);
        const int citations = citation_dist(rng);
        for (int c = 0; c < citations; ++c) {
            data.cites.push_back({"x" + std::to_string(cite_seq++), article_ids[pick(rng)], 2011});
        }
    }
    return data;
}

// Authors with random paper sets and citation loads, occasionally sharing a
// paper with a co-author.
inline SyntheticRecords random_author_set(std::mt19937& rng) {
    std::uniform_int_distribution<int> author_count(2, 10);
    std::uniform_int_distribution<int> paper_count(0, 8);
    std::uniform_int_distribution<int> pub_year(2005, 2010);
    std::uniform_int_distribution<int> citation_count(0, 15);

    SyntheticRecords data;
    data.journals.push_back({"j0", 2000, true});
    const int authors = author_count(rng);
    int pub_seq = 0;
    int cite_seq = 0;
    for (int a = 0; a < authors; ++a) {
        const std::string author = "a" + std::to_string(a);
        const int papers = paper_count(rng);
        for (int p = 0; p < papers; ++p) {
            const std::string pid = "p" + std::to_string(pub_seq++);
            std::vector<std::string> author_ids{author};
            if (authors > 1 && (rng() % 4) == 0) {
                std::string other = "a" + std::to_string(rng() % authors);
                if (other != author) author_ids.push_back(other);
            }
            const int year = pub_year(rng);
            data.pubs.push_back({pid, "j0", year, citemet::DocType::article, author_ids});
            const int citations = citation_count(rng);
            std::uniform_int_distribution<int> cite_year(year, 2012);
            for (int c = 0; c < citations; ++c) {
                data.cites.push_back({"x" + std::to_string(cite_seq++), pid, cite_year(rng)});
            }
        }
    }
    return data;
}

inline citemet::Dataset build_or_throw(SyntheticRecords data) {
    auto result = citemet::build_dataset(std::move(data.pubs), std::move(data.cites),
                                         std::move(data.journals));
    if (!result.ok()) throw std::runtime_error("synthetic dataset must build");
    return std::move(*result.dataset);
}

// --- process + file helpers --------------------------------------------------

struct ProcResult {
    int exit_code = -1;
    std::string out;
};

// Runs through /bin/sh capturing stdout; callers add their own stderr
// redirection when they care about it.
inline ProcResult run_command(const std::string& cmd) {
    ProcResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    if (!current.empty()) lines.push_back(current);
    return lines;
}

}  // namespace testsupport
