// citemet - deterministic journal and researcher citation indices over local
// publication/citation files. Identical inputs and flags always produce
// byte-identical stdout; diagnostics go to stderr.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "citemet/citemet.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;  // validation or parse failure
constexpr int kExitUsage = 2;

struct DataPaths {
    std::string pubs;
    std::string cites;
    std::string journals;
};

// Three explicit paths, or none plus CITEMET_DATA_DIR holding the canonical
// publications.csv / citations.csv / journals.csv.
std::optional<DataPaths> resolve_paths(const std::vector<std::string>& files) {
    if (files.size() == 3) return DataPaths{files[0], files[1], files[2]};
    if (files.empty()) {
        const char* dir = std::getenv("CITEMET_DATA_DIR");
        if (dir && *dir) {
            const std::string base = std::string(dir) + "/";
            return DataPaths{base + "publications.csv", base + "citations.csv",
                             base + "journals.csv"};
        }
        std::cerr << "citemet: expected three data files (publications citations journals) "
                     "or CITEMET_DATA_DIR\n";
        return std::nullopt;
    }
    std::cerr << "citemet: expected exactly three data files, got " << files.size() << "\n";
    return std::nullopt;
}

void sort_issues(std::vector<citemet::ParseIssue>& issues) {
    std::stable_sort(issues.begin(), issues.end(),
                     [](const citemet::ParseIssue& l, const citemet::ParseIssue& r) {
                         if (l.file != r.file) return l.file < r.file;
                         return l.line < r.line;
                     });
}

void print_issues(const std::vector<citemet::ParseIssue>& issues, std::ostream& out) {
    for (const auto& issue : issues) out << citemet::to_string(issue) << "\n";
}

// Loads and validates; on failure prints diagnostics to stderr and returns
// the exit code to use. kExitOk means `dataset` is populated.
int load_or_report(const DataPaths& paths, const citemet::IngestOptions& opts,
                   std::optional<citemet::Dataset>& dataset) {
    try {
        auto result = citemet::load_dataset(paths.pubs, paths.cites, paths.journals, opts);
        if (!result.ok()) {
            sort_issues(result.issues);
            print_issues(result.issues, std::cerr);
            return kExitDataError;
        }
        dataset = std::move(result.dataset);
        return kExitOk;
    } catch (const citemet::FileError& e) {
        std::cerr << "citemet: " << e.what() << "\n";
        return kExitUsage;
    }
}

int run_validate(const DataPaths& paths, bool strict) {
    citemet::IngestOptions opts;
    opts.strict = strict;
    try {
        auto result = citemet::load_dataset(paths.pubs, paths.cites, paths.journals, opts);
        if (result.issues.empty()) return kExitOk;
        sort_issues(result.issues);
        print_issues(result.issues, std::cout);
        return kExitDataError;
    } catch (const citemet::FileError& e) {
        std::cerr << "citemet: " << e.what() << "\n";
        return kExitUsage;
    }
}

std::string window_label(int window) { return std::to_string(window) + "-year"; }

std::string plural_years(int n) { return n == 1 ? "1 more year" : std::to_string(n) + " more years"; }

int run_journal(const DataPaths& paths, const std::string& journal_id, int year, int window) {
    std::optional<citemet::Dataset> ds;
    if (int rc = load_or_report(paths, {}, ds); rc != kExitOk) return rc;
    if (!ds->has_journal(journal_id)) {
        std::cerr << "citemet: unknown journal '" << journal_id << "'\n";
        return kExitDataError;
    }
    const auto report = citemet::journal_report(*ds, journal_id, year, window);

    std::string out;
    out += "journal: " + report.journal_id + "\n";
    out += "report year: " + std::to_string(report.report_year) + "\n";
    out += "IF window (" + window_label(window) + "): A=" + std::to_string(report.if_counts.a) +
           " B=" + std::to_string(report.if_counts.b) + "\n";
    out += "IF (" + window_label(window) + "): ";
    switch (report.eligibility.status) {
        case citemet::Eligibility::Status::eligible:
            out += report.if_value ? citemet::format_display(*report.if_value)
                                   : "undefined (no citable items in window)";
            break;
        case citemet::Eligibility::Status::too_new:
            out += "not yet eligible (" + plural_years(report.eligibility.years_remaining) + ")";
            break;
        case citemet::Eligibility::Status::no_data:
            out += "no data";
            break;
    }
    out += "\n";
    out += "AF window (1-year): A=" + std::to_string(report.af_counts.a) +
           " B=" + std::to_string(report.af_counts.b) + "\n";
    out += "AF: ";
    out += report.af_value ? citemet::format_display(*report.af_value)
                           : "undefined (no publications and no citations)";
    out += "\n";
    std::cout << out;
    return kExitOk;
}

int run_author(const DataPaths& paths, const std::string& author_id) {
    std::optional<citemet::Dataset> ds;
    if (int rc = load_or_report(paths, {}, ds); rc != kExitOk) return rc;
    const auto report = citemet::researcher_report(*ds, author_id);

    std::string out;
    out += "author: " + report.author_id + "\n";
    out += "papers: " + std::to_string(report.citation_counts.size()) + "\n";
    out += "citations (desc):";
    if (report.citation_counts.empty()) {
        out += " (none)";
    } else {
        for (auto c : report.citation_counts) out += " " + std::to_string(c);
    }
    out += "\n";
    out += "h: " + std::to_string(report.h) + "  g: " + std::to_string(report.g) +
           "  AsF: " + citemet::format_display(report.asf) + "\n";
    std::cout << out;
    return kExitOk;
}

int run_rank(const DataPaths& paths, const std::string& subjects, const std::string& metric_str,
             std::optional<int> year, int window, const std::string& format_str) {
    const auto metric = citemet::metric_from(metric_str);
    if (!metric) {
        std::cerr << "citemet: unknown metric '" << metric_str << "'\n";
        return kExitUsage;
    }
    const auto format = format_str == "csv" ? citemet::RenderFormat::csv
                                            : citemet::RenderFormat::plain_table;
    const bool journals = subjects == "journals";
    if (journals && !citemet::is_journal_metric(*metric)) {
        std::cerr << "citemet: metric '" << metric_str << "' is not valid for --subjects journals\n";
        return kExitUsage;
    }
    if (!journals && !citemet::is_researcher_metric(*metric)) {
        std::cerr << "citemet: metric '" << metric_str << "' is not valid for --subjects authors\n";
        return kExitUsage;
    }
    if (journals && !year) {
        std::cerr << "citemet: --subjects journals requires --year\n";
        return kExitUsage;
    }

    std::optional<citemet::Dataset> ds;
    if (int rc = load_or_report(paths, {}, ds); rc != kExitOk) return rc;
    const auto entries = journals ? citemet::rank_journals(*ds, *year, *metric, window)
                                  : citemet::rank_researchers(*ds, *metric);
    std::cout << citemet::render(entries, format);
    return kExitOk;
}

int run_plotdata(const std::string& curve, const std::vector<std::uint64_t>& b_values,
                 std::uint64_t a_max, unsigned h_max, const std::string& format_str) {
    const auto format = format_str == "plain_table" ? citemet::RenderFormat::plain_table
                                                    : citemet::RenderFormat::csv;
    std::vector<citemet::Series> series;
    if (curve == "af") {
        if (b_values.empty()) {
            std::cerr << "citemet: --curve af requires at least one --b\n";
            return kExitUsage;
        }
        for (auto b : b_values) series.push_back(citemet::af_curve(b, a_max));
    } else {
        series.push_back(citemet::asf_curve(h_max));
    }
    std::cout << citemet::render(series, format);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"citemet - journal and researcher citation indices"};
    app.require_subcommand(1);

    // validate
    auto* validate = app.add_subcommand("validate", "parse and cross-check the three data files");
    std::vector<std::string> validate_files;
    bool strict = false;
    validate->add_option("files", validate_files, "publications citations journals")->expected(0, 3);
    validate->add_flag("--strict", strict, "stop at the first issue");

    // journal
    auto* journal = app.add_subcommand("journal", "IF/AF report for one journal");
    std::vector<std::string> journal_files;
    std::string journal_id;
    int journal_year = 0;
    int journal_window = 2;
    journal->add_option("files", journal_files, "publications citations journals")->expected(0, 3);
    journal->add_option("--journal", journal_id, "journal id")->required();
    journal->add_option("--year", journal_year, "report year")->required();
    journal->add_option("--window", journal_window, "IF window in years")
        ->check(CLI::Range(1, 1000));

    // author
    auto* author = app.add_subcommand("author", "h/g/AsF report for one author");
    std::vector<std::string> author_files;
    std::string author_id;
    author->add_option("files", author_files, "publications citations journals")->expected(0, 3);
    author->add_option("--author", author_id, "author id")->required();

    // rank
    auto* rank = app.add_subcommand("rank", "ranked listing of journals or authors");
    std::vector<std::string> rank_files;
    std::string subjects;
    std::string rank_metric;
    std::optional<int> rank_year;
    int rank_window = 2;
    std::string rank_format = "plain_table";
    rank->add_option("files", rank_files, "publications citations journals")->expected(0, 3);
    rank->add_option("--subjects", subjects, "journals|authors")
        ->required()
        ->check(CLI::IsMember({"journals", "authors"}));
    rank->add_option("--metric", rank_metric, "if|af|h|g|asf")->required();
    rank->add_option("--year", rank_year, "report year (journals)");
    rank->add_option("--window", rank_window, "IF window in years")->check(CLI::Range(1, 1000));
    rank->add_option("--format", rank_format, "plain_table|csv")
        ->check(CLI::IsMember({"plain_table", "csv"}));

    // plotdata
    auto* plotdata = app.add_subcommand("plotdata", "curve data for the AF/AsF plots");
    std::string curve;
    std::vector<std::uint64_t> b_values;
    std::uint64_t a_max = 200;
    unsigned h_max = 100;
    std::string plot_format = "csv";
    plotdata->add_option("--curve", curve, "af|asf")
        ->required()
        ->check(CLI::IsMember({"af", "asf"}));
    plotdata->add_option("--b", b_values, "citable-item count (repeatable, af only)")
        ->check(CLI::PositiveNumber);
    plotdata->add_option("--a-max", a_max, "largest citation count sampled")
        ->check(CLI::PositiveNumber);
    plotdata->add_option("--h-max", h_max, "largest h sampled")->check(CLI::PositiveNumber);
    plotdata->add_option("--format", plot_format, "csv|plain_table")
        ->check(CLI::IsMember({"csv", "plain_table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "citemet: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(validate)) {
            auto paths = resolve_paths(validate_files);
            return paths ? run_validate(*paths, strict) : kExitUsage;
        }
        if (app.got_subcommand(journal)) {
            auto paths = resolve_paths(journal_files);
            return paths ? run_journal(*paths, journal_id, journal_year, journal_window)
                         : kExitUsage;
        }
        if (app.got_subcommand(author)) {
            auto paths = resolve_paths(author_files);
            return paths ? run_author(*paths, author_id) : kExitUsage;
        }
        if (app.got_subcommand(rank)) {
            auto paths = resolve_paths(rank_files);
            return paths ? run_rank(*paths, subjects, rank_metric, rank_year, rank_window,
                                    rank_format)
                         : kExitUsage;
        }
        if (app.got_subcommand(plotdata)) {
            return run_plotdata(curve, b_values, a_max, h_max, plot_format);
        }
    } catch (const std::exception& e) {
        std::cerr << "citemet: " << e.what() << "\n";
        return kExitDataError;
    }
    return kExitUsage;
}
