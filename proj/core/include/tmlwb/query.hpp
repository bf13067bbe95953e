#pragma once

// The `show` report family: list, distribution and state reports over one
// tag family, with an optional `where` filter and derived fields.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tmlwb/model.hpp"

namespace tmlwb {

enum class ReportKind { List, Distribution, State };
enum class TagFamily { Event, Instance, Timex3, Signal, TLink, SLink, ALink };
enum class OutputFormat { Screen, Csv, Tex };
enum class Granularity { Corpus, Document, Sentence };
enum class Predicate { Is, IsNot, Filled, Unfilled };

std::string_view to_string(TagFamily tag);
std::optional<TagFamily> parse_tag_family(std::string_view text);

struct Filter {
    std::string field;
    Predicate predicate = Predicate::Is;
    std::string value;

    bool operator==(const Filter&) const = default;
};

struct Query {
    ReportKind report = ReportKind::Distribution;
    TagFamily tag = TagFamily::TLink;
    std::string field;
    std::optional<Filter> filter;
    OutputFormat format = OutputFormat::Screen;
    Granularity granularity = Granularity::Corpus;
    // Rows below this frequency are merged into one "Other" row.
    std::optional<std::size_t> min_freq;

    bool operator==(const Query&) const = default;
};

// Fields accepted for `tag`: TimeML attributes, derived fields, and any
// attribute actually present on that tag somewhere in `corpus`.
std::vector<std::string> valid_fields(TagFamily tag, const Corpus& corpus);

// Throws QueryError naming the valid fields when the query does not fit.
void validate_query(const Query& query, const Corpus& corpus);

// One tag occurrence a report counts. For event queries that touch a
// MAKEINSTANCE attribute the occurrences are the event instances.
struct Occurrence {
    const Document* doc = nullptr;
    TagFamily subject = TagFamily::Event;
    std::size_t index = 0;
};

std::vector<Occurrence> collect_occurrences(const Corpus& corpus, const Query& query);

// Value of `field` on an occurrence; empty values count as absent.
std::optional<std::string> resolve_field(const Occurrence& occurrence, std::string_view field);

// Sentence index of the occurrence (links use their first argument).
std::optional<int> occurrence_sentence(const Occurrence& occurrence);

// IS compares case-insensitively; IS NOT is its exact complement, so an
// absent value passes `is not`. FILLED tests for a non-empty value.
bool filter_matches(const std::optional<std::string>& value, const Filter& filter);
std::vector<Occurrence> apply_filter(std::vector<Occurrence> occurrences, const Filter& filter);

struct ReportRow {
    std::string value;
    std::size_t frequency = 0;
    double proportion = 0.0;
};

struct DistributionSection {
    std::string group;
    std::vector<ReportRow> rows;
    std::size_t total = 0;
};

struct StateSection {
    std::string group;
    std::size_t filled = 0;
    std::size_t unfilled = 0;
};

struct ListSection {
    std::string group;
    std::vector<std::string> values;
};

struct DistributionReport {
    Query query;
    std::vector<DistributionSection> sections;
};

struct StateReport {
    Query query;
    std::vector<StateSection> sections;
};

struct ListReport {
    Query query;
    std::vector<ListSection> sections;
};

using Report = std::variant<DistributionReport, StateReport, ListReport>;

// Rows sorted by frequency (descending), then value; an "Other" row from
// min-freq folding comes last.
DistributionReport report_distribution(const Corpus& corpus, const Query& query);
StateReport report_state(const Corpus& corpus, const Query& query);
// Distinct values in lexicographic order.
ListReport report_list(const Corpus& corpus, const Query& query);
Report run_query(const Corpus& corpus, const Query& query);

// Percentage with three significant digits: 0.219 -> "21.9%".
std::string format_percent(double fraction);

// "Distribution of Tlink reltype where signalid is not filled"
std::string report_title(const Query& query);

std::string format_report(const Report& report, OutputFormat format);

} // namespace tmlwb
