#include <gtest/gtest.h>

#include "support/support.hpp"
#include "tmlwb/ingest.hpp"
#include "tmlwb/query.hpp"

using namespace tmlwb;
using namespace tmlwb::test;

namespace {

const Corpus& corpus() {
    static const Corpus c = import_corpus(fixture_dir(), "fx", FoldScheme::none()).corpus;
    return c;
}

Query q(ReportKind report, TagFamily tag, std::string field, OutputFormat format = OutputFormat::Screen) {
    Query query;
    query.report = report;
    query.tag = tag;
    query.field = std::move(field);
    query.format = format;
    return query;
}

std::string render(const Query& query) { return format_report(run_query(corpus(), query), query.format); }

std::string golden(const std::string& name) { return read_file(golden_dir() / name); }

std::size_t total(const DistributionReport& r) {
    std::size_t n = 0;
    for (const auto& s : r.sections) {
        n += s.total;
    }
    return n;
}

std::size_t filled(const StateReport& r) {
    std::size_t n = 0;
    for (const auto& s : r.sections) {
        n += s.filled;
    }
    return n;
}

} // namespace

TEST(QueryGolden, TlinkReltypeCsv) {
    EXPECT_EQ(render(q(ReportKind::Distribution, TagFamily::TLink, "reltype", OutputFormat::Csv)),
              golden("tlink_reltype.csv"));
}

TEST(QueryGolden, TlinkReltypeScreen) {
    EXPECT_EQ(render(q(ReportKind::Distribution, TagFamily::TLink, "reltype")), golden("tlink_reltype.txt"));
}

TEST(QueryGolden, SignalStateCsv) {
    EXPECT_EQ(render(q(ReportKind::State, TagFamily::TLink, "signalid", OutputFormat::Csv)),
              golden("tlink_signalid_state.csv"));
}

TEST(QueryGolden, EventPosByDocument) {
    Query query = q(ReportKind::Distribution, TagFamily::Event, "pos", OutputFormat::Csv);
    query.granularity = Granularity::Document;
    EXPECT_EQ(render(query), golden("event_pos_by_document.csv"));
}

TEST(QueryGolden, TimexValueList) {
    EXPECT_EQ(render(q(ReportKind::List, TagFamily::Timex3, "value", OutputFormat::Csv)),
              golden("timex3_value_list.csv"));
}

TEST(QueryGolden, MinFreqAndInstanceFilter) {
    Query query = q(ReportKind::Distribution, TagFamily::Event, "class");
    query.filter = Filter{"pos", Predicate::Is, "verb"};
    query.min_freq = 3;
    EXPECT_EQ(render(query), golden("event_class_verb_min3.txt"));
}

TEST(QueryFormat, StateScreen) {
    EXPECT_EQ(render(q(ReportKind::State, TagFamily::TLink, "signalid")),
              "  Count  State of Tlink signalid\n"
              " ===========================================\n"
              "      3  signalid filled   (6.82%)\n"
              "     41  signalid unfilled (93.2%)\n");
}

TEST(QueryFormat, TexTable) {
    Query query = q(ReportKind::Distribution, TagFamily::Event, "pos", OutputFormat::Tex);
    EXPECT_EQ(render(query),
              "\\begin{table}\n"
              "\\begin{center}\n"
              "\\caption{Distribution of Event pos}\n"
              "\\label{tab:Eventpos-Frequency-Proportion-distribution}\n"
              "\\begin{tabular}{ | l | r | r | r | }\n"
              "\\hline\n"
              "\\textbf{Event pos} & \\textbf{Frequency} & \\textbf{Proportion} \\\\\n"
              "\\hline\n"
              "VERB & 34 & 91.9\\% \\\\\n"
              "NOUN & 2 & 5.41\\% \\\\\n"
              "OTHER & 1 & 2.70\\% \\\\\n"
              "\\hline\n"
              "Total & 37 &  \\\\\n"
              "\\hline\n"
              "\\end{tabular}\n"
              "\\end{center}\n"
              "\\end{table}\n");
}

TEST(QueryFormat, TexEscapesUnderscores) {
    const std::string tex = render(q(ReportKind::Distribution, TagFamily::TLink, "reltype", OutputFormat::Tex));
    EXPECT_NE(tex.find("IS\\_INCLUDED & 6 & 13.6\\% \\\\"), std::string::npos);
}

TEST(QueryFormat, Percentages) {
    EXPECT_EQ(format_percent(0.219), "21.9%");
    EXPECT_EQ(format_percent(0.0907), "9.07%");
    EXPECT_EQ(format_percent(0.00353), "0.353%");
    EXPECT_EQ(format_percent(0.000156), "0.0156%");
    EXPECT_EQ(format_percent(0.5), "50.0%");
    EXPECT_EQ(format_percent(1.0), "100%");
    EXPECT_EQ(format_percent(0.0), "0.00%");
}

TEST(QueryFormat, Titles) {
    Query query = q(ReportKind::State, TagFamily::TLink, "signalid");
    EXPECT_EQ(report_title(query), "State of Tlink signalid");
    query.report = ReportKind::Distribution;
    query.field = "reltype";
    query.filter = Filter{"signalid", Predicate::Unfilled, ""};
    EXPECT_EQ(report_title(query), "Distribution of Tlink reltype where signalid is not filled");
}

TEST(QuerySemantics, FilterAndNegationPartition) {
    const Query base = q(ReportKind::Distribution, TagFamily::TLink, "reltype");
    const std::size_t all = total(report_distribution(corpus(), base));
    for (const char* value : {"BEFORE", "before", "IDENTITY", "nothing"}) {
        Query pos = base, neg = base;
        pos.filter = Filter{"reltype", Predicate::Is, value};
        neg.filter = Filter{"reltype", Predicate::IsNot, value};
        EXPECT_EQ(total(report_distribution(corpus(), pos)) + total(report_distribution(corpus(), neg)), all) << value;
    }
    Query before = base;
    before.filter = Filter{"reltype", Predicate::Is, "before"};
    EXPECT_EQ(total(report_distribution(corpus(), before)), 16u);
}

TEST(QuerySemantics, IsNotPassesAbsentValues) {
    Query query = q(ReportKind::Distribution, TagFamily::TLink, "reltype");
    query.filter = Filter{"signalid", Predicate::IsNot, "s1"};
    EXPECT_EQ(total(report_distribution(corpus(), query)), 44u - 3u);
    query.filter = Filter{"signalid", Predicate::Filled, ""};
    EXPECT_EQ(total(report_distribution(corpus(), query)), 3u);
    query.filter = Filter{"signalid", Predicate::Unfilled, ""};
    EXPECT_EQ(total(report_distribution(corpus(), query)), 41u);
}

TEST(QuerySemantics, DistributionTotalEqualsFilledCount) {
    struct Field {
        TagFamily tag;
        const char* name;
    };
    const std::vector<Field> fields = {
        {TagFamily::TLink, "reltype"},   {TagFamily::TLink, "signalid"}, {TagFamily::TLink, "signaltext"},
        {TagFamily::TLink, "arg1"},      {TagFamily::Event, "pos"},      {TagFamily::Event, "class"},
        {TagFamily::Event, "text"},      {TagFamily::Event, "lemma"},    {TagFamily::Event, "tense"},
        {TagFamily::Instance, "tense"},  {TagFamily::Timex3, "value"},   {TagFamily::Timex3, "type"},
        {TagFamily::Signal, "text"},     {TagFamily::SLink, "reltype"},  {TagFamily::ALink, "reltype"},
        {TagFamily::Timex3, "functionInDocument"}, {TagFamily::Event, "sentence"},
    };
    const std::vector<std::optional<Filter>> filters = {
        std::nullopt,
        Filter{"signalid", Predicate::Filled, ""},
        Filter{"pos", Predicate::Is, "VERB"},
        Filter{"pos", Predicate::IsNot, "VERB"},
        Filter{"type", Predicate::Is, "DATE"},
        Filter{"reltype", Predicate::IsNot, "before"},
    };
    std::mt19937 rng(42);
    int checked = 0;
    for (int attempt = 0; checked < 100 && attempt < 2000; ++attempt) {
        const Field f = fields[rng() % fields.size()];
        Query query = q(ReportKind::Distribution, f.tag, f.name);
        query.filter = filters[rng() % filters.size()];
        query.granularity = static_cast<Granularity>(rng() % 3);
        try {
            validate_query(query, corpus());
        } catch (const QueryError&) {
            continue;
        }
        Query state = query;
        state.report = ReportKind::State;
        ASSERT_EQ(total(report_distribution(corpus(), query)), filled(report_state(corpus(), state)))
            << report_title(query);
        ++checked;
    }
    EXPECT_EQ(checked, 100);
}

TEST(QuerySemantics, DerivedEventFields) {
    Query query = q(ReportKind::List, TagFamily::Event, "lemma");
    const auto list = report_list(corpus(), query);
    ASSERT_EQ(list.sections.size(), 1u);
    const auto& v = list.sections[0].values;
    for (const char* lemma : {"open", "start", "finish", "match"}) {
        EXPECT_NE(std::find(v.begin(), v.end(), lemma), v.end()) << lemma;
    }
}

TEST(QuerySemantics, SentenceGranularity) {
    Query query = q(ReportKind::Distribution, TagFamily::Event, "pos");
    query.granularity = Granularity::Sentence;
    const auto r = report_distribution(corpus(), query);
    EXPECT_EQ(total(r), 37u);
    EXPECT_GT(r.sections.size(), 9u);
}

TEST(QueryErrors, UnknownFieldListsValidOnes) {
    Query query = q(ReportKind::Distribution, TagFamily::TLink, "colour");
    try {
        validate_query(query, corpus());
        FAIL();
    } catch (const QueryError& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("colour"), std::string::npos);
        EXPECT_NE(msg.find("relType"), std::string::npos);
    }
    EXPECT_THROW(run_query(corpus(), query), QueryError);
    query.field = "reltype";
    query.filter = Filter{"nope", Predicate::Is, "x"};
    EXPECT_THROW(run_query(corpus(), query), QueryError);
}

TEST(QueryErrors, EmptyCorpusGivesEmptyReport) {
    Corpus empty;
    empty.name = "empty";
    const auto r = report_distribution(empty, q(ReportKind::Distribution, TagFamily::TLink, "reltype"));
    EXPECT_EQ(total(r), 0u);
}
