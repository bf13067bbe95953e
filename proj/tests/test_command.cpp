#include <gtest/gtest.h>

#include "support/support.hpp"
#include "tmlwb/command.hpp"

using namespace tmlwb;

namespace {

ShowCommand show(std::string_view line) { return std::get<ShowCommand>(parse_command(line)); }

std::size_t error_column(std::string_view line) {
    try {
        parse_command(line);
    } catch (const SyntaxError& e) {
        return e.column();
    }
    return 0;
}

std::string error_text(std::string_view line) {
    try {
        parse_command(line);
    } catch (const SyntaxError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST(Command, ReferenceCommandsParse) {
    for (const char* line : {
             "show distribution of tlink reltype where signalid is not filled",
             "show state of tlink signalid",
             "show distribution of tlink signaltext as tex",
             "show distribution of event pos where tense is past by document",
             "show list of event text where pos is other",
             "show distribution of event class by sentence as csv",
             "show distribution of event lemma min-freq 2",
             "browse doc 3",
             "browse tlink l23 as timeml",
             "browse event e30",
             "check split_graph in 3",
             "check consistent in all",
             "check list",
             "check tlink_loop in wsj_0927.tml 4",
             "corpus import /data/timebank as timebank fold cavat",
             "corpus list",
             "corpus use timebank",
             "corpus info",
             "corpus delete timebank",
             "context l23",
             "help show",
             "exit",
         }) {
        EXPECT_NO_THROW(parse_command(line)) << line;
    }
}

TEST(Command, ShowClauses) {
    const ShowCommand c = show("show distribution of tlink reltype where signalid is not filled");
    EXPECT_EQ(c.query.report, ReportKind::Distribution);
    EXPECT_EQ(c.query.tag, TagFamily::TLink);
    EXPECT_EQ(c.query.field, "reltype");
    ASSERT_TRUE(c.query.filter);
    EXPECT_EQ(c.query.filter->field, "signalid");
    EXPECT_EQ(c.query.filter->predicate, Predicate::Unfilled);

    const ShowCommand any_order = show("SHOW state OF tlink signalid as csv by sentence min-freq 4");
    EXPECT_EQ(any_order.query.format, OutputFormat::Csv);
    EXPECT_EQ(any_order.query.granularity, Granularity::Sentence);
    EXPECT_EQ(any_order.query.min_freq, std::optional<std::size_t>(4));

    EXPECT_EQ(show("show list of tlink reltype where signalid is empty").query.filter->predicate, Predicate::Unfilled);
    EXPECT_EQ(show("show list of tlink reltype where signalid is filled").query.filter->predicate, Predicate::Filled);
    EXPECT_EQ(show("show list of tlink reltype where signalid is unfilled").query.filter->predicate,
              Predicate::Unfilled);
    EXPECT_EQ(show("show list of tlink reltype where reltype is not before").query.filter->predicate, Predicate::IsNot);
}

TEST(Command, MultiWordFilterValue) {
    const ShowCommand c = show("show list of tlink reltype where signaltext is prior to as csv");
    EXPECT_EQ(c.query.filter->value, "prior to");
    EXPECT_EQ(c.query.format, OutputFormat::Csv);
    EXPECT_EQ(show("show list of tlink reltype where signaltext is \"as\"").query.filter->value, "as");
}

TEST(Command, CorpusImportOptions) {
    const auto c = std::get<CorpusImport>(parse_command("corpus import \"/data/my corpus\" fold compact as tb"));
    EXPECT_EQ(c.directory, "/data/my corpus");
    EXPECT_EQ(c.name, std::optional<std::string>("tb"));
    EXPECT_EQ(c.fold, FoldName::Compact);
    EXPECT_EQ(std::get<CorpusImport>(parse_command("corpus import dir")).fold, FoldName::None);
}

TEST(Command, CheckTargets) {
    const auto c = std::get<CheckCommand>(parse_command("check orphans in 3 wsj_0006.tml"));
    EXPECT_EQ(c.targets, (std::vector<std::string>{"3", "wsj_0006.tml"}));
    EXPECT_FALSE(c.all);
    EXPECT_TRUE(std::get<CheckCommand>(parse_command("check orphans in all")).all);
    EXPECT_TRUE(std::get<CheckCommand>(parse_command("check orphans")).targets.empty());
}

TEST(Command, ErrorsPointAtTheProblem) {
    EXPECT_EQ(error_column("show of tlink reltype"), 6u);
    EXPECT_NE(error_text("show of tlink reltype").find("report type"), std::string::npos);
    EXPECT_EQ(error_column("show distribution of tlinks reltype"), 22u);
    EXPECT_EQ(error_column("show distribution of tlink reltype as pdf"), 39u);
    EXPECT_EQ(error_column("show distribution of tlink"), 27u);
    EXPECT_EQ(error_column("show distribution of tlink reltype min-freq 0"), 45u);
    EXPECT_EQ(error_column("corpus import"), 14u);
    EXPECT_EQ(error_column("browse tlink"), 13u);
    EXPECT_EQ(error_column("check orphans in"), 17u);
    EXPECT_EQ(error_column("show list of tlink reltype where signalid is \"x"), 46u);
    EXPECT_NE(error_text("show list of tlink reltype as csv as tex").find("unexpected 'as'"), std::string::npos);
}

TEST(Command, ErrorsCarryUsage) {
    const std::string msg = error_text("show distribution tlink reltype");
    EXPECT_NE(msg.find("syntax error at column 19"), std::string::npos);
    EXPECT_NE(msg.find("usage: show"), std::string::npos);
}

TEST(Command, UnknownCommandSuggestion) {
    const std::string msg = error_text("shwo state of tlink signalid");
    EXPECT_NE(msg.find("did you mean 'show'?"), std::string::npos);
    EXPECT_EQ(error_column("shwo state of tlink signalid"), 1u);
    EXPECT_NE(error_text("chekc list").find("'check'"), std::string::npos);
}

TEST(Command, Splitting) {
    EXPECT_EQ(split_commands("corpus list; corpus info\n\n# note\nshow list of signal text where text is \"a;b\""),
              (std::vector<std::string>{"corpus list", "corpus info",
                                        "show list of signal text where text is \"a;b\""}));
    EXPECT_TRUE(is_blank_command("   "));
    EXPECT_TRUE(is_blank_command("  # comment"));
    EXPECT_FALSE(is_blank_command("exit"));
    EXPECT_TRUE(std::holds_alternative<ExitCommand>(parse_command("quit")));
}

TEST(Command, RoundTripEquality) {
    EXPECT_EQ(parse_command("browse tlink l23 as timeml"), parse_command("BROWSE TLINK l23 AS TIMEML"));
    EXPECT_NE(parse_command("browse tlink l23"), parse_command("browse tlink l24"));
}
