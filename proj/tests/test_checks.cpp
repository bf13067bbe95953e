#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "support/support.hpp"
#include "tmlwb/checks.hpp"
#include "tmlwb/ingest.hpp"
#include "tmlwb/store.hpp"

using namespace tmlwb;
using namespace tmlwb::test;

namespace {

const Corpus& corpus() {
    static const Corpus c = import_corpus(fixture_dir(), "fx", FoldScheme::none()).corpus;
    return c;
}

CheckRun run(const std::string& name, CheckTargets targets, const Document* browsed = nullptr) {
    static const CheckRegistry registry = CheckRegistry::with_builtins();
    return run_check(registry, corpus(), name, targets, browsed);
}

} // namespace

TEST(Registry, Builtins) {
    const auto list = CheckRegistry::with_builtins().list_checks();
    ASSERT_EQ(list.size(), 4u);
    EXPECT_EQ(list[0].name, "consistent");
    EXPECT_EQ(list[1].name, "orphans");
    EXPECT_EQ(list[2].name, "split_graph");
    EXPECT_EQ(list[3].name, "tlink_loop");
    for (const auto& d : list) {
        EXPECT_EQ(d.version, "1");
        EXPECT_FALSE(d.description.empty());
    }
}

TEST(Registry, RegisterAtRunTime) {
    CheckRegistry registry = CheckRegistry::with_builtins();
    registry.register_check({"alink_count", "2", "ALINK counter"}, [](const Document& d, const Corpus&) {
        std::size_t n = 0;
        for (const auto& l : d.links) {
            n += l.kind == LinkKind::ALink ? 1 : 0;
        }
        return std::vector<CheckFinding>{
            {"alink_count", d.filename, d.doc_id, Severity::Info, {}, std::to_string(n) + " ALINKs"}};
    });
    const auto list = registry.list_checks();
    ASSERT_EQ(list.size(), 5u);
    EXPECT_EQ(list[0].name, "alink_count");
    EXPECT_THROW(registry.register_check({"orphans", "9", "again"}, {}), Error);
    EXPECT_THROW(registry.register_check({"", "1", "nameless"}, {}), Error);

    const CheckRun r = run_check(registry, corpus(), "alink_count", {false, {"consistent.tml"}}, nullptr);
    ASSERT_EQ(r.all_findings().size(), 1u);
    EXPECT_EQ(r.all_findings()[0].message, "1 ALINKs");
}

TEST(Registry, UnknownCheckNamesAvailable) {
    try {
        run("orphan", {true, {}});
        FAIL();
    } catch (const Error& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("unknown check 'orphan'"), std::string::npos);
        EXPECT_NE(msg.find("orphans"), std::string::npos);
    }
}

TEST(Runner, TargetsResolvedBeforeRunning) {
    EXPECT_THROW(run("orphans", {false, {"orphans.tml", "nope.tml"}}), Error);
    EXPECT_THROW(run("orphans", {false, {}}), Error);
    const CheckRun browsed = run("orphans", {false, {}}, corpus().find_document(8));
    ASSERT_EQ(browsed.documents.size(), 1u);
    EXPECT_EQ(browsed.count(Severity::Error), 5u);
}

TEST(Runner, AllEqualsConcatenationOfSingles) {
    for (const auto& d : CheckRegistry::with_builtins().list_checks()) {
        const CheckRun all = run(d.name, {true, {}});
        std::vector<CheckFinding> joined;
        for (const auto& doc : corpus().documents) {
            const auto one = run(d.name, {false, {std::to_string(doc.doc_id)}}).all_findings();
            joined.insert(joined.end(), one.begin(), one.end());
        }
        EXPECT_EQ(all.all_findings(), joined) << d.name;
        EXPECT_EQ(all.documents.size(), corpus().documents.size());
    }
}

TEST(Runner, ChecksDoNotModifyCorpus) {
    Corpus copy = corpus();
    const auto before = corpus_fingerprint(copy);
    CheckRegistry registry = CheckRegistry::with_builtins();
    for (const auto& d : registry.list_checks()) {
        run_check(registry, copy, d.name, {true, {}}, nullptr);
    }
    EXPECT_EQ(corpus_fingerprint(copy), before);
}

TEST(Runner, ConsistencyVerdicts) {
    const CheckRun r = run("consistent", {true, {}});
    EXPECT_EQ(r.count(Severity::Error), 3u);
    EXPECT_EQ(r.count(Severity::Info), 6u);
    for (const auto& d : r.documents) {
        ASSERT_EQ(d.findings.size(), 1u);
        const bool bad = d.doc->filename.rfind("inconsistent_", 0) == 0;
        EXPECT_EQ(d.findings[0].severity, bad ? Severity::Error : Severity::Info) << d.doc->filename;
        EXPECT_EQ(d.findings[0].message.rfind(bad ? "! Inconsistent closure - could not assert (" : "Consistent closure (", 0), 0u);
    }
}

TEST(Format, TextLayout) {
    const CheckRun r = run("tlink_loop", {false, {"eventid_loop.tml"}});
    EXPECT_EQ(format_check_run(r, FindingFormat::Text),
              "# TLINK loop checker v1 loaded\n"
              "# Checking eventid_loop.tml (id 3)\n"
              "TLINK ID l23 may be a loop (eventID match), type INCLUDES, event ei286 / ei288 - check document "
              "manually\n"
              "# Done: 1 document checked; 0 errors, 1 warnings, 0 info\n");
}

TEST(Format, JsonLines) {
    const CheckRun r = run("orphans", {true, {}});
    const std::string out = format_check_run(r, FindingFormat::JsonLines);
    std::istringstream in(out);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        const auto j = nlohmann::json::parse(line);
        EXPECT_EQ(j.at("check"), "orphans");
        EXPECT_EQ(j.at("severity"), "ERROR");
        EXPECT_TRUE(j.at("doc_id").is_number_integer());
        EXPECT_TRUE(j.at("document").is_string());
        EXPECT_TRUE(j.at("subjects").is_array());
        EXPECT_TRUE(j.at("message").is_string());
        ++n;
    }
    EXPECT_EQ(n, r.all_findings().size());
    EXPECT_EQ(n, 5u);
}
