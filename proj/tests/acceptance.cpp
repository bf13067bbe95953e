// Prints one PASS/FAIL/SKIP line per acceptance criterion; exits non-zero
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "support/support.hpp"
#include "tmlwb/browse.hpp"
#include "tmlwb/checks.hpp"
#include "tmlwb/command.hpp"
#include "tmlwb/graph_checks.hpp"
#include "tmlwb/ingest.hpp"
#include "tmlwb/point_algebra.hpp"
#include "tmlwb/query.hpp"
#include "tmlwb/store.hpp"

using namespace tmlwb;
using namespace tmlwb::test;

namespace {

enum class Status { Pass, Fail, Skip };

struct Outcome {
    Status status = Status::Pass;
    std::string detail;
};

Outcome fail(std::string why) { return {Status::Fail, std::move(why)}; }
Outcome pass(std::string detail = {}) { return {Status::Pass, std::move(detail)}; }

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

const Corpus& fixtures() {
    static const Corpus c = import_corpus(fixture_dir(), "fx", FoldScheme::none()).corpus;
    return c;
}

Outcome entropy() {
    const SubgraphReport r =
        subgraph_stats({2, 2, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 35}, {1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 43});
    if (std::abs(r.entropy - 0.448277644573) > 1e-9) {
        return fail("entropy " + fixed(r.entropy, 12));
    }
    const auto lines = format_subgraph_report(r);
    if (lines.size() < 3 || lines[2] != "Mean graph size 5.3 nodes; largest subgraph (size 35) has 50.7% of all nodes") {
        return fail("mean/largest line: " + (lines.size() > 2 ? lines[2] : std::string("missing")));
    }
    return pass("entropy " + fixed(r.entropy, 12) + ", mean 5.3, largest 50.7%");
}

Outcome point_mapping() {
    int rows = 0;
    for (RelType rel : kAllRelTypes) {
        if (raw(tlink_to_assertions(tlink("l", rel, ei("a"), ei("b")))) != expected_points(rel, "a", "b")) {
            return fail(std::string(to_string(rel)) + " differs");
        }
        ++rows;
    }
    return rows == 14 ? pass("14 rows") : fail(std::to_string(rows) + " rows");
}

Outcome oracle() {
    std::mt19937 rng(1234);
    const auto start = std::chrono::steady_clock::now();
    int inconsistent = 0;
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
        const auto links = random_links(rng, 8, 12);
        const bool expected = oracle_consistent(links);
        inconsistent += expected ? 0 : 1;
        if (check_consistency(links).consistent != expected) {
            return fail("disagreement on case " + std::to_string(i));
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 10.0) {
        return fail("took " + fixed(secs, 2) + " s");
    }
    return pass(std::to_string(n) + " documents (" + std::to_string(inconsistent) + " inconsistent) in " +
                fixed(secs, 2) + " s");
}

Outcome inconsistency_example() {
    if (check_consistency({tlink("l1", RelType::Before, ei("A"), ei("B")),
                           tlink("l2", RelType::Includes, ei("B"), ei("A"))})
            .consistent) {
        return fail("A BEFORE B, B INCLUDES A judged consistent");
    }
    const Document loop = doc_with_links({tlink("l1", RelType::Identity, ei("A"), ei("A"))});
    if (!check_consistency(loop).consistent) {
        return fail("A IDENTITY A judged inconsistent");
    }
    if (check_tlink_loop(loop).size() != 1) {
        return fail("A IDENTITY A not flagged by tlink_loop");
    }
    return pass();
}

Outcome folds() {
    const FoldScheme cavat = FoldScheme::cavat();
    if (cavat.mapping.size() != 8) {
        return fail("CAVAT table has " + std::to_string(cavat.mapping.size()) + " rows");
    }
    for (const auto& [rel, rule] : cavat.mapping) {
        const Link original = tlink("l", rel, ei("a"), tx("t"));
        if (tlink_to_assertions(fold_link(original, cavat)) != tlink_to_assertions(original)) {
            return fail(std::string(to_string(rel)) + " changes point assertions");
        }
    }
    for (const auto& d : fixtures().documents) {
        const Document once = apply_fold(d, cavat);
        if (apply_fold(once, cavat) != once) {
            return fail("CAVAT fold not idempotent on " + d.filename);
        }
    }
    Corpus rel;
    rel.name = "rel";
    rel.documents.push_back(apply_fold(*fixtures().find_document("all_relations.tml"), FoldScheme::compact()));
    Query q;
    q.report = ReportKind::List;
    q.tag = TagFamily::TLink;
    q.field = "reltype";
    const auto values = report_list(rel, q).sections.at(0).values;
    if (values.size() != 3) {
        return fail("compact fold leaves " + std::to_string(values.size()) + " relation types");
    }
    return pass("8 rows lossless, idempotent, compact -> " + values[0] + "/" + values[1] + "/" + values[2]);
}

Outcome loop_formats() {
    const auto direct = check_tlink_loop(*fixtures().find_document("identity_loop.tml"));
    const auto shared = check_tlink_loop(*fixtures().find_document("eventid_loop.tml"));
    if (direct.size() != 1 || direct[0].severity != Severity::Error ||
        direct[0].message.find("loops directly (instanceID match)") == std::string::npos) {
        return fail("direct loop finding wrong");
    }
    if (shared.size() != 1 || shared[0].severity != Severity::Warning ||
        shared[0].message.find("may be a loop (eventID match)") == std::string::npos) {
        return fail("eventID loop finding wrong");
    }
    return pass();
}

Outcome orphans() {
    const auto found = check_orphans(*fixtures().find_document("orphans.tml"));
    const auto clean = check_orphans(*fixtures().find_document("consistent.tml"));
    if (found.size() != 5) {
        return fail(std::to_string(found.size()) + " findings on the orphan fixture");
    }
    std::set<std::string> kinds;
    for (const auto& f : found) {
        kinds.insert(f.message.substr(0, f.message.find(' ')) + (f.message.find("missing") != std::string::npos ? "*" : ""));
    }
    if (kinds.size() != 5) {
        return fail("findings do not cover five distinct cases");
    }
    return clean.empty() ? pass() : fail(std::to_string(clean.size()) + " findings on the clean fixture");
}

Outcome reports() {
    struct Golden {
        const char* file;
        const char* command;
    };
    const Golden goldens[] = {
        {"tlink_reltype.csv", "show distribution of tlink reltype as csv"},
        {"tlink_reltype.txt", "show distribution of tlink reltype"},
        {"tlink_signalid_state.csv", "show state of tlink signalid as csv"},
        {"event_pos_by_document.csv", "show distribution of event pos by document as csv"},
        {"timex3_value_list.csv", "show list of timex3 value as csv"},
        {"event_class_verb_min3.txt", "show distribution of event class where pos is verb min-freq 3"},
    };
    for (const auto& g : goldens) {
        const Query q = std::get<ShowCommand>(parse_command(g.command)).query;
        if (format_report(run_query(fixtures(), q), q.format) != read_file(golden_dir() / g.file)) {
            return fail(std::string("output differs from ") + g.file);
        }
    }
    if (format_percent(0.219) != "21.9%" || format_percent(0.0907) != "9.07%" || format_percent(0.00353) != "0.353%") {
        return fail("percent formatting");
    }
    const char* fields[][2] = {{"tlink", "reltype"}, {"tlink", "signaltext"}, {"event", "pos"},   {"event", "class"},
                               {"event", "tense"},   {"timex3", "value"},     {"signal", "text"}, {"event", "lemma"}};
    const char* filters[] = {"", " where signalid is filled", " where pos is verb", " where pos is not verb",
                             " where type is date"};
    const char* grains[] = {"", " by document", " by sentence"};
    std::mt19937 rng(8);
    int checked = 0;
    for (int attempt = 0; checked < 100 && attempt < 2000; ++attempt) {
        const auto& f = fields[rng() % std::size(fields)];
        const std::string tail = std::string(f[0]) + " " + f[1] + filters[rng() % std::size(filters)] +
                                 grains[rng() % std::size(grains)];
        Query dist = std::get<ShowCommand>(parse_command("show distribution of " + tail)).query;
        Query state = std::get<ShowCommand>(parse_command("show state of " + tail)).query;
        try {
            validate_query(dist, fixtures());
        } catch (const QueryError&) {
            continue;
        }
        std::size_t total = 0, filled = 0;
        for (const auto& s : report_distribution(fixtures(), dist).sections) total += s.total;
        for (const auto& s : report_state(fixtures(), state).sections) filled += s.filled;
        if (total != filled) {
            return fail("total " + std::to_string(total) + " != filled " + std::to_string(filled) + " for " + tail);
        }
        ++checked;
    }
    if (checked < 100) {
        return fail("only " + std::to_string(checked) + " valid random queries generated");
    }
    return pass("6 golden files; total = filled on " + std::to_string(checked) + " random queries");
}

Outcome round_trips() {
    TempDir ws;
    Store store(ws.path());
    store.save_corpus(fixtures());
    if (store.load_corpus("fx") != fixtures()) {
        return fail("corpus changed across save/load");
    }
    std::size_t tags = 0;
    for (const auto& d : fixtures().documents) {
        std::vector<TagObject> all;
        for (const auto& x : d.events) all.emplace_back(x);
        for (const auto& x : d.instances) all.emplace_back(x);
        for (const auto& x : d.timexes) all.emplace_back(x);
        for (const auto& x : d.signals) all.emplace_back(x);
        for (const auto& x : d.links) all.emplace_back(x);
        for (const auto& t : all) {
            if (!equivalent(parse_fragment(serialize_tag(t)), t)) {
                return fail("tag does not round-trip in " + d.filename + ": " + serialize_tag(t));
            }
            ++tags;
        }
    }
    return pass(std::to_string(tags) + " tags");
}

std::vector<std::pair<std::string, std::size_t>> distribution(const Corpus& c, const std::string& command) {
    const Query q = std::get<ShowCommand>(parse_command(command)).query;
    std::vector<std::pair<std::string, std::size_t>> rows;
    const DistributionReport report = report_distribution(c, q);
    for (const auto& r : report.sections.at(0).rows) {
        rows.emplace_back(r.value, r.frequency);
    }
    return rows;
}

Outcome timebank() {
    const char* dir = std::getenv("TIMEBANK_DIR");
    if (!dir || !*dir) {
        return {Status::Skip, "TIMEBANK_DIR not set"};
    }
    const auto start = std::chrono::steady_clock::now();
    const Corpus tb = import_corpus(dir, "timebank", FoldScheme::none()).corpus;
    const std::vector<std::pair<std::string, std::size_t>> table3 = {
        {"BEFORE", 1408}, {"IS_INCLUDED", 1357}, {"AFTER", 897}, {"IDENTITY", 743}, {"SIMULTANEOUS", 671},
        {"INCLUDES", 582}, {"DURING", 302},      {"ENDED_BY", 177}, {"ENDS", 76},   {"BEGUN_BY", 70},
        {"BEGINS", 61},   {"IAFTER", 39},        {"IBEFORE", 34}, {"DURING_INV", 1}};
    if (distribution(tb, "show distribution of tlink reltype") != table3) {
        return fail("tlink reltype distribution differs from the reference table");
    }
    const Query sq = std::get<ShowCommand>(parse_command("show state of tlink signalid")).query;
    const auto state = report_state(tb, sq).sections.at(0);
    if (state.filled != 718 || state.unfilled != 5700) {
        return fail("signalid state " + std::to_string(state.filled) + "/" + std::to_string(state.unfilled));
    }
    const std::vector<std::pair<std::string, std::size_t>> table4 = {
        {"VERB", 5122}, {"NOUN", 2225}, {"OTHER", 299}, {"ADJECTIVE", 266}, {"PREPOSITION", 28}};
    if (distribution(tb, "show distribution of event pos") != table4) {
        return fail("event pos distribution differs from the reference table");
    }
    const CheckRegistry registry = CheckRegistry::with_builtins();
    const CheckRun loops = run_check(registry, tb, "tlink_loop", {true, {}}, nullptr);
    std::size_t documents = 0, equal_type = 0;
    for (const auto& d : loops.documents) {
        documents += d.findings.empty() ? 0 : 1;
    }
    const auto all = loops.all_findings();
    for (const auto& f : all) {
        const Link* l = nullptr;
        for (const auto& d : loops.documents) {
            if (d.doc->doc_id == f.doc_id) l = d.doc->find_link(f.subjects.at(0));
        }
        equal_type += l && (l->rel_type == "SIMULTANEOUS" || l->rel_type == "IDENTITY") ? 1 : 0;
    }
    if (all.size() != 26 || documents != 19 || equal_type != 10) {
        return fail("tlink_loop: " + std::to_string(all.size()) + " loops in " + std::to_string(documents) +
                    " documents, " + std::to_string(equal_type) + " SIMULTANEOUS/IDENTITY");
    }
    run_check(registry, tb, "consistent", {true, {}}, nullptr);
    run_check(registry, tb, "split_graph", {true, {}}, nullptr);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60.0) {
        return fail("corpus-wide run took " + fixed(secs, 1) + " s");
    }
    return pass(std::to_string(tb.documents.size()) + " documents in " + fixed(secs, 1) + " s");
}

Outcome grammar() {
    const char* commands[] = {
        "check list",
        "check consistent in 3",
        "check split_graph in 3",
        "check tlink_loop in 165 159 143",
        "check orphans in wsj_0927.tml",
        "check tlink_loop in WSJ910225-0066.tml",
        "check tlink_loop in all",
        "corpus list",
        "corpus use timebank",
        "corpus info",
        "corpus import /data/timeml",
        "show distribution of tlink reltype as tex",
        "show state of tlink signalid where reltype is after",
        "show distribution of tlink reltype where signalid is not filled",
        "show state of tlink signalid",
        "show distribution of event pos",
        "show list of event text where pos is other",
        "show distribution of tlink signaltext where reltype is before",
        "browse doc wsj_0927.tml",
        "browse doc 3",
    };
    for (const char* c : commands) {
        try {
            parse_command(c);
        } catch (const std::exception& e) {
            return fail(std::string(c) + ": " + e.what());
        }
    }
    return pass(std::to_string(std::size(commands)) + " commands");
}

} // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"entropy reproduction", entropy},
        {"point-mapping fidelity", point_mapping},
        {"oracle equivalence", oracle},
        {"inconsistency example", inconsistency_example},
        {"fold correctness", folds},
        {"loop check formats", loop_formats},
        {"orphans", orphans},
        {"report engine", reports},
        {"round-trips", round_trips},
        {"reference corpus figures", timebank},
        {"grammar coverage", grammar},
    };
    int failures = 0;
    int n = 0;
    for (const auto& [name, run] : criteria) {
        ++n;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        const char* tag = o.status == Status::Pass ? "PASS" : o.status == Status::Fail ? "FAIL" : "SKIP";
        failures += o.status == Status::Fail ? 1 : 0;
        std::cout << tag << "  criterion " << n << ": " << name << (o.detail.empty() ? "" : " - ") << o.detail << "\n";
    }
    return failures == 0 ? 0 : 1;
}
