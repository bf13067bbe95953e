#include "tmlwb/fixtures.hpp"

#include <fstream>

#include "tmlwb/model.hpp"

namespace tmlwb {

namespace {

std::string ev(const std::string& eid, const std::string& cls, const std::string& text) {
    return "<EVENT eid=\"" + eid + "\" class=\"" + cls + "\">" + text + "</EVENT>";
}

std::string tx(const std::string& tid, const std::string& type, const std::string& value, const std::string& text) {
    return "<TIMEX3 tid=\"" + tid + "\" type=\"" + type + "\" value=\"" + value +
           "\" temporalFunction=\"false\" functionInDocument=\"NONE\">" + text + "</TIMEX3>";
}

std::string sg(const std::string& sid, const std::string& text) {
    return "<SIGNAL sid=\"" + sid + "\">" + text + "</SIGNAL>";
}

std::string mk(const std::string& eiid, const std::string& eid, const std::string& tense, const std::string& pos,
               const std::string& extra = "") {
    return "<MAKEINSTANCE eventID=\"" + eid + "\" eiid=\"" + eiid + "\" tense=\"" + tense +
           "\" aspect=\"NONE\" polarity=\"POS\" pos=\"" + pos + "\"" + extra + "/>";
}

std::string arg(const std::string& id, bool first) {
    const bool timex = id.rfind("t", 0) == 0;
    if (first) {
        return (timex ? "timeID=\"" : "eventInstanceID=\"") + id + "\"";
    }
    return (timex ? "relatedToTime=\"" : "relatedToEventInstance=\"") + id + "\"";
}

std::string tl(const std::string& lid, const std::string& rel, const std::string& a, const std::string& b,
               const std::string& signal = "") {
    std::string out = "<TLINK lid=\"" + lid + "\" relType=\"" + rel + "\" " + arg(a, true) + " " + arg(b, false);
    if (!signal.empty()) {
        out += " signalID=\"" + signal + "\"";
    }
    return out + "/>";
}

struct Fixture {
    std::string docid;
    bool dct = true;
    std::string body;
    std::vector<std::string> tags;

    std::string render() const {
        std::string out = "<?xml version=\"1.0\" ?>\n<TimeML>\n<DOCID>" + docid + "</DOCID>\n";
        if (dct) {
            out += "<DCT><TIMEX3 tid=\"t0\" type=\"DATE\" value=\"1998-03-04\" temporalFunction=\"false\" "
                   "functionInDocument=\"CREATION_TIME\">1998-03-04</TIMEX3></DCT>\n";
        }
        out += "<TEXT>\n" + body + "\n</TEXT>\n";
        for (const auto& t : tags) {
            out += t + "\n";
        }
        return out + "</TimeML>\n";
    }
};

Fixture all_relations() {
    const char* verbs[] = {"opened", "closed", "paused", "lasted", "started",
                           "finished", "matched", "equaled", "overlapped", "spanned"};
    Fixture f{"all_relations", false, "", {}};
    for (int i = 0; i < 10; ++i) {
        const std::string n = std::to_string(i + 1);
        f.body += (i ? "\n" : "") + std::string("Market ") + static_cast<char>('A' + i) + " " +
                  ev("e" + n, "OCCURRENCE", verbs[i]) + " today.";
        f.tags.push_back(mk("ei" + n, "e" + n, "PAST", "VERB"));
    }
    // A(0,10) B(20,30) C(10,20) D(0,30) E(0,5) F(5,10); G..J equal to A.
    const char* links[][3] = {
        {"BEFORE", "ei1", "ei2"},       {"AFTER", "ei2", "ei1"},   {"IBEFORE", "ei1", "ei3"},
        {"IAFTER", "ei3", "ei1"},       {"INCLUDES", "ei4", "ei3"}, {"IS_INCLUDED", "ei3", "ei4"},
        {"BEGINS", "ei5", "ei1"},       {"BEGUN_BY", "ei1", "ei5"}, {"ENDS", "ei6", "ei1"},
        {"ENDED_BY", "ei1", "ei6"},     {"SIMULTANEOUS", "ei7", "ei1"}, {"IDENTITY", "ei8", "ei1"},
        {"DURING", "ei9", "ei1"},       {"DURING_INV", "ei10", "ei1"},
    };
    int lid = 1;
    for (const auto& l : links) {
        f.tags.push_back(tl("l" + std::to_string(lid++), l[0], l[1], l[2]));
    }
    return f;
}

std::vector<Fixture> fixtures() {
    std::vector<Fixture> out;

    out.push_back({"consistent",
                   true,
                   "John " + ev("e1", "OCCURRENCE", "arrived") + " " + sg("s1", "before") + " the " +
                       ev("e4", "OCCURRENCE", "meeting") + " " + ev("e2", "ASPECTUAL", "started") + ".\nHe " +
                       ev("e3", "OCCURRENCE", "left") + " on " + tx("t1", "DATE", "1998-03-06", "Friday") +
                       " and " + ev("e5", "I_ACTION", "promised") + " to " + ev("e6", "OCCURRENCE", "return") + ".",
                   {mk("ei1", "e1", "PAST", "VERB"), mk("ei2", "e2", "PAST", "VERB"),
                    mk("ei3", "e3", "PAST", "VERB"), mk("ei4", "e4", "NONE", "NOUN"),
                    mk("ei5", "e5", "PAST", "VERB"), mk("ei6", "e6", "INFINITIVE", "VERB"),
                    tl("l1", "BEFORE", "ei1", "ei2", "s1"), tl("l2", "IS_INCLUDED", "ei3", "t1"),
                    tl("l3", "BEFORE", "ei2", "ei3"), tl("l4", "AFTER", "t1", "t0"), tl("l5", "BEGINS", "ei2", "ei4"),
                    "<SLINK lid=\"l6\" relType=\"MODAL\" eventInstanceID=\"ei5\" subordinatedEventInstance=\"ei6\"/>",
                    "<ALINK lid=\"l7\" relType=\"INITIATES\" eventInstanceID=\"ei2\" "
                    "relatedToEventInstance=\"ei4\"/>"}});

    out.push_back({"inconsistent_direct",
                   true,
                   "Prices " + ev("e1", "OCCURRENCE", "rose") + " after the company " +
                       ev("e2", "OCCURRENCE", "announced") + " the merger.",
                   {mk("ei1", "e1", "PAST", "VERB"), mk("ei2", "e2", "PAST", "VERB"),
                    tl("l1", "BEFORE", "ei1", "ei2"), tl("l2", "INCLUDES", "ei2", "ei1"),
                    tl("l3", "IS_INCLUDED", "ei1", "t0")}});

    out.push_back({"inconsistent_inferred",
                   true,
                   "The talks " + ev("e1", "OCCURRENCE", "began") + " as the envoys " +
                       ev("e2", "OCCURRENCE", "arrived") + ", " + sg("s1", "then") + " " +
                       ev("e3", "OCCURRENCE", "collapsed") + ".",
                   {mk("ei1", "e1", "PAST", "VERB"), mk("ei2", "e2", "PAST", "VERB"),
                    mk("ei3", "e3", "PAST", "VERB"), tl("l1", "SIMULTANEOUS", "ei1", "ei2"),
                    tl("l2", "BEFORE", "ei2", "ei3", "s1"), tl("l3", "BEFORE", "ei3", "ei1"),
                    tl("l4", "BEFORE", "ei1", "t0")}});

    // Two separate equalities joined only through `<`: no single derived
    // ordering touches an equal pair until x = y, y < z => x < z applies.
    out.push_back({"inconsistent_substitution",
                   true,
                   "The strike " + ev("e1", "OCCURRENCE", "began") + " when the union " +
                       ev("e2", "OCCURRENCE", "voted") + ".\nThe plant " + ev("e3", "OCCURRENCE", "closed") +
                       " as the owners " + ev("e4", "OCCURRENCE", "withdrew") + ".",
                   {mk("ei1", "e1", "PAST", "VERB"), mk("ei2", "e2", "PAST", "VERB"),
                    mk("ei3", "e3", "PAST", "VERB"), mk("ei4", "e4", "PAST", "VERB"),
                    tl("l1", "SIMULTANEOUS", "ei1", "ei2"), tl("l2", "SIMULTANEOUS", "ei3", "ei4"),
                    tl("l3", "BEFORE", "ei1", "ei3"), tl("l4", "BEFORE", "ei4", "ei2"),
                    tl("l5", "BEFORE", "ei1", "t0")}});

    out.push_back({"identity_loop",
                   true,
                   "Officials " + ev("e1", "REPORTING", "said") + " the deal was " +
                       ev("e2", "OCCURRENCE", "signed") + " on " + tx("t1", "DATE", "1998-03-02", "Monday") + ".",
                   {mk("ei1", "e1", "PAST", "VERB"), mk("ei2", "e2", "PAST", "VERB"),
                    tl("l1", "IDENTITY", "ei1", "ei1"), tl("l2", "IS_INCLUDED", "ei2", "t1"),
                    tl("l3", "BEFORE", "ei2", "ei1"), tl("l4", "IS_INCLUDED", "ei1", "t0"),
                    tl("l5", "BEFORE", "t1", "t0")}});

    out.push_back({"eventid_loop",
                   true,
                   "So far some two hundred and thirty four Americans have " + ev("e30", "OCCURRENCE", "flown") +
                       " in space, twenty six of them women.",
                   {mk("ei286", "e30", "PRESENT", "VERB", " cardinality=\"234\""),
                    mk("ei288", "e30", "PRESENT", "VERB", " cardinality=\"26\""),
                    tl("l23", "INCLUDES", "ei286", "ei288"), tl("l24", "BEFORE", "ei286", "t0")}});

    out.push_back({"orphans",
                   true,
                   "The board " + ev("e1", "OCCURRENCE", "met") + " on " + tx("t1", "DATE", "1998-03-03", "Tuesday") +
                       " and " + ev("e2", "OCCURRENCE", "approved") + " the plan " + sg("s1", "after") + " a " +
                       ev("e3", "OCCURRENCE", "review") + " " + sg("s2", "during") + " " +
                       tx("t2", "DATE", "1997-SP", "the spring") + ", " + ev("e4", "OCCURRENCE", "citing") +
                       " costs.",
                   {mk("ei1", "e1", "PAST", "VERB"), mk("ei2", "e2", "PAST", "VERB"),
                    mk("ei3", "e3", "NONE", "NOUN"), mk("ei9", "e99", "PAST", "OTHER"),
                    tl("l1", "IS_INCLUDED", "ei1", "t1"), tl("l2", "AFTER", "ei2", "ei1", "s1"),
                    tl("l3", "BEFORE", "ei9", "ei2"), tl("l4", "BEFORE", "t1", "t0")}});

    out.push_back({"split_graph",
                   false,
                   "Shares " + ev("e1", "OCCURRENCE", "fell") + " and bonds " + ev("e2", "OCCURRENCE", "rallied") +
                       ".\nLater, rates " + ev("e3", "OCCURRENCE", "rose") + " and the dollar " +
                       ev("e4", "OCCURRENCE", "slipped") + ".",
                   {mk("ei1", "e1", "PAST", "VERB"), mk("ei2", "e2", "PAST", "VERB"),
                    mk("ei3", "e3", "PAST", "VERB"), mk("ei4", "e4", "PAST", "VERB"),
                    tl("l1", "SIMULTANEOUS", "ei1", "ei2"), tl("l2", "BEFORE", "ei3", "ei4")}});

    out.push_back(all_relations());
    return out;
}

} // namespace

std::map<std::string, std::string> fixture_files() {
    std::map<std::string, std::string> files;
    for (const auto& f : fixtures()) {
        files[f.docid + ".tml"] = f.render();
    }
    return files;
}

std::vector<std::filesystem::path> generate_fixtures(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    for (const auto& [name, content] : fixture_files()) {
        const auto path = dir / name;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << content;
        if (!out) {
            throw Error("cannot write " + path.string());
        }
        written.push_back(path);
    }
    return written;
}

} // namespace tmlwb
