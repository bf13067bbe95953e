#include "tmlwb/ingest.hpp"

#include <expat.h>

#include <algorithm>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "tmlwb/point_algebra.hpp"
#include "tmlwb/text.hpp"

namespace tmlwb {

namespace {

constexpr std::array<std::string_view, 6> kSlinkTypes = {"MODAL",   "EVIDENTIAL",      "NEG_EVIDENTIAL",
                                                         "FACTIVE", "COUNTER_FACTIVE", "CONDITIONAL"};
constexpr std::array<std::string_view, 5> kAlinkTypes = {"INITIATES", "CULMINATES", "TERMINATES", "CONTINUES",
                                                         "REINITIATES"};

enum class SpanFamily { Event, Timex, Signal };

struct OpenSpan {
    SpanFamily family;
    std::size_t index;
    std::size_t begin;
};

struct ClosedSpan {
    SpanFamily family;
    std::size_t index;
    std::size_t begin;
    std::size_t end;
};

// Collects tags and character data from expat callbacks.
class TimemlBuilder {
public:
    explicit TimemlBuilder(std::string filename) { doc_.filename = std::move(filename); }

    void start(const char* name, const char** atts) {
        const std::string_view tag(name);
        breaks_.insert(text_.size());
        Attributes attrs;
        for (int i = 0; atts[i] != nullptr; i += 2) {
            attrs.push_back({atts[i], atts[i + 1]});
        }

        if (tag == "TEXT" && !text_begin_) {
            text_begin_ = text_.size();
            text_depth_ = depth_;
        } else if (tag == "EVENT") {
            start_event(std::move(attrs));
        } else if (tag == "TIMEX3") {
            start_timex(std::move(attrs));
        } else if (tag == "SIGNAL") {
            start_signal(std::move(attrs));
        } else if (tag == "MAKEINSTANCE") {
            add_instance(std::move(attrs));
        } else if (tag == "TLINK") {
            add_link(LinkKind::TLink, std::move(attrs));
        } else if (tag == "SLINK") {
            add_link(LinkKind::SLink, std::move(attrs));
        } else if (tag == "ALINK") {
            add_link(LinkKind::ALink, std::move(attrs));
        }
        ++depth_;
    }

    void end(const char* name) {
        const std::string_view tag(name);
        --depth_;
        breaks_.insert(text_.size());
        if (tag == "TEXT" && text_begin_ && !text_end_ && depth_ == text_depth_) {
            text_end_ = text_.size();
        }
        if (tag == "EVENT" || tag == "TIMEX3" || tag == "SIGNAL") {
            const SpanFamily family =
                tag == "EVENT" ? SpanFamily::Event : (tag == "TIMEX3" ? SpanFamily::Timex : SpanFamily::Signal);
            auto it = std::find_if(open_.rbegin(), open_.rend(), [&](const OpenSpan& s) { return s.family == family; });
            if (it != open_.rend()) {
                spans_.push_back({it->family, it->index, it->begin, text_.size()});
                open_.erase(std::next(it).base());
            }
        }
    }

    void characters(const char* s, int len) { text_.append(s, static_cast<std::size_t>(len)); }

    Document finish() {
        std::size_t body_begin = 0;
        std::size_t body_end = text_.size();
        if (text_begin_) {
            body_begin = *text_begin_;
            body_end = text_end_.value_or(text_.size());
        }
        const std::string_view body = std::string_view(text_).substr(body_begin, body_end - body_begin);
        std::set<std::size_t> body_breaks;
        for (std::size_t b : breaks_) {
            if (b > body_begin && b < body_end) {
                body_breaks.insert(b - body_begin);
            }
        }
        const auto tokens = tokenize_body(body, body_breaks);
        doc_.tokens.reserve(tokens.size());
        for (const auto& t : tokens) {
            doc_.tokens.push_back(t.token);
        }

        for (const auto& span : spans_) {
            TextExtent& extent = extent_of(span);
            extent.text = normalize_space(std::string_view(text_).substr(span.begin, span.end - span.begin));
            if (span.begin < body_begin || span.end > body_end) {
                continue;
            }
            const std::size_t b = span.begin - body_begin;
            const std::size_t e = span.end - body_begin;
            auto first = std::find_if(tokens.begin(), tokens.end(), [&](const BodyToken& t) { return t.end > b; });
            auto last = std::find_if(first, tokens.end(), [&](const BodyToken& t) { return t.begin >= e; });
            if (first != last) {
                extent.tokens = TokenRange{static_cast<std::size_t>(first - tokens.begin()),
                                           static_cast<std::size_t>(last - first)};
            }
        }
        check_references();
        return std::move(doc_);
    }

private:
    TextExtent& extent_of(const ClosedSpan& span) {
        switch (span.family) {
        case SpanFamily::Event:
            return doc_.events[span.index].extent;
        case SpanFamily::Timex:
            return doc_.timexes[span.index].extent;
        case SpanFamily::Signal:
            break;
        }
        return doc_.signals[span.index].extent;
    }

    bool claim_id(std::set<std::string>& seen, std::string_view tag, const std::optional<std::string_view>& id) {
        if (!id || id->empty()) {
            warn(std::string(tag) + " without an id ignored");
            return false;
        }
        if (!seen.insert(std::string(*id)).second) {
            warn("duplicate " + std::string(tag) + " id " + std::string(*id) + " ignored");
            return false;
        }
        return true;
    }

    void start_event(Attributes attrs) {
        const auto eid = find_attribute(attrs, "eid");
        if (!claim_id(event_ids_, "EVENT", eid)) {
            return;
        }
        Event ev;
        ev.eid = std::string(*eid);
        ev.event_class = std::string(find_attribute(attrs, "class").value_or(""));
        ev.attributes = std::move(attrs);
        open_.push_back({SpanFamily::Event, doc_.events.size(), text_.size()});
        doc_.events.push_back(std::move(ev));
    }

    void start_timex(Attributes attrs) {
        const auto tid = find_attribute(attrs, "tid");
        if (!claim_id(timex_ids_, "TIMEX3", tid)) {
            return;
        }
        Timex3 t;
        t.tid = std::string(*tid);
        t.attributes = std::move(attrs);
        open_.push_back({SpanFamily::Timex, doc_.timexes.size(), text_.size()});
        doc_.timexes.push_back(std::move(t));
    }

    void start_signal(Attributes attrs) {
        const auto sid = find_attribute(attrs, "sid");
        if (!claim_id(signal_ids_, "SIGNAL", sid)) {
            return;
        }
        Signal s;
        s.sid = std::string(*sid);
        s.attributes = std::move(attrs);
        open_.push_back({SpanFamily::Signal, doc_.signals.size(), text_.size()});
        doc_.signals.push_back(std::move(s));
    }

    void add_instance(Attributes attrs) {
        const auto eiid = find_attribute(attrs, "eiid");
        if (!claim_id(instance_ids_, "MAKEINSTANCE", eiid)) {
            return;
        }
        EventInstance inst;
        inst.eiid = std::string(*eiid);
        inst.event_id = std::string(find_attribute(attrs, "eventID").value_or(""));
        inst.attributes = std::move(attrs);
        doc_.instances.push_back(std::move(inst));
    }

    void add_link(LinkKind kind, Attributes attrs) {
        const std::string tag(to_string(kind));
        const auto lid = find_attribute(attrs, "lid");
        if (!claim_id(link_ids_, tag, lid)) {
            return;
        }
        Link link;
        link.kind = kind;
        link.lid = std::string(*lid);
        link.rel_type = to_upper(find_attribute(attrs, "relType").value_or(""));
        if (!valid_rel_type(kind, link.rel_type)) {
            warn(tag + " " + link.lid + " has unknown relType '" + link.rel_type + "'; link skipped");
            return;
        }

        std::set<std::string> consumed = {"lid", "relType", "signalID", "origin"};
        auto take_arg = [&](int position, std::initializer_list<std::pair<std::string_view, IntervalKind>> options,
                            IntervalRef& out, std::string& attr_name) {
            for (const auto& [name, interval] : options) {
                for (const auto& a : attrs) {
                    if (a.name == name && !a.value.empty()) {
                        out = IntervalRef{interval, a.value};
                        attr_name = a.name;
                        consumed.insert(a.name);
                        return true;
                    }
                }
            }
            warn(tag + " " + link.lid + " lacks argument " + std::to_string(position) + "; link skipped");
            return false;
        };

        bool ok = false;
        switch (kind) {
        case LinkKind::TLink:
            ok = take_arg(1, {{"eventInstanceID", IntervalKind::EventInstance}, {"timeID", IntervalKind::Timex}},
                          link.arg1, link.arg1_attribute) &&
                 take_arg(2,
                          {{"relatedToEventInstance", IntervalKind::EventInstance},
                           {"relatedToTime", IntervalKind::Timex}},
                          link.arg2, link.arg2_attribute);
            break;
        case LinkKind::SLink:
            ok = take_arg(1, {{"eventInstanceID", IntervalKind::EventInstance}}, link.arg1, link.arg1_attribute) &&
                 take_arg(2, {{"subordinatedEventInstance", IntervalKind::EventInstance}}, link.arg2,
                          link.arg2_attribute);
            break;
        case LinkKind::ALink:
            ok = take_arg(1, {{"eventInstanceID", IntervalKind::EventInstance}}, link.arg1, link.arg1_attribute) &&
                 take_arg(2, {{"relatedToEventInstance", IntervalKind::EventInstance}}, link.arg2,
                          link.arg2_attribute);
            break;
        }
        if (!ok) {
            return;
        }
        if (auto sid = find_attribute(attrs, "signalID"); sid && !sid->empty()) {
            link.signal_id = std::string(*sid);
        }
        if (auto origin = find_attribute(attrs, "origin")) {
            link.origin = std::string(*origin);
        }
        for (auto& a : attrs) {
            if (!consumed.contains(a.name)) {
                link.extra.push_back(std::move(a));
            }
        }
        doc_.links.push_back(std::move(link));
    }

    static bool valid_rel_type(LinkKind kind, std::string_view rel) {
        switch (kind) {
        case LinkKind::TLink:
            return parse_rel_type(rel).has_value();
        case LinkKind::SLink:
            return std::find(kSlinkTypes.begin(), kSlinkTypes.end(), rel) != kSlinkTypes.end();
        case LinkKind::ALink:
            return std::find(kAlinkTypes.begin(), kAlinkTypes.end(), rel) != kAlinkTypes.end();
        }
        return false;
    }

    void check_references() {
        for (const auto& inst : doc_.instances) {
            if (!doc_.find_event(inst.event_id)) {
                warn("MAKEINSTANCE " + inst.eiid + " refers to missing EVENT '" + inst.event_id + "'");
            }
            if (auto sid = find_attribute(inst.attributes, "signalID"); sid && !sid->empty() && !doc_.find_signal(*sid)) {
                warn("MAKEINSTANCE " + inst.eiid + " refers to missing SIGNAL " + std::string(*sid));
            }
        }
        for (const auto& link : doc_.links) {
            for (const IntervalRef* arg : {&link.arg1, &link.arg2}) {
                const bool found = arg->kind == IntervalKind::Timex ? doc_.find_timex(arg->id) != nullptr
                                                                    : doc_.find_instance(arg->id) != nullptr;
                if (!found) {
                    warn(std::string(to_string(link.kind)) + " " + link.lid + " refers to missing " +
                         (arg->kind == IntervalKind::Timex ? "TIMEX3 " : "MAKEINSTANCE ") + arg->id);
                }
            }
            if (link.signal_id && !doc_.find_signal(*link.signal_id)) {
                warn(std::string(to_string(link.kind)) + " " + link.lid + " refers to missing SIGNAL " +
                     *link.signal_id);
            }
        }
    }

    void warn(std::string message) { doc_.warnings.push_back(std::move(message)); }

    Document doc_;
    std::string text_;
    std::set<std::size_t> breaks_;
    std::optional<std::size_t> text_begin_;
    std::optional<std::size_t> text_end_;
    int depth_ = 0;
    int text_depth_ = 0;
    std::vector<OpenSpan> open_;
    std::vector<ClosedSpan> spans_;
    std::set<std::string> event_ids_;
    std::set<std::string> instance_ids_;
    std::set<std::string> timex_ids_;
    std::set<std::string> signal_ids_;
    std::set<std::string> link_ids_;
};

struct ParserDeleter {
    void operator()(XML_Parser p) const { XML_ParserFree(p); }
};

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path.filename().string() + ": cannot open file");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_xml(std::string_view content) {
    if (content.substr(0, 3) == "\xEF\xBB\xBF") {
        content.remove_prefix(3);
    }
    const auto first = content.find_first_not_of(" \t\r\n");
    return first != std::string_view::npos && content[first] == '<';
}

} // namespace

Document parse_timeml(std::string_view xml, std::string filename) {
    TimemlBuilder builder(filename);
    std::unique_ptr<std::remove_pointer_t<XML_Parser>, ParserDeleter> parser(XML_ParserCreate("UTF-8"));
    if (!parser) {
        throw ParseError(filename + ": cannot create XML parser");
    }
    XML_SetUserData(parser.get(), &builder);
    XML_SetElementHandler(
        parser.get(),
        [](void* data, const XML_Char* name, const XML_Char** atts) {
            static_cast<TimemlBuilder*>(data)->start(name, atts);
        },
        [](void* data, const XML_Char* name) { static_cast<TimemlBuilder*>(data)->end(name); });
    XML_SetCharacterDataHandler(parser.get(), [](void* data, const XML_Char* s, int len) {
        static_cast<TimemlBuilder*>(data)->characters(s, len);
    });
    if (XML_Parse(parser.get(), xml.data(), static_cast<int>(xml.size()), XML_TRUE) == XML_STATUS_ERROR) {
        std::ostringstream msg;
        msg << filename << ": line " << XML_GetCurrentLineNumber(parser.get()) << ": "
            << XML_ErrorString(XML_GetErrorCode(parser.get()));
        throw ParseError(msg.str());
    }
    return builder.finish();
}

Document parse_document(const std::filesystem::path& path) {
    return parse_timeml(read_file(path), path.filename().string());
}

TagObject parse_fragment(std::string_view xml) {
    Document doc = parse_timeml(xml, "<fragment>");
    const std::size_t count =
        doc.events.size() + doc.instances.size() + doc.timexes.size() + doc.signals.size() + doc.links.size();
    if (count != 1) {
        throw ParseError("fragment must contain exactly one TimeML tag, found " + std::to_string(count));
    }
    if (!doc.events.empty()) {
        return doc.events.front();
    }
    if (!doc.instances.empty()) {
        return doc.instances.front();
    }
    if (!doc.timexes.empty()) {
        return doc.timexes.front();
    }
    if (!doc.signals.empty()) {
        return doc.signals.front();
    }
    return doc.links.front();
}

std::string_view to_string(FoldName name) {
    switch (name) {
    case FoldName::None:
        return "none";
    case FoldName::Cavat:
        return "cavat";
    case FoldName::Sputlink:
        return "sputlink";
    case FoldName::Compact:
        return "compact";
    }
    return "none";
}

std::optional<FoldName> parse_fold_name(std::string_view text) {
    for (FoldName n : {FoldName::None, FoldName::Cavat, FoldName::Sputlink, FoldName::Compact}) {
        if (iequals(to_string(n), text)) {
            return n;
        }
    }
    return std::nullopt;
}

namespace {

bool rule_is_lossless(RelType original, const FoldRule& rule) {
    const IntervalRef a{IntervalKind::EventInstance, "a"};
    const IntervalRef b{IntervalKind::EventInstance, "b"};
    const auto before = relation_assertions(original, a, b);
    const auto after = rule.swap_args ? relation_assertions(rule.target, b, a) : relation_assertions(rule.target, a, b);
    return before == after;
}

FoldScheme make_scheme(FoldName name, std::map<RelType, FoldRule> mapping) {
    for (const auto& [original, rule] : mapping) {
        auto it = mapping.find(rule.target);
        if (it != mapping.end() && !(it->second.target == rule.target && !it->second.swap_args)) {
            throw Error("fold mapping is not idempotent: " + std::string(to_string(original)) + " folds to " +
                        std::string(to_string(rule.target)) + ", which is itself rewritten");
        }
    }
    FoldScheme scheme;
    scheme.name = name;
    scheme.mapping = std::move(mapping);
    scheme.lossless = std::all_of(scheme.mapping.begin(), scheme.mapping.end(),
                                  [](const auto& entry) { return rule_is_lossless(entry.first, entry.second); });
    return scheme;
}

} // namespace

FoldScheme FoldScheme::none() { return make_scheme(FoldName::None, {}); }

FoldScheme FoldScheme::cavat() {
    return make_scheme(FoldName::Cavat, {
                                            {RelType::After, {RelType::Before, true}},
                                            {RelType::IsIncluded, {RelType::Includes, true}},
                                            {RelType::IAfter, {RelType::IBefore, true}},
                                            {RelType::BegunBy, {RelType::Begins, true}},
                                            {RelType::EndedBy, {RelType::Ends, true}},
                                            {RelType::DuringInv, {RelType::Simultaneous, true}},
                                            {RelType::During, {RelType::Simultaneous, true}},
                                            // Symmetric, so a swap would only undo itself on a second pass.
                                            {RelType::Simultaneous, {RelType::Simultaneous, false}},
                                        });
}

FoldScheme FoldScheme::compact() {
    return make_scheme(FoldName::Compact, {
                                              {RelType::After, {RelType::Before, true}},
                                              {RelType::IBefore, {RelType::Before, false}},
                                              {RelType::IAfter, {RelType::Before, true}},
                                              {RelType::IsIncluded, {RelType::Includes, true}},
                                              {RelType::Begins, {RelType::Includes, true}},
                                              {RelType::BegunBy, {RelType::Includes, false}},
                                              {RelType::Ends, {RelType::Includes, true}},
                                              {RelType::EndedBy, {RelType::Includes, false}},
                                              {RelType::During, {RelType::Simultaneous, false}},
                                              {RelType::DuringInv, {RelType::Simultaneous, false}},
                                              {RelType::Identity, {RelType::Simultaneous, false}},
                                          });
}

FoldScheme FoldScheme::from_mapping_text(FoldName name, std::string_view text) {
    std::map<RelType, FoldRule> mapping;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (normalize_space(line).empty()) {
            continue;
        }
        std::vector<std::string> fields;
        std::istringstream cols(line);
        std::string col;
        while (std::getline(cols, col, '\t')) {
            fields.push_back(normalize_space(col));
        }
        const auto where = "fold mapping line " + std::to_string(line_no) + ": ";
        if (fields.size() != 3) {
            throw Error(where + "expected ORIGINAL<TAB>TARGET<TAB>swap|noswap");
        }
        const auto original = parse_rel_type(fields[0]);
        const auto target = parse_rel_type(fields[1]);
        if (!original || !target) {
            throw Error(where + "unknown relation type");
        }
        if (!iequals(fields[2], "swap") && !iequals(fields[2], "noswap")) {
            throw Error(where + "third column must be 'swap' or 'noswap'");
        }
        if (!mapping.emplace(*original, FoldRule{*target, iequals(fields[2], "swap")}).second) {
            throw Error(where + "relation " + fields[0] + " mapped twice");
        }
    }
    return make_scheme(name, std::move(mapping));
}

FoldScheme FoldScheme::from_mapping_file(FoldName name, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot read fold mapping file " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_mapping_text(name, ss.str());
}

Link fold_link(Link link, const FoldScheme& scheme) {
    const auto rel = link.temporal_relation();
    if (!rel) {
        return link;
    }
    auto it = scheme.mapping.find(*rel);
    if (it == scheme.mapping.end()) {
        return link;
    }
    link.rel_type = std::string(to_string(it->second.target));
    if (it->second.swap_args) {
        std::swap(link.arg1, link.arg2);
        link.arg1_attribute = default_arg_attribute(link.kind, 1, link.arg1.kind);
        link.arg2_attribute = default_arg_attribute(link.kind, 2, link.arg2.kind);
    }
    return link;
}

Document apply_fold(Document doc, const FoldScheme& scheme) {
    for (auto& link : doc.links) {
        link = fold_link(std::move(link), scheme);
    }
    return doc;
}

ImportResult import_corpus(const std::filesystem::path& directory, const std::string& name, const FoldScheme& fold) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(directory, ec)) {
        throw Error("not a directory: " + directory.string());
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(directory)) {
        if (entry.is_regular_file()) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });

    ImportResult result;
    result.corpus.name = name;
    for (const auto& path : files) {
        const std::string filename = path.filename().string();
        std::string content;
        try {
            content = read_file(path);
        } catch (const ParseError& e) {
            result.issues.push_back({filename, e.what(), true});
            continue;
        }
        if (!looks_like_xml(content)) {
            result.issues.push_back({filename, "not an XML file; skipped", false});
            continue;
        }
        try {
            Document doc = parse_timeml(content, filename);
            doc.doc_id = static_cast<int>(result.corpus.documents.size()) + 1;
            result.corpus.documents.push_back(apply_fold(std::move(doc), fold));
        } catch (const ParseError& e) {
            result.issues.push_back({filename, e.what(), true});
        }
    }
    if (result.corpus.documents.empty()) {
        throw Error("no parseable TimeML files in " + directory.string());
    }
    const std::size_t skipped = result.issues.size();
    result.corpus.note = "fold=" + std::string(to_string(fold.name)) + "; source=" + directory.string() +
                         "; documents=" + std::to_string(result.corpus.documents.size()) +
                         "; skipped=" + std::to_string(skipped);
    return result;
}

} // namespace tmlwb
