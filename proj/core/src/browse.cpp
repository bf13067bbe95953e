#include "tmlwb/browse.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace tmlwb {

namespace {

std::size_t edit_distance(std::string_view a, std::string_view b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) {
        row[j] = j;
    }
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            const bool same = std::tolower(static_cast<unsigned char>(a[i - 1])) ==
                              std::tolower(static_cast<unsigned char>(b[j - 1]));
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (same ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

bool name_less(const Attribute& a, const Attribute& b) {
    const std::string la = to_lower(a.name);
    const std::string lb = to_lower(b.name);
    return la != lb ? la < lb : a.name < b.name;
}

// Puts `front` (in that order) ahead of the remaining attributes, which are
// sorted by name.
Attributes ordered(Attributes attrs, const std::vector<std::string>& front) {
    Attributes head;
    for (const auto& name : front) {
        auto it = std::find_if(attrs.begin(), attrs.end(), [&](const Attribute& a) { return a.name == name; });
        if (it != attrs.end()) {
            head.push_back(*it);
            attrs.erase(it);
        }
    }
    std::stable_sort(attrs.begin(), attrs.end(), name_less);
    head.insert(head.end(), attrs.begin(), attrs.end());
    return head;
}

void set_attribute(Attributes& attrs, const std::string& name, const std::string& value) {
    for (auto& a : attrs) {
        if (a.name == name) {
            a.value = value;
            return;
        }
    }
    attrs.push_back({name, value});
}

std::string xml_escape(std::string_view text, bool attribute) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += attribute ? "&quot;" : "\"";
            break;
        default:
            out += c;
        }
    }
    return out;
}

std::string csv_field(std::string_view v) {
    if (v.find_first_of(",\"\n") == std::string_view::npos) {
        return std::string(v);
    }
    std::string out = "\"";
    for (char c : v) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string_view element_name(const TagObject& tag) {
    switch (tag.index()) {
    case 0:
        return "EVENT";
    case 1:
        return "MAKEINSTANCE";
    case 2:
        return "TIMEX3";
    case 3:
        return "SIGNAL";
    default:
        return to_string(std::get<Link>(tag).kind);
    }
}

const TextExtent* extent_of(const TagObject& tag) {
    if (const auto* e = std::get_if<Event>(&tag)) {
        return &e->extent;
    }
    if (const auto* t = std::get_if<Timex3>(&tag)) {
        return &t->extent;
    }
    if (const auto* s = std::get_if<Signal>(&tag)) {
        return &s->extent;
    }
    return nullptr;
}

std::string tag_id(const TagObject& tag) {
    return std::visit(
        [](const auto& t) -> std::string {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, Event>) {
                return t.eid;
            } else if constexpr (std::is_same_v<T, EventInstance>) {
                return t.eiid;
            } else if constexpr (std::is_same_v<T, Timex3>) {
                return t.tid;
            } else if constexpr (std::is_same_v<T, Signal>) {
                return t.sid;
            } else {
                return t.lid;
            }
        },
        tag);
}

bool same_attributes(Attributes a, Attributes b) {
    std::sort(a.begin(), a.end(), name_less);
    std::sort(b.begin(), b.end(), name_less);
    return a == b;
}

std::string describe_interval(const Document& doc, const IntervalRef& ref) {
    const auto text = doc.interval_text(ref);
    if (!text) {
        return ref.id + " (unresolved)";
    }
    return ref.id + " \"" + *text + "\"";
}

std::string instance_summary(const EventInstance& inst) {
    std::string out = "MAKEINSTANCE " + inst.eiid;
    for (const auto& a : canonical_attributes(inst)) {
        if (a.name != "eiid") {
            out += " " + a.name + "=" + a.value;
        }
    }
    return out;
}

} // namespace

std::vector<std::string> nearest_filenames(const Corpus& corpus, std::string_view key, std::size_t limit) {
    std::vector<std::pair<std::size_t, std::string>> scored;
    for (const auto& d : corpus.documents) {
        scored.emplace_back(edit_distance(key, d.filename), d.filename);
    }
    std::sort(scored.begin(), scored.end());
    std::vector<std::string> out;
    for (std::size_t i = 0; i < scored.size() && i < limit; ++i) {
        out.push_back(scored[i].second);
    }
    return out;
}

const Document& select_document(const Corpus& corpus, std::string_view key) {
    int id = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), id);
    if (ec == std::errc() && ptr == key.data() + key.size()) {
        if (const Document* d = corpus.find_document(id)) {
            return *d;
        }
    }
    if (const Document* d = corpus.find_document(key)) {
        return *d;
    }
    std::string message = "no document '" + std::string(key) + "' in corpus " + corpus.name;
    const auto near = nearest_filenames(corpus, key);
    if (!near.empty()) {
        message += "; nearest filenames:";
        for (const auto& n : near) {
            message += " " + n;
        }
    }
    throw Error(message);
}

TagObject find_tag(const Document& doc, TagFamily tag, std::string_view id) {
    auto missing = [&]() {
        return Error("no " + std::string(to_string(tag)) + " '" + std::string(id) + "' in " + doc.filename);
    };
    switch (tag) {
    case TagFamily::Event:
        if (const Event* e = doc.find_event(id)) {
            return *e;
        }
        break;
    case TagFamily::Instance:
        if (const EventInstance* i = doc.find_instance(id)) {
            return *i;
        }
        break;
    case TagFamily::Timex3:
        if (const Timex3* t = doc.find_timex(id)) {
            return *t;
        }
        break;
    case TagFamily::Signal:
        if (const Signal* s = doc.find_signal(id)) {
            return *s;
        }
        break;
    case TagFamily::TLink:
    case TagFamily::SLink:
    case TagFamily::ALink: {
        const Link* l = doc.find_link(id);
        const LinkKind want = tag == TagFamily::TLink   ? LinkKind::TLink
                              : tag == TagFamily::SLink ? LinkKind::SLink
                                                        : LinkKind::ALink;
        if (l && l->kind == want) {
            return *l;
        }
        break;
    }
    }
    throw missing();
}

Attributes canonical_attributes(const TagObject& tag) {
    return std::visit(
        [](const auto& t) -> Attributes {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, Event>) {
                Attributes a = t.attributes;
                set_attribute(a, "eid", t.eid);
                if (!t.event_class.empty()) {
                    set_attribute(a, "class", t.event_class);
                }
                return ordered(std::move(a), {"eid"});
            } else if constexpr (std::is_same_v<T, EventInstance>) {
                Attributes a = t.attributes;
                set_attribute(a, "eiid", t.eiid);
                if (!t.event_id.empty()) {
                    set_attribute(a, "eventID", t.event_id);
                }
                return ordered(std::move(a), {"eiid"});
            } else if constexpr (std::is_same_v<T, Timex3>) {
                Attributes a = t.attributes;
                set_attribute(a, "tid", t.tid);
                return ordered(std::move(a), {"tid"});
            } else if constexpr (std::is_same_v<T, Signal>) {
                Attributes a = t.attributes;
                set_attribute(a, "sid", t.sid);
                return ordered(std::move(a), {"sid"});
            } else {
                Attributes a = t.extra;
                a.push_back({"lid", t.lid});
                a.push_back({"relType", t.rel_type});
                a.push_back({t.arg1_attribute, t.arg1.id});
                a.push_back({t.arg2_attribute, t.arg2.id});
                if (t.signal_id) {
                    a.push_back({"signalID", *t.signal_id});
                }
                if (t.origin) {
                    a.push_back({"origin", *t.origin});
                }
                return ordered(std::move(a), {"lid", "relType", t.arg1_attribute, t.arg2_attribute});
            }
        },
        tag);
}

std::string serialize_tag(const TagObject& tag) {
    std::string out = "<" + std::string(element_name(tag));
    for (const auto& a : canonical_attributes(tag)) {
        out += " " + a.name + "=\"" + xml_escape(a.value, true) + "\"";
    }
    if (const TextExtent* extent = extent_of(tag)) {
        out += ">" + xml_escape(extent->text, false) + "</" + std::string(element_name(tag)) + ">";
    } else {
        out += "/>";
    }
    return out;
}

bool equivalent(const TagObject& a, const TagObject& b) {
    if (a.index() != b.index()) {
        return false;
    }
    if (!same_attributes(canonical_attributes(a), canonical_attributes(b))) {
        return false;
    }
    const TextExtent* ea = extent_of(a);
    const TextExtent* eb = extent_of(b);
    if (ea && eb && ea->text != eb->text) {
        return false;
    }
    if (const auto* la = std::get_if<Link>(&a)) {
        const Link& lb = std::get<Link>(b);
        return la->kind == lb.kind && la->arg1 == lb.arg1 && la->arg2 == lb.arg2;
    }
    return true;
}

std::string browse_tag(const Document& doc, TagFamily family, std::string_view id, BrowseFormat format) {
    const TagObject tag = find_tag(doc, family, id);
    if (format == BrowseFormat::Timeml) {
        return serialize_tag(tag) + "\n";
    }
    Attributes attrs = canonical_attributes(tag);
    const TextExtent* extent = extent_of(tag);
    if (format == BrowseFormat::Csv) {
        std::string names;
        std::string values;
        for (const auto& a : attrs) {
            names += (names.empty() ? "" : ",") + csv_field(a.name);
            values += (values.empty() ? "" : ",") + csv_field(a.value);
        }
        if (extent) {
            names += ",text";
            values += "," + csv_field(extent->text);
        }
        return names + "\n" + values + "\n";
    }

    std::ostringstream out;
    out << element_name(tag) << " " << tag_id(tag) << " in " << doc.filename << "\n";
    std::size_t width = 0;
    for (const auto& a : attrs) {
        width = std::max(width, a.name.size());
    }
    for (const auto& a : attrs) {
        out << "  " << a.name << std::string(width - a.name.size() + 2, ' ') << a.value << "\n";
    }
    if (extent) {
        out << "  text: " << extent->text << "\n";
        if (auto pos = doc.position_of(*extent)) {
            out << "  position: sentence " << pos->sentence << ", word " << pos->word << "\n";
        } else {
            out << "  position: outside document body\n";
        }
    }
    if (const auto* ev = std::get_if<Event>(&tag)) {
        std::size_t n = 0;
        for (const auto& inst : doc.instances) {
            if (inst.event_id == ev->eid) {
                out << "  " << instance_summary(inst) << "\n";
                ++n;
            }
        }
        if (n == 0) {
            out << "  (no MAKEINSTANCE for this event)\n";
        }
    } else if (const auto* inst = std::get_if<EventInstance>(&tag)) {
        if (const Event* ev = doc.find_event(inst->event_id)) {
            out << "  event: " << ev->eid << " \"" << ev->extent.text << "\"\n";
        } else {
            out << "  event: " << inst->event_id << " (unresolved)\n";
        }
    } else if (const auto* link = std::get_if<Link>(&tag)) {
        out << "  arg1: " << describe_interval(doc, link->arg1) << "\n";
        out << "  arg2: " << describe_interval(doc, link->arg2) << "\n";
        if (link->signal_id) {
            const auto text = link_signal_text(doc, *link);
            out << "  signal text: " << (text ? *text : *link->signal_id + " (unresolved)") << "\n";
        }
    }
    return out.str();
}

std::string show_link_context(const Document& doc, std::string_view lid) {
    const Link* link = doc.find_link(lid);
    if (!link) {
        throw Error("no link '" + std::string(lid) + "' in " + doc.filename);
    }
    std::ostringstream out;
    out << to_string(link->kind) << " " << link->lid << ": " << link->arg1.id << " " << link->rel_type << " "
        << link->arg2.id;
    if (auto text = link_signal_text(doc, *link)) {
        out << " (signal: " << *text << ")";
    }
    out << "\n";

    // token index -> marker opening/closing around it
    std::map<std::size_t, std::string> opens;
    std::map<std::size_t, std::string> closes;
    std::set<int> sentences;
    std::vector<std::string> notes;
    const IntervalRef* args[2] = {&link->arg1, &link->arg2};
    for (int i = 0; i < 2; ++i) {
        const IntervalRef& arg = *args[i];
        const std::string label = "arg" + std::to_string(i + 1) + " " + arg.id;
        const TextExtent* extent = doc.interval_extent(arg);
        if (!extent) {
            notes.push_back(label + " does not resolve to a tag in this document");
            continue;
        }
        if (!extent->tokens || extent->tokens->count == 0 || !doc.position_of(*extent)) {
            notes.push_back(label + " \"" + extent->text + "\" has no position in the document body");
            continue;
        }
        const std::size_t first = extent->tokens->first;
        const std::size_t last = first + extent->tokens->count - 1;
        opens[first] += "[" + std::to_string(i + 1) + ": ";
        closes[last] += "]";
        for (std::size_t k = first; k <= last && k < doc.tokens.size(); ++k) {
            sentences.insert(doc.tokens[k].sentence_index);
        }
    }
    for (int s : sentences) {
        std::string line;
        for (std::size_t k = 0; k < doc.tokens.size(); ++k) {
            if (doc.tokens[k].sentence_index != s) {
                continue;
            }
            if (!line.empty()) {
                line += ' ';
            }
            if (auto it = opens.find(k); it != opens.end()) {
                line += it->second;
            }
            line += doc.tokens[k].surface;
            if (auto it = closes.find(k); it != closes.end()) {
                line += it->second;
            }
        }
        out << "  sentence " << s << ": " << line << "\n";
    }
    for (const auto& n : notes) {
        out << "  note: " << n << "\n";
    }
    return out.str();
}

} // namespace tmlwb
