#include "tmlwb/model.hpp"

#include <algorithm>
#include <cctype>

#include "tmlwb/text.hpp"

namespace tmlwb {

namespace {

constexpr std::array<std::string_view, 14> kRelNames = {
    "BEFORE", "AFTER",    "IBEFORE", "IAFTER",       "INCLUDES", "IS_INCLUDED", "BEGINS",
    "BEGUN_BY", "ENDS", "ENDED_BY", "SIMULTANEOUS", "IDENTITY", "DURING",      "DURING_INV",
};

template <typename T, typename Key>
const T* find_by(const std::vector<T>& items, std::string_view id, Key key) {
    auto it = std::find_if(items.begin(), items.end(), [&](const T& item) { return key(item) == id; });
    return it == items.end() ? nullptr : &*it;
}

// Event-sourced pseudo attributes available on events and, through the
// instance bridge, on instances.
const std::vector<std::string> kEventDerived = {"text", "lemma", "position", "sentence", "word"};

std::optional<std::string> non_empty(std::optional<std::string_view> v) {
    if (!v || v->empty()) {
        return std::nullopt;
    }
    return std::string(*v);
}

} // namespace

std::string_view to_string(RelType rel) { return kRelNames[static_cast<std::size_t>(rel)]; }

std::optional<RelType> parse_rel_type(std::string_view text) {
    for (std::size_t i = 0; i < kRelNames.size(); ++i) {
        if (iequals(kRelNames[i], text)) {
            return static_cast<RelType>(i);
        }
    }
    return std::nullopt;
}

std::string_view to_string(LinkKind kind) {
    switch (kind) {
    case LinkKind::TLink:
        return "TLINK";
    case LinkKind::SLink:
        return "SLINK";
    case LinkKind::ALink:
        return "ALINK";
    }
    return "TLINK";
}

std::optional<std::string_view> find_attribute(const Attributes& attrs, std::string_view name) {
    for (const auto& a : attrs) {
        if (iequals(a.name, name)) {
            return a.value;
        }
    }
    return std::nullopt;
}

std::optional<RelType> Link::temporal_relation() const {
    if (kind != LinkKind::TLink) {
        return std::nullopt;
    }
    return parse_rel_type(rel_type);
}

std::string default_arg_attribute(LinkKind kind, int position, IntervalKind interval) {
    if (position == 1) {
        if (kind == LinkKind::TLink && interval == IntervalKind::Timex) {
            return "timeID";
        }
        return "eventInstanceID";
    }
    switch (kind) {
    case LinkKind::TLink:
        return interval == IntervalKind::Timex ? "relatedToTime" : "relatedToEventInstance";
    case LinkKind::SLink:
        return "subordinatedEventInstance";
    case LinkKind::ALink:
        return "relatedToEventInstance";
    }
    return "relatedToEventInstance";
}

const Event* Document::find_event(std::string_view eid) const {
    return find_by(events, eid, [](const Event& e) -> const std::string& { return e.eid; });
}

const EventInstance* Document::find_instance(std::string_view eiid) const {
    return find_by(instances, eiid, [](const EventInstance& i) -> const std::string& { return i.eiid; });
}

const Timex3* Document::find_timex(std::string_view tid) const {
    return find_by(timexes, tid, [](const Timex3& t) -> const std::string& { return t.tid; });
}

const Signal* Document::find_signal(std::string_view sid) const {
    return find_by(signals, sid, [](const Signal& s) -> const std::string& { return s.sid; });
}

const Link* Document::find_link(std::string_view lid) const {
    return find_by(links, lid, [](const Link& l) -> const std::string& { return l.lid; });
}

const TextExtent* Document::interval_extent(const IntervalRef& ref) const {
    if (ref.kind == IntervalKind::Timex) {
        const Timex3* t = find_timex(ref.id);
        return t ? &t->extent : nullptr;
    }
    const EventInstance* inst = find_instance(ref.id);
    if (!inst) {
        return nullptr;
    }
    const Event* ev = find_event(inst->event_id);
    return ev ? &ev->extent : nullptr;
}

std::optional<std::string> Document::interval_text(const IntervalRef& ref) const {
    const TextExtent* extent = interval_extent(ref);
    if (!extent) {
        return std::nullopt;
    }
    return extent->text;
}

std::optional<Position> Document::position_of(const TextExtent& extent) const {
    if (!extent.tokens || extent.tokens->count == 0 || extent.tokens->first >= tokens.size()) {
        return std::nullopt;
    }
    const Token& t = tokens[extent.tokens->first];
    return Position{t.sentence_index, t.word_index};
}

const Document* Corpus::find_document(int doc_id) const {
    auto it = std::find_if(documents.begin(), documents.end(), [&](const Document& d) { return d.doc_id == doc_id; });
    return it == documents.end() ? nullptr : &*it;
}

const Document* Corpus::find_document(std::string_view filename) const {
    auto it =
        std::find_if(documents.begin(), documents.end(), [&](const Document& d) { return d.filename == filename; });
    return it == documents.end() ? nullptr : &*it;
}

const std::vector<std::string>& declared_event_attributes() {
    static const std::vector<std::string> names = {"eid", "class", "stem"};
    return names;
}

const std::vector<std::string>& declared_instance_attributes() {
    static const std::vector<std::string> names = {"eiid",     "eventID",     "tense", "aspect",  "polarity",
                                                   "modality", "cardinality", "pos",   "signalID"};
    return names;
}

bool is_instance_attribute(std::string_view name) {
    const auto& names = declared_instance_attributes();
    return std::any_of(names.begin(), names.end(), [&](const std::string& n) { return iequals(n, name); });
}

std::vector<std::pair<const EventInstance*, std::optional<std::string>>>
resolve_event_attribute(const Document& doc, std::string_view attribute) {
    const bool from_instance = is_instance_attribute(attribute);
    bool known = from_instance;
    for (const auto& n : declared_event_attributes()) {
        known = known || iequals(n, attribute);
    }
    for (const auto& n : kEventDerived) {
        known = known || iequals(n, attribute);
    }
    for (const auto& ev : doc.events) {
        known = known || find_attribute(ev.attributes, attribute).has_value();
    }
    for (const auto& inst : doc.instances) {
        known = known || find_attribute(inst.attributes, attribute).has_value();
    }
    if (!known) {
        std::string valid;
        for (const auto* list : {&declared_event_attributes(), &declared_instance_attributes(), &kEventDerived}) {
            for (const auto& n : *list) {
                valid += valid.empty() ? n : ", " + n;
            }
        }
        throw QueryError("unknown event attribute '" + std::string(attribute) + "'; valid attributes: " + valid);
    }

    std::vector<std::pair<const EventInstance*, std::optional<std::string>>> out;
    out.reserve(doc.instances.size());
    for (const auto& inst : doc.instances) {
        std::optional<std::string> value;
        if (from_instance) {
            value = non_empty(find_attribute(inst.attributes, attribute));
        } else if (const Event* ev = doc.find_event(inst.event_id)) {
            value = event_field(doc, *ev, attribute);
        }
        if (!value && !from_instance) {
            value = non_empty(find_attribute(inst.attributes, attribute));
        }
        out.emplace_back(&inst, std::move(value));
    }
    return out;
}

bool is_text_field(std::string_view field) {
    return std::any_of(kEventDerived.begin(), kEventDerived.end(), [&](const std::string& n) { return iequals(n, field); });
}

std::optional<std::string> text_field(const Document& doc, const TextExtent& extent, std::string_view field) {
    if (iequals(field, "text")) {
        return extent.text.empty() ? std::nullopt : std::optional(extent.text);
    }
    if (iequals(field, "lemma")) {
        std::string lemma;
        if (extent.tokens) {
            for (std::size_t i = 0; i < extent.tokens->count; ++i) {
                const std::size_t k = extent.tokens->first + i;
                if (k < doc.tokens.size()) {
                    lemma += (lemma.empty() ? "" : " ") + doc.tokens[k].lemma;
                }
            }
        } else {
            lemma = lemmatize_phrase(extent.text);
        }
        return lemma.empty() ? std::nullopt : std::optional(lemma);
    }
    auto pos = doc.position_of(extent);
    if (!pos) {
        return std::nullopt;
    }
    if (iequals(field, "sentence")) {
        return std::to_string(pos->sentence);
    }
    if (iequals(field, "word")) {
        return std::to_string(pos->word);
    }
    return std::to_string(pos->sentence) + ":" + std::to_string(pos->word);
}

std::optional<std::string> event_field(const Document& doc, const Event& event, std::string_view field) {
    if (is_text_field(field)) {
        return text_field(doc, event.extent, field);
    }
    return non_empty(find_attribute(event.attributes, field));
}

std::optional<std::string> link_signal_text(const Document& doc, const Link& link) {
    if (!link.signal_id) {
        return std::nullopt;
    }
    const Signal* s = doc.find_signal(*link.signal_id);
    if (!s) {
        return std::nullopt;
    }
    return s->extent.text;
}

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
           });
}

std::string to_lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string to_upper(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

} // namespace tmlwb
