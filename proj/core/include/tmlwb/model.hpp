#pragma once

// In-memory representation of TimeML documents and corpora.
//
// Everything here is immutable once ingest has finished building it. Tags
// keep their full original attribute list so that nothing is lost on a
// store round-trip or when a tag is re-serialized by the browser; a few
// fields that the checks rely on (ids, link arguments, relation types) are
// additionally lifted into typed members.

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tmlwb {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or unsupported query (unknown tag, field or filter).
class QueryError : public Error {
public:
    using Error::Error;
};

// The fourteen TimeML TLINK relation types.
enum class RelType {
    Before,
    After,
    IBefore,
    IAfter,
    Includes,
    IsIncluded,
    Begins,
    BegunBy,
    Ends,
    EndedBy,
    Simultaneous,
    Identity,
    During,
    DuringInv,
};

inline constexpr std::array<RelType, 14> kAllRelTypes = {
    RelType::Before,     RelType::After,        RelType::IBefore,  RelType::IAfter,
    RelType::Includes,   RelType::IsIncluded,   RelType::Begins,   RelType::BegunBy,
    RelType::Ends,       RelType::EndedBy,      RelType::Simultaneous,
    RelType::Identity,   RelType::During,       RelType::DuringInv,
};

std::string_view to_string(RelType rel);
// Case-insensitive; nullopt for anything outside the closed set.
std::optional<RelType> parse_rel_type(std::string_view text);

enum class IntervalKind { EventInstance, Timex };

// One argument of a link: an event instance (eiid) or a TIMEX3 (tid).
struct IntervalRef {
    IntervalKind kind = IntervalKind::EventInstance;
    std::string id;

    auto operator<=>(const IntervalRef&) const = default;
    bool operator==(const IntervalRef&) const = default;
};

enum class LinkKind { TLink, SLink, ALink };

std::string_view to_string(LinkKind kind);

struct Attribute {
    std::string name;
    std::string value;

    bool operator==(const Attribute&) const = default;
};

using Attributes = std::vector<Attribute>;

// Case-insensitive lookup by attribute name.
std::optional<std::string_view> find_attribute(const Attributes& attrs, std::string_view name);

struct Token {
    int sentence_index = 0;
    int word_index = 0;
    std::string surface;
    std::string lemma;

    bool operator==(const Token&) const = default;
};

// Half-open range of document tokens covered by a tag.
struct TokenRange {
    std::size_t first = 0;
    std::size_t count = 0;

    bool operator==(const TokenRange&) const = default;
};

struct Position {
    int sentence = 0;
    int word = 0;

    bool operator==(const Position&) const = default;
};

// Fields shared by the tags that enclose text (EVENT, TIMEX3, SIGNAL).
// `tokens` is absent when the tag sits outside the document body, as the
// document creation time usually does.
struct TextExtent {
    std::string text;
    std::optional<TokenRange> tokens;

    bool operator==(const TextExtent&) const = default;
};

struct Event {
    std::string eid;
    std::string event_class;
    Attributes attributes;
    TextExtent extent;

    bool operator==(const Event&) const = default;
};

struct EventInstance {
    std::string eiid;
    std::string event_id;
    Attributes attributes;

    bool operator==(const EventInstance&) const = default;
};

struct Timex3 {
    std::string tid;
    Attributes attributes;
    TextExtent extent;

    bool operator==(const Timex3&) const = default;
};

struct Signal {
    std::string sid;
    Attributes attributes;
    TextExtent extent;

    bool operator==(const Signal&) const = default;
};

// TLINK, SLINK and ALINK share this record. The two arguments are kept
// abstract; `arg1_attribute`/`arg2_attribute` remember which TimeML
// attribute carried each one so the tag can be written back out.
struct Link {
    LinkKind kind = LinkKind::TLink;
    std::string lid;
    std::string rel_type;
    IntervalRef arg1;
    IntervalRef arg2;
    std::string arg1_attribute;
    std::string arg2_attribute;
    std::optional<std::string> signal_id;
    std::optional<std::string> origin;
    // Attributes not lifted into the members above (syntax, comment, ...).
    Attributes extra;

    // The typed relation of a TLINK; nullopt for SLINK/ALINK.
    std::optional<RelType> temporal_relation() const;

    bool operator==(const Link&) const = default;
};

// TimeML attribute names for a link argument of the given kind/position.
std::string default_arg_attribute(LinkKind kind, int position, IntervalKind interval);

struct Document {
    int doc_id = 0;
    std::string filename;
    std::vector<Token> tokens;
    std::vector<Event> events;
    std::vector<EventInstance> instances;
    std::vector<Timex3> timexes;
    std::vector<Signal> signals;
    std::vector<Link> links;
    std::vector<std::string> warnings;

    const Event* find_event(std::string_view eid) const;
    const EventInstance* find_instance(std::string_view eiid) const;
    const Timex3* find_timex(std::string_view tid) const;
    const Signal* find_signal(std::string_view sid) const;
    const Link* find_link(std::string_view lid) const;

    // Text of the interval named by `ref`: the instance's EVENT text or the
    // TIMEX3 text. nullopt when the reference dangles.
    std::optional<std::string> interval_text(const IntervalRef& ref) const;
    const TextExtent* interval_extent(const IntervalRef& ref) const;
    // Position of the first token of an extent, if it lies in the body.
    std::optional<Position> position_of(const TextExtent& extent) const;

    bool operator==(const Document&) const = default;
};

struct Corpus {
    std::string name;
    std::string note;
    std::vector<Document> documents;

    const Document* find_document(int doc_id) const;
    const Document* find_document(std::string_view filename) const;

    bool operator==(const Corpus&) const = default;
};

// Effective value of `attribute` for every event instance of `doc`, in
// document order. Instance-level attributes come from MAKEINSTANCE; text,
// lemma, class and position come from the referenced EVENT and are absent
// when the instance's eventID dangles. Throws QueryError for unknown names.
std::vector<std::pair<const EventInstance*, std::optional<std::string>>>
resolve_event_attribute(const Document& doc, std::string_view attribute);

// Pseudo attributes computed from a tag's enclosed text: text, lemma,
// position ("sentence:word"), sentence and word.
bool is_text_field(std::string_view field);
std::optional<std::string> text_field(const Document& doc, const TextExtent& extent, std::string_view field);

// An EVENT attribute or text-derived field; absent when empty.
std::optional<std::string> event_field(const Document& doc, const Event& event, std::string_view field);

// The text of the SIGNAL a link points at, if it resolves.
std::optional<std::string> link_signal_text(const Document& doc, const Link& link);

// True when `name` is read from MAKEINSTANCE rather than EVENT.
bool is_instance_attribute(std::string_view name);

// Attribute names TimeML declares for EVENT and MAKEINSTANCE.
const std::vector<std::string>& declared_event_attributes();
const std::vector<std::string>& declared_instance_attributes();

// Case-insensitive ASCII comparison helpers used across the project.
bool iequals(std::string_view a, std::string_view b);
std::string to_lower(std::string_view text);
std::string to_upper(std::string_view text);

} // namespace tmlwb
