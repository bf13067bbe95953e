#include "tmlwb/query.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace tmlwb {

namespace {

const std::vector<std::string> kTextFields = {"text", "lemma", "position", "sentence", "word"};

const std::vector<std::string> kTimexAttributes = {
    "tid",           "type",    "value",       "mod",  "temporalFunction", "functionInDocument",
    "anchorTimeID",  "beginPoint", "endPoint", "quant", "freq",            "valueFromFunction"};

const std::vector<std::string> kLinkDerived = {"arg1", "arg2", "signaltext"};

std::vector<std::string> link_attributes(TagFamily tag) {
    switch (tag) {
    case TagFamily::TLink:
        return {"lid",          "relType", "eventInstanceID", "timeID", "relatedToEventInstance", "relatedToTime",
                "signalID",     "origin",  "syntax"};
    case TagFamily::SLink:
        return {"lid", "relType", "eventInstanceID", "subordinatedEventInstance", "signalID", "origin", "syntax"};
    default:
        return {"lid", "relType", "eventInstanceID", "relatedToEventInstance", "signalID", "origin", "syntax"};
    }
}

bool contains_field(const std::vector<std::string>& fields, std::string_view name) {
    return std::any_of(fields.begin(), fields.end(), [&](const std::string& f) { return iequals(f, name); });
}

void add_unique(std::vector<std::string>& fields, const std::string& name) {
    if (!contains_field(fields, name)) {
        fields.push_back(name);
    }
}

std::optional<LinkKind> link_kind_of(TagFamily tag) {
    switch (tag) {
    case TagFamily::TLink:
        return LinkKind::TLink;
    case TagFamily::SLink:
        return LinkKind::SLink;
    case TagFamily::ALink:
        return LinkKind::ALink;
    default:
        return std::nullopt;
    }
}

std::optional<std::string> non_empty(std::optional<std::string_view> v) {
    if (!v || v->empty()) {
        return std::nullopt;
    }
    return std::string(*v);
}

std::optional<std::string> link_field(const Document& doc, const Link& link, std::string_view field) {
    if (iequals(field, "reltype")) {
        return link.rel_type.empty() ? std::nullopt : std::optional(link.rel_type);
    }
    if (iequals(field, "lid")) {
        return link.lid;
    }
    if (iequals(field, "arg1") || iequals(field, link.arg1_attribute)) {
        return link.arg1.id;
    }
    if (iequals(field, "arg2") || iequals(field, link.arg2_attribute)) {
        return link.arg2.id;
    }
    if (iequals(field, "signalid")) {
        return link.signal_id;
    }
    if (iequals(field, "signaltext")) {
        auto text = link_signal_text(doc, link);
        return text && !text->empty() ? text : std::nullopt;
    }
    if (iequals(field, "origin")) {
        return link.origin && !link.origin->empty() ? link.origin : std::nullopt;
    }
    return non_empty(find_attribute(link.extra, field));
}

std::optional<std::string> instance_field(const Document& doc, const EventInstance& inst, std::string_view field) {
    if (is_instance_attribute(field)) {
        return non_empty(find_attribute(inst.attributes, field));
    }
    if (const Event* ev = doc.find_event(inst.event_id)) {
        if (auto v = event_field(doc, *ev, field)) {
            return v;
        }
    }
    return non_empty(find_attribute(inst.attributes, field));
}

std::string capitalize(std::string_view s) {
    std::string out = to_lower(s);
    if (!out.empty()) {
        out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    }
    return out;
}

std::string predicate_text(const Filter& f) {
    switch (f.predicate) {
    case Predicate::Is:
        return "is " + f.value;
    case Predicate::IsNot:
        return "is not " + f.value;
    case Predicate::Filled:
        return "is filled";
    case Predicate::Unfilled:
        return "is not filled";
    }
    return {};
}

// Groups occurrences by the query granularity, in document/sentence order.
std::vector<std::pair<std::string, std::vector<Occurrence>>> group_occurrences(const std::vector<Occurrence>& occs,
                                                                               Granularity granularity) {
    if (granularity == Granularity::Corpus) {
        return {{"", occs}};
    }
    std::map<std::pair<int, int>, std::pair<std::string, std::vector<Occurrence>>> groups;
    for (const auto& o : occs) {
        int sentence = -1;
        std::string name = o.doc->filename;
        if (granularity == Granularity::Sentence) {
            const auto s = occurrence_sentence(o);
            sentence = s ? *s : INT_MAX;
            name += ":" + (s ? std::to_string(*s) : std::string("-"));
        }
        auto& slot = groups[{o.doc->doc_id, sentence}];
        slot.first = name;
        slot.second.push_back(o);
    }
    std::vector<std::pair<std::string, std::vector<Occurrence>>> out;
    for (auto& [key, group] : groups) {
        out.push_back(std::move(group));
    }
    return out;
}

std::string csv_escape(std::string_view v) {
    if (v.find_first_of(",\"\n\r") == std::string_view::npos) {
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

std::string tex_escape(std::string_view v) {
    std::string out;
    for (char c : v) {
        switch (c) {
        case '\\':
            out += "\\textbackslash{}";
            break;
        case '&':
        case '%':
        case '$':
        case '#':
        case '_':
        case '{':
        case '}':
            out += '\\';
            out += c;
            break;
        case '~':
            out += "\\textasciitilde{}";
            break;
        case '^':
            out += "\\textasciicircum{}";
            break;
        default:
            out += c;
        }
    }
    return out;
}

std::string pad_right(std::string_view s, std::size_t width) {
    std::string out(s);
    if (out.size() < width) {
        out.append(width - out.size(), ' ');
    }
    return out;
}

std::string pad_left(std::string_view s, std::size_t width) {
    std::string out;
    if (s.size() < width) {
        out.append(width - s.size(), ' ');
    }
    return out + std::string(s);
}

std::string group_heading(Granularity g) { return g == Granularity::Sentence ? "Sentence" : "Document"; }

std::string tex_label(const Query& q, std::string_view suffix) {
    std::string label = "tab:" + capitalize(to_string(q.tag)) + q.field + "-" + std::string(suffix);
    label.erase(std::remove(label.begin(), label.end(), ' '), label.end());
    return label;
}

// Text columns are left-aligned; numeric reports always end in three `r` columns.
std::string tex_open(const Query& q, std::string_view label_suffix, std::size_t text_columns, bool numeric) {
    std::string columns = "{ |";
    for (std::size_t i = 0; i < text_columns; ++i) {
        columns += " l |";
    }
    if (numeric) {
        columns += " r | r | r |";
    }
    columns += " }";
    std::ostringstream out;
    out << "\\begin{table}\n\\begin{center}\n\\caption{" << tex_escape(report_title(q)) << "}\n\\label{"
        << tex_label(q, label_suffix) << "}\n\\begin{tabular}" << columns << "\n\\hline\n";
    return out.str();
}

constexpr std::string_view kTexClose = "\\end{tabular}\n\\end{center}\n\\end{table}\n";

std::string format_distribution(const DistributionReport& r, OutputFormat format) {
    const Query& q = r.query;
    const bool grouped = q.granularity != Granularity::Corpus;
    std::ostringstream out;
    switch (format) {
    case OutputFormat::Screen: {
        std::size_t group_w = group_heading(q.granularity).size();
        std::size_t value_w = std::string_view("Value").size();
        for (const auto& s : r.sections) {
            group_w = std::max(group_w, s.group.size());
            for (const auto& row : s.rows) {
                value_w = std::max(value_w, row.value.size());
            }
        }
        const std::string prefix_head = grouped ? pad_right(group_heading(q.granularity), group_w) + "  " : "";
        const std::string header = prefix_head + pad_right("Value", value_w) + "  Frequency  Proportion";
        const std::string rule(header.size(), '-');
        out << report_title(q) << "\n" << header << "\n" << rule << "\n";
        for (const auto& s : r.sections) {
            const std::string prefix = grouped ? pad_right(s.group, group_w) + "  " : "";
            for (const auto& row : s.rows) {
                out << prefix << pad_right(row.value, value_w) << "  " << pad_left(std::to_string(row.frequency), 9)
                    << "  " << pad_left(format_percent(row.proportion), 10) << "\n";
            }
            if (grouped) {
                out << prefix << pad_right("Total", value_w) << "  " << pad_left(std::to_string(s.total), 9) << "\n";
            }
        }
        if (!grouped) {
            const std::size_t total = r.sections.empty() ? 0 : r.sections.front().total;
            out << rule << "\n" << pad_right("Total", value_w) << "  " << pad_left(std::to_string(total), 9) << "\n";
        }
        break;
    }
    case OutputFormat::Csv:
        out << (grouped ? to_lower(group_heading(q.granularity)) + "," : "") << "value,frequency,proportion\n";
        for (const auto& s : r.sections) {
            for (const auto& row : s.rows) {
                out << (grouped ? csv_escape(s.group) + "," : "") << csv_escape(row.value) << "," << row.frequency
                    << "," << format_percent(row.proportion) << "\n";
            }
        }
        break;
    case OutputFormat::Tex: {
        out << tex_open(q, "Frequency-Proportion-distribution", grouped ? 2 : 1, true);
        const std::string head = "\\textbf{" + tex_escape(capitalize(to_string(q.tag)) + " " + q.field) + "}";
        out << (grouped ? "\\textbf{" + group_heading(q.granularity) + "} & " : "") << head
            << " & \\textbf{Frequency} & \\textbf{Proportion} \\\\\n\\hline\n";
        for (const auto& s : r.sections) {
            for (const auto& row : s.rows) {
                out << (grouped ? tex_escape(s.group) + " & " : "") << tex_escape(row.value) << " & " << row.frequency
                    << " & " << tex_escape(format_percent(row.proportion)) << " \\\\\n";
            }
            out << "\\hline\n"
                << (grouped ? tex_escape(s.group) + " & " : "") << "Total & " << s.total << " &  \\\\\n\\hline\n";
        }
        if (r.sections.empty()) {
            out << "Total & 0 &  \\\\\n\\hline\n";
        }
        out << kTexClose;
        break;
    }
    }
    return out.str();
}

std::string format_state(const StateReport& r, OutputFormat format) {
    const Query& q = r.query;
    const bool grouped = q.granularity != Granularity::Corpus;
    std::ostringstream out;
    auto pct = [](std::size_t part, std::size_t whole) {
        return format_percent(whole == 0 ? 0.0 : static_cast<double>(part) / static_cast<double>(whole));
    };
    switch (format) {
    case OutputFormat::Screen: {
        std::size_t group_w = group_heading(q.granularity).size();
        for (const auto& s : r.sections) {
            group_w = std::max(group_w, s.group.size());
        }
        const std::string head_prefix = grouped ? pad_right(group_heading(q.granularity), group_w) + "  " : "";
        out << head_prefix << "  Count  State of " << capitalize(to_string(q.tag)) << " " << q.field;
        if (q.filter) {
            out << " where " << q.filter->field << " " << predicate_text(*q.filter);
        }
        out << "\n " << std::string(head_prefix.size() + 43, '=') << "\n";
        for (const auto& s : r.sections) {
            const std::size_t total = s.filled + s.unfilled;
            const std::string prefix = grouped ? pad_right(s.group, group_w) + "  " : "";
            out << prefix << pad_left(std::to_string(s.filled), 7) << "  " << q.field << " filled   ("
                << pct(s.filled, total) << ")\n";
            out << prefix << pad_left(std::to_string(s.unfilled), 7) << "  " << q.field << " unfilled ("
                << pct(s.unfilled, total) << ")\n";
        }
        break;
    }
    case OutputFormat::Csv:
        out << (grouped ? to_lower(group_heading(q.granularity)) + "," : "") << "state,count,proportion\n";
        for (const auto& s : r.sections) {
            const std::size_t total = s.filled + s.unfilled;
            const std::string prefix = grouped ? csv_escape(s.group) + "," : "";
            out << prefix << "filled," << s.filled << "," << pct(s.filled, total) << "\n";
            out << prefix << "unfilled," << s.unfilled << "," << pct(s.unfilled, total) << "\n";
        }
        break;
    case OutputFormat::Tex:
        out << tex_open(q, "Count-Proportion-state", grouped ? 2 : 1, true);
        out << (grouped ? "\\textbf{" + group_heading(q.granularity) + "} & " : "") << "\\textbf{"
            << tex_escape(capitalize(to_string(q.tag)) + " " + q.field)
            << "} & \\textbf{Count} & \\textbf{Proportion} \\\\\n\\hline\n";
        for (const auto& s : r.sections) {
            const std::size_t total = s.filled + s.unfilled;
            const std::string prefix = grouped ? tex_escape(s.group) + " & " : "";
            out << prefix << "filled & " << s.filled << " & " << tex_escape(pct(s.filled, total)) << " \\\\\n";
            out << prefix << "unfilled & " << s.unfilled << " & " << tex_escape(pct(s.unfilled, total)) << " \\\\\n";
            out << "\\hline\n";
        }
        out << kTexClose;
        break;
    }
    return out.str();
}

std::string format_list(const ListReport& r, OutputFormat format) {
    const Query& q = r.query;
    const bool grouped = q.granularity != Granularity::Corpus;
    std::ostringstream out;
    switch (format) {
    case OutputFormat::Screen: {
        std::size_t group_w = 0;
        for (const auto& s : r.sections) {
            group_w = std::max(group_w, s.group.size());
        }
        for (const auto& s : r.sections) {
            for (const auto& v : s.values) {
                out << (grouped ? pad_right(s.group, group_w) + "  " : "") << v << "\n";
            }
        }
        break;
    }
    case OutputFormat::Csv:
        out << (grouped ? to_lower(group_heading(q.granularity)) + "," : "") << "value\n";
        for (const auto& s : r.sections) {
            for (const auto& v : s.values) {
                out << (grouped ? csv_escape(s.group) + "," : "") << csv_escape(v) << "\n";
            }
        }
        break;
    case OutputFormat::Tex:
        out << tex_open(q, "Value-list", grouped ? 2 : 1, false);
        out << (grouped ? "\\textbf{" + group_heading(q.granularity) + "} & " : "") << "\\textbf{"
            << tex_escape(capitalize(to_string(q.tag)) + " " + q.field) << "} \\\\\n\\hline\n";
        for (const auto& s : r.sections) {
            for (const auto& v : s.values) {
                out << (grouped ? tex_escape(s.group) + " & " : "") << tex_escape(v) << " \\\\\n";
            }
        }
        out << "\\hline\n" << kTexClose;
        break;
    }
    return out.str();
}

std::vector<Occurrence> filtered_occurrences(const Corpus& corpus, const Query& query) {
    validate_query(query, corpus);
    auto occs = collect_occurrences(corpus, query);
    if (query.filter) {
        occs = apply_filter(std::move(occs), *query.filter);
    }
    return occs;
}

} // namespace

std::string_view to_string(TagFamily tag) {
    switch (tag) {
    case TagFamily::Event:
        return "event";
    case TagFamily::Instance:
        return "instance";
    case TagFamily::Timex3:
        return "timex3";
    case TagFamily::Signal:
        return "signal";
    case TagFamily::TLink:
        return "tlink";
    case TagFamily::SLink:
        return "slink";
    case TagFamily::ALink:
        return "alink";
    }
    return "event";
}

std::optional<TagFamily> parse_tag_family(std::string_view text) {
    for (TagFamily t : {TagFamily::Event, TagFamily::Instance, TagFamily::Timex3, TagFamily::Signal, TagFamily::TLink,
                        TagFamily::SLink, TagFamily::ALink}) {
        if (iequals(to_string(t), text)) {
            return t;
        }
    }
    if (iequals(text, "makeinstance")) {
        return TagFamily::Instance;
    }
    if (iequals(text, "timex")) {
        return TagFamily::Timex3;
    }
    return std::nullopt;
}

std::vector<std::string> valid_fields(TagFamily tag, const Corpus& corpus) {
    std::vector<std::string> fields;
    auto add_all = [&](const std::vector<std::string>& names) {
        for (const auto& n : names) {
            add_unique(fields, n);
        }
    };
    auto add_observed = [&](const Attributes& attrs) {
        for (const auto& a : attrs) {
            add_unique(fields, a.name);
        }
    };
    switch (tag) {
    case TagFamily::Event:
    case TagFamily::Instance:
        add_all(tag == TagFamily::Event ? declared_event_attributes() : declared_instance_attributes());
        add_all(tag == TagFamily::Event ? declared_instance_attributes() : declared_event_attributes());
        add_all(kTextFields);
        for (const auto& doc : corpus.documents) {
            for (const auto& e : doc.events) {
                add_observed(e.attributes);
            }
            for (const auto& i : doc.instances) {
                add_observed(i.attributes);
            }
        }
        break;
    case TagFamily::Timex3:
        add_all(kTimexAttributes);
        add_all(kTextFields);
        for (const auto& doc : corpus.documents) {
            for (const auto& t : doc.timexes) {
                add_observed(t.attributes);
            }
        }
        break;
    case TagFamily::Signal:
        add_unique(fields, "sid");
        add_all(kTextFields);
        for (const auto& doc : corpus.documents) {
            for (const auto& s : doc.signals) {
                add_observed(s.attributes);
            }
        }
        break;
    case TagFamily::TLink:
    case TagFamily::SLink:
    case TagFamily::ALink:
        add_all(link_attributes(tag));
        add_all(kLinkDerived);
        for (const auto& doc : corpus.documents) {
            for (const auto& l : doc.links) {
                if (l.kind == link_kind_of(tag)) {
                    add_observed(l.extra);
                }
            }
        }
        break;
    }
    return fields;
}

void validate_query(const Query& query, const Corpus& corpus) {
    const auto fields = valid_fields(query.tag, corpus);
    auto check = [&](const std::string& field, std::string_view role) {
        if (!contains_field(fields, field)) {
            std::string list;
            for (const auto& f : fields) {
                list += list.empty() ? f : ", " + f;
            }
            throw QueryError("unknown " + std::string(role) + " '" + field + "' for " +
                             std::string(to_string(query.tag)) + "; valid fields: " + list);
        }
    };
    check(query.field, "field");
    if (query.filter) {
        check(query.filter->field, "filter field");
    }
    if (query.min_freq && *query.min_freq == 0) {
        throw QueryError("min-freq must be at least 1");
    }
}

std::vector<Occurrence> collect_occurrences(const Corpus& corpus, const Query& query) {
    TagFamily subject = query.tag;
    if (query.tag == TagFamily::Event &&
        (is_instance_attribute(query.field) || (query.filter && is_instance_attribute(query.filter->field)))) {
        subject = TagFamily::Instance;
    }
    std::vector<Occurrence> out;
    for (const auto& doc : corpus.documents) {
        std::size_t count = 0;
        switch (subject) {
        case TagFamily::Event:
            count = doc.events.size();
            break;
        case TagFamily::Instance:
            count = doc.instances.size();
            break;
        case TagFamily::Timex3:
            count = doc.timexes.size();
            break;
        case TagFamily::Signal:
            count = doc.signals.size();
            break;
        case TagFamily::TLink:
        case TagFamily::SLink:
        case TagFamily::ALink:
            for (std::size_t i = 0; i < doc.links.size(); ++i) {
                if (doc.links[i].kind == link_kind_of(subject)) {
                    out.push_back({&doc, subject, i});
                }
            }
            continue;
        }
        for (std::size_t i = 0; i < count; ++i) {
            out.push_back({&doc, subject, i});
        }
    }
    return out;
}

std::optional<std::string> resolve_field(const Occurrence& o, std::string_view field) {
    const Document& doc = *o.doc;
    switch (o.subject) {
    case TagFamily::Event:
        return event_field(doc, doc.events[o.index], field);
    case TagFamily::Instance:
        return instance_field(doc, doc.instances[o.index], field);
    case TagFamily::Timex3: {
        const Timex3& t = doc.timexes[o.index];
        return is_text_field(field) ? text_field(doc, t.extent, field) : non_empty(find_attribute(t.attributes, field));
    }
    case TagFamily::Signal: {
        const Signal& s = doc.signals[o.index];
        return is_text_field(field) ? text_field(doc, s.extent, field) : non_empty(find_attribute(s.attributes, field));
    }
    case TagFamily::TLink:
    case TagFamily::SLink:
    case TagFamily::ALink:
        return link_field(doc, doc.links[o.index], field);
    }
    return std::nullopt;
}

std::optional<int> occurrence_sentence(const Occurrence& o) {
    const Document& doc = *o.doc;
    const TextExtent* extent = nullptr;
    switch (o.subject) {
    case TagFamily::Event:
        extent = &doc.events[o.index].extent;
        break;
    case TagFamily::Instance:
        extent = doc.interval_extent({IntervalKind::EventInstance, doc.instances[o.index].eiid});
        break;
    case TagFamily::Timex3:
        extent = &doc.timexes[o.index].extent;
        break;
    case TagFamily::Signal:
        extent = &doc.signals[o.index].extent;
        break;
    case TagFamily::TLink:
    case TagFamily::SLink:
    case TagFamily::ALink:
        extent = doc.interval_extent(doc.links[o.index].arg1);
        break;
    }
    if (!extent) {
        return std::nullopt;
    }
    const auto pos = doc.position_of(*extent);
    return pos ? std::optional(pos->sentence) : std::nullopt;
}

bool filter_matches(const std::optional<std::string>& value, const Filter& filter) {
    switch (filter.predicate) {
    case Predicate::Is:
        return value && iequals(*value, filter.value);
    case Predicate::IsNot:
        return !(value && iequals(*value, filter.value));
    case Predicate::Filled:
        return value && !value->empty();
    case Predicate::Unfilled:
        return !value || value->empty();
    }
    return false;
}

std::vector<Occurrence> apply_filter(std::vector<Occurrence> occurrences, const Filter& filter) {
    std::erase_if(occurrences,
                  [&](const Occurrence& o) { return !filter_matches(resolve_field(o, filter.field), filter); });
    return occurrences;
}

DistributionReport report_distribution(const Corpus& corpus, const Query& query) {
    DistributionReport report{query, {}};
    const auto occs = filtered_occurrences(corpus, query);
    for (auto& [group, members] : group_occurrences(occs, query.granularity)) {
        std::map<std::string, std::size_t> counts;
        std::size_t total = 0;
        for (const auto& o : members) {
            if (auto v = resolve_field(o, query.field)) {
                ++counts[*v];
                ++total;
            }
        }
        DistributionSection section{group, {}, total};
        for (const auto& [value, n] : counts) {
            section.rows.push_back({value, n, static_cast<double>(n) / static_cast<double>(total)});
        }
        std::stable_sort(section.rows.begin(), section.rows.end(),
                         [](const ReportRow& a, const ReportRow& b) { return a.frequency > b.frequency; });
        if (query.min_freq) {
            ReportRow other{"Other", 0, 0.0};
            std::erase_if(section.rows, [&](const ReportRow& r) {
                if (r.frequency >= *query.min_freq) {
                    return false;
                }
                other.frequency += r.frequency;
                return true;
            });
            if (other.frequency > 0) {
                other.proportion = static_cast<double>(other.frequency) / static_cast<double>(total);
                section.rows.push_back(other);
            }
        }
        if (query.granularity == Granularity::Corpus || total > 0) {
            report.sections.push_back(std::move(section));
        }
    }
    return report;
}

StateReport report_state(const Corpus& corpus, const Query& query) {
    StateReport report{query, {}};
    const auto occs = filtered_occurrences(corpus, query);
    for (auto& [group, members] : group_occurrences(occs, query.granularity)) {
        StateSection section{group, 0, 0};
        for (const auto& o : members) {
            if (resolve_field(o, query.field)) {
                ++section.filled;
            } else {
                ++section.unfilled;
            }
        }
        report.sections.push_back(section);
    }
    return report;
}

ListReport report_list(const Corpus& corpus, const Query& query) {
    ListReport report{query, {}};
    const auto occs = filtered_occurrences(corpus, query);
    for (auto& [group, members] : group_occurrences(occs, query.granularity)) {
        std::set<std::string> values;
        for (const auto& o : members) {
            if (auto v = resolve_field(o, query.field)) {
                values.insert(*v);
            }
        }
        if (query.granularity != Granularity::Corpus && values.empty()) {
            continue;
        }
        report.sections.push_back({group, {values.begin(), values.end()}});
    }
    return report;
}

Report run_query(const Corpus& corpus, const Query& query) {
    switch (query.report) {
    case ReportKind::List:
        return report_list(corpus, query);
    case ReportKind::State:
        return report_state(corpus, query);
    case ReportKind::Distribution:
        break;
    }
    return report_distribution(corpus, query);
}

std::string format_percent(double fraction) {
    const double pct = fraction * 100.0;
    if (!(pct > 0.0)) {
        return "0.00%";
    }
    // Round to three significant digits first so that e.g. 99.96 becomes
    // 100 (three digits) rather than 100.0.
    int magnitude = static_cast<int>(std::floor(std::log10(pct)));
    const double scale = std::pow(10.0, 2 - magnitude);
    const double rounded = std::round(pct * scale) / scale;
    magnitude = static_cast<int>(std::floor(std::log10(rounded)));
    const int decimals = std::max(0, 2 - magnitude);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f%%", decimals, rounded);
    return buf;
}

std::string report_title(const Query& q) {
    std::string kind;
    switch (q.report) {
    case ReportKind::List:
        kind = "List";
        break;
    case ReportKind::Distribution:
        kind = "Distribution";
        break;
    case ReportKind::State:
        kind = "State";
        break;
    }
    std::string title = kind + " of " + capitalize(to_string(q.tag)) + " " + q.field;
    if (q.filter) {
        title += " where " + q.filter->field + " " + predicate_text(*q.filter);
    }
    return title;
}

std::string format_report(const Report& report, OutputFormat format) {
    return std::visit(
        [&](const auto& r) -> std::string {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, DistributionReport>) {
                return format_distribution(r, format);
            } else if constexpr (std::is_same_v<T, StateReport>) {
                return format_state(r, format);
            } else {
                return format_list(r, format);
            }
        },
        report);
}

} // namespace tmlwb
