#include "tmlwb/graph_checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace tmlwb {

namespace {

std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

double percent(std::size_t part, std::size_t whole) {
    return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

CheckFinding finding(const Document& doc, std::string check, Severity severity, std::vector<std::string> subjects,
                     std::string message) {
    return CheckFinding{std::move(check), doc.filename, doc.doc_id, severity, std::move(subjects), std::move(message)};
}

} // namespace

std::string_view to_string(Severity severity) {
    switch (severity) {
    case Severity::Error:
        return "ERROR";
    case Severity::Warning:
        return "WARNING";
    case Severity::Info:
        break;
    }
    return "INFO";
}

std::vector<IntervalSet> build_subgraphs(const Document& doc) {
    std::vector<IntervalSet> sets;
    auto locate = [&](const IntervalRef& r) {
        return std::find_if(sets.begin(), sets.end(), [&](const IntervalSet& s) { return s.contains(r); });
    };
    for (const auto& link : doc.links) {
        if (link.kind != LinkKind::TLink) {
            continue;
        }
        auto a = locate(link.arg1);
        auto b = locate(link.arg2);
        if (a != sets.end() && b != sets.end()) {
            if (a != b) {
                a->insert(b->begin(), b->end());
                sets.erase(b);
            }
        } else if (a != sets.end()) {
            a->insert(link.arg2);
        } else if (b != sets.end()) {
            b->insert(link.arg1);
        } else {
            sets.push_back({link.arg1, link.arg2});
        }
    }
    return sets;
}

double size_entropy(const std::vector<std::size_t>& sizes) {
    const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    if (n <= 1 || sizes.size() <= 1) {
        return 0.0;
    }
    double h = 0.0;
    for (std::size_t s : sizes) {
        if (s == 0) {
            continue;
        }
        const double p = static_cast<double>(s) / static_cast<double>(n);
        h -= p * std::log(p);
    }
    return h / std::log(static_cast<double>(n));
}

SubgraphReport subgraph_stats(const std::vector<std::size_t>& sizes,
                              const std::vector<std::size_t>& tlinks_per_subgraph) {
    SubgraphReport r;
    r.subgraph_count = sizes.size();
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        r.node_count += sizes[i];
        const std::size_t links = i < tlinks_per_subgraph.size() ? tlinks_per_subgraph[i] : 0;
        r.tlink_count += links;
        if (links == 1) {
            ++r.isolated_count;
            r.isolated_nodes += sizes[i];
            r.isolated_tlinks += links;
        }
        r.max_size = std::max(r.max_size, sizes[i]);
        ++r.size_histogram[sizes[i]];
    }
    r.isolated_subgraph_pct = percent(r.isolated_count, r.subgraph_count);
    r.isolated_node_pct = percent(r.isolated_nodes, r.node_count);
    r.isolated_tlink_pct = percent(r.isolated_tlinks, r.tlink_count);
    r.mean_size = r.subgraph_count == 0 ? 0.0
                                        : static_cast<double>(r.node_count) / static_cast<double>(r.subgraph_count);
    r.largest_node_pct = percent(r.max_size, r.node_count);
    r.entropy = size_entropy(sizes);
    return r;
}

SubgraphReport subgraph_stats(const Document& doc) {
    const auto sets = build_subgraphs(doc);
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> links(sets.size(), 0);
    for (const auto& s : sets) {
        sizes.push_back(s.size());
    }
    for (const auto& link : doc.links) {
        if (link.kind != LinkKind::TLink) {
            continue;
        }
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (sets[i].contains(link.arg1)) {
                ++links[i];
                break;
            }
        }
    }
    return subgraph_stats(sizes, links);
}

std::vector<std::string> format_subgraph_report(const SubgraphReport& r) {
    std::vector<std::string> lines;
    if (r.subgraph_count == 0) {
        lines.push_back("Subgraphs found: 0 - no TLINKs, document is un-fractured");
        return lines;
    }
    lines.push_back("Subgraphs found: " + std::to_string(r.subgraph_count) + " - composed of " +
                    std::to_string(r.node_count) + " nodes and linked by " + std::to_string(r.tlink_count) +
                    " TLINKS.");
    lines.push_back("Isolated subgraphs, that contain just one TLINK: " + std::to_string(r.isolated_count) +
                    " (making up " + fixed(r.isolated_subgraph_pct, 1) + "% of all subgraphs, " +
                    fixed(r.isolated_node_pct, 1) + "% of all nodes / described by " + fixed(r.isolated_tlink_pct, 1) +
                    "% of all TLINKs)");
    lines.push_back("Mean graph size " + fixed(r.mean_size, 1) + " nodes; largest subgraph (size " +
                    std::to_string(r.max_size) + ") has " + fixed(r.largest_node_pct, 1) + "% of all nodes");
    lines.push_back("Entropy of subgraph sizes:  " + fixed(r.entropy, 12));
    for (const auto& [size, count] : r.size_histogram) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%5zu nodes: (%2zu) ", size, count);
        lines.push_back(buf + std::string(count, '.'));
    }
    return lines;
}

std::vector<CheckFinding> check_split_graph(const Document& doc) {
    std::vector<CheckFinding> out;
    for (auto& line : format_subgraph_report(subgraph_stats(doc))) {
        out.push_back(finding(doc, "split_graph", Severity::Info, {}, std::move(line)));
    }
    return out;
}

std::vector<CheckFinding> check_tlink_loop(const Document& doc) {
    std::vector<CheckFinding> out;
    for (const auto& link : doc.links) {
        if (link.kind != LinkKind::TLink) {
            continue;
        }
        const bool timex = link.arg1.kind == IntervalKind::Timex;
        if (link.arg1 == link.arg2) {
            out.push_back(finding(doc, "tlink_loop", Severity::Error, {link.lid, link.arg1.id, link.arg2.id},
                                  "TLINK ID " + link.lid + " loops directly (" +
                                      (timex ? "timeID" : "instanceID") + " match), type " + link.rel_type + ", " +
                                      (timex ? "timex " : "event ") + link.arg1.id + " / " + link.arg2.id));
            continue;
        }
        if (link.arg1.kind != IntervalKind::EventInstance || link.arg2.kind != IntervalKind::EventInstance) {
            continue;
        }
        const EventInstance* a = doc.find_instance(link.arg1.id);
        const EventInstance* b = doc.find_instance(link.arg2.id);
        if (a && b && !a->event_id.empty() && a->event_id == b->event_id) {
            out.push_back(finding(doc, "tlink_loop", Severity::Warning, {link.lid, link.arg1.id, link.arg2.id},
                                  "TLINK ID " + link.lid + " may be a loop (eventID match), type " + link.rel_type +
                                      ", event " + link.arg1.id + " / " + link.arg2.id +
                                      " - check document manually"));
        }
    }
    return out;
}

std::vector<CheckFinding> check_orphans(const Document& doc) {
    std::set<IntervalRef> linked;
    std::set<std::string> referenced_signals;
    for (const auto& link : doc.links) {
        linked.insert(link.arg1);
        linked.insert(link.arg2);
        if (link.signal_id) {
            referenced_signals.insert(*link.signal_id);
        }
    }
    std::set<std::string> instantiated;
    for (const auto& inst : doc.instances) {
        instantiated.insert(inst.event_id);
        if (auto sid = find_attribute(inst.attributes, "signalID"); sid && !sid->empty()) {
            referenced_signals.insert(std::string(*sid));
        }
    }

    std::vector<CheckFinding> out;
    auto add = [&](std::string id, std::string message) {
        out.push_back(finding(doc, "orphans", Severity::Error, {std::move(id)}, std::move(message)));
    };
    for (const auto& t : doc.timexes) {
        if (!linked.contains({IntervalKind::Timex, t.tid})) {
            add(t.tid, "TIMEX3 " + t.tid + " not in any link");
        }
    }
    for (const auto& inst : doc.instances) {
        if (!linked.contains({IntervalKind::EventInstance, inst.eiid})) {
            add(inst.eiid, "MAKEINSTANCE " + inst.eiid + " not in any link");
        }
    }
    for (const auto& ev : doc.events) {
        if (!instantiated.contains(ev.eid)) {
            add(ev.eid, "EVENT " + ev.eid + " never instantiated");
        }
    }
    for (const auto& inst : doc.instances) {
        if (!doc.find_event(inst.event_id)) {
            add(inst.eiid, "MAKEINSTANCE " + inst.eiid + " instantiates missing EVENT " +
                               (inst.event_id.empty() ? std::string("(none)") : inst.event_id));
        }
    }
    for (const auto& s : doc.signals) {
        if (!referenced_signals.contains(s.sid)) {
            add(s.sid, "SIGNAL " + s.sid + " not referenced by any link or instance");
        }
    }
    return out;
}

} // namespace tmlwb
