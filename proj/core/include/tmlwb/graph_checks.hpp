#pragma once

// split_graph, tlink_loop and orphans.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tmlwb/model.hpp"

namespace tmlwb {

enum class Severity { Error, Warning, Info };

std::string_view to_string(Severity severity);

struct CheckFinding {
    std::string check;
    std::string document;
    int doc_id = 0;
    Severity severity = Severity::Info;
    std::vector<std::string> subjects;
    std::string message;

    bool operator==(const CheckFinding&) const = default;
};

using IntervalSet = std::set<IntervalRef>;

// Connected groups of intervals, built one TLINK at a time: a link joins the
// set holding either argument, merges two sets, or starts a new one.
std::vector<IntervalSet> build_subgraphs(const Document& doc);

struct SubgraphReport {
    std::size_t subgraph_count = 0;
    std::size_t node_count = 0;
    std::size_t tlink_count = 0;
    // Sub-graphs described by exactly one TLINK.
    std::size_t isolated_count = 0;
    std::size_t isolated_nodes = 0;
    std::size_t isolated_tlinks = 0;
    double isolated_subgraph_pct = 0.0;
    double isolated_node_pct = 0.0;
    double isolated_tlink_pct = 0.0;
    double mean_size = 0.0;
    std::size_t max_size = 0;
    double largest_node_pct = 0.0;
    double entropy = 0.0;
    std::map<std::size_t, std::size_t> size_histogram;
};

// Statistics over a list of sub-graph sizes; `tlinks_per_subgraph` runs
// parallel to `sizes`.
SubgraphReport subgraph_stats(const std::vector<std::size_t>& sizes,
                              const std::vector<std::size_t>& tlinks_per_subgraph);
SubgraphReport subgraph_stats(const Document& doc);

// -sum(p ln p) / ln N over sub-graph sizes, N the total node count.
double size_entropy(const std::vector<std::size_t>& sizes);

// The printed report, one line per element.
std::vector<std::string> format_subgraph_report(const SubgraphReport& report);

std::vector<CheckFinding> check_split_graph(const Document& doc);
std::vector<CheckFinding> check_tlink_loop(const Document& doc);
std::vector<CheckFinding> check_orphans(const Document& doc);

} // namespace tmlwb
