#pragma once

// Registry and runner for document checks.
//
// A check is a function from a read-only document (plus the corpus it
// belongs to) to findings. Four are built in: consistent, split_graph,
// tlink_loop and orphans; others can be registered at run time.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tmlwb/graph_checks.hpp"
#include "tmlwb/model.hpp"

namespace tmlwb {

struct CheckDescriptor {
    std::string name;
    std::string version;
    std::string description;

    bool operator==(const CheckDescriptor&) const = default;
};

using CheckFunction = std::function<std::vector<CheckFinding>(const Document&, const Corpus&)>;

std::vector<CheckFinding> check_consistent(const Document& doc);

class CheckRegistry {
public:
    // A registry holding the built-in checks.
    static CheckRegistry with_builtins();

    // Throws Error when the name is taken.
    void register_check(CheckDescriptor descriptor, CheckFunction function);

    // Sorted by name.
    std::vector<CheckDescriptor> list_checks() const;

    bool contains(const std::string& name) const { return entries_.contains(name); }
    const CheckDescriptor& descriptor(const std::string& name) const;
    std::vector<CheckFinding> run(const std::string& name, const Document& doc, const Corpus& corpus) const;

private:
    struct Entry {
        CheckDescriptor descriptor;
        CheckFunction function;
    };
    const Entry& entry(const std::string& name) const;

    std::map<std::string, Entry> entries_;
};

// `in all`, an explicit list of ids/filenames, or neither (the browsed
// document).
struct CheckTargets {
    bool all = false;
    std::vector<std::string> keys;
};

struct DocumentFindings {
    const Document* doc = nullptr;
    std::vector<CheckFinding> findings;
};

struct CheckRun {
    CheckDescriptor descriptor;
    std::vector<DocumentFindings> documents;

    std::size_t count(Severity severity) const;
    std::vector<CheckFinding> all_findings() const;
};

// Resolves every target before running anything; unknown checks and
// targets raise Error.
CheckRun run_check(const CheckRegistry& registry, const Corpus& corpus, const std::string& name,
                   const CheckTargets& targets, const Document* browsed);

enum class FindingFormat { Text, JsonLines };

// Text: banner, a `# Checking` line per document, findings, summary.
// JsonLines: one JSON object per finding and nothing else.
std::string format_check_run(const CheckRun& run, FindingFormat format);

std::string finding_to_json(const CheckFinding& finding);

} // namespace tmlwb
