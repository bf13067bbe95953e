#include "tmlwb/checks.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "tmlwb/browse.hpp"
#include "tmlwb/point_algebra.hpp"

namespace tmlwb {

std::vector<CheckFinding> check_consistent(const Document& doc) {
    const ConsistencyResult result = check_consistency(doc);
    if (result.consistent) {
        return {{"consistent", doc.filename, doc.doc_id, Severity::Info, {},
                 "Consistent closure (" + std::to_string(result.processed) + " assertions processed)"}};
    }
    return {{"consistent",
             doc.filename,
             doc.doc_id,
             Severity::Error,
             {result.conflict->left.name(), result.conflict->right.name()},
             inconsistency_message(*result.conflict)}};
}

CheckRegistry CheckRegistry::with_builtins() {
    CheckRegistry r;
    r.register_check({"consistent", "1", "Temporal graph consistency checker"},
                     [](const Document& d, const Corpus&) { return check_consistent(d); });
    r.register_check({"split_graph", "1", "Split graph detection"},
                     [](const Document& d, const Corpus&) { return check_split_graph(d); });
    r.register_check({"tlink_loop", "1", "TLINK loop checker"},
                     [](const Document& d, const Corpus&) { return check_tlink_loop(d); });
    r.register_check({"orphans", "1", "Orphaned tag detection"},
                     [](const Document& d, const Corpus&) { return check_orphans(d); });
    return r;
}

void CheckRegistry::register_check(CheckDescriptor descriptor, CheckFunction function) {
    if (descriptor.name.empty()) {
        throw Error("check name must not be empty");
    }
    if (entries_.contains(descriptor.name)) {
        throw Error("check '" + descriptor.name + "' is already registered");
    }
    const std::string name = descriptor.name;
    entries_.emplace(name, Entry{std::move(descriptor), std::move(function)});
}

std::vector<CheckDescriptor> CheckRegistry::list_checks() const {
    std::vector<CheckDescriptor> out;
    for (const auto& [name, e] : entries_) {
        out.push_back(e.descriptor);
    }
    return out;
}

const CheckRegistry::Entry& CheckRegistry::entry(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) {
        std::string known;
        for (const auto& [n, e] : entries_) {
            known += (known.empty() ? "" : ", ") + n;
        }
        throw Error("unknown check '" + name + "'; available checks: " + known);
    }
    return it->second;
}

const CheckDescriptor& CheckRegistry::descriptor(const std::string& name) const { return entry(name).descriptor; }

std::vector<CheckFinding> CheckRegistry::run(const std::string& name, const Document& doc,
                                             const Corpus& corpus) const {
    return entry(name).function(doc, corpus);
}

std::size_t CheckRun::count(Severity severity) const {
    std::size_t n = 0;
    for (const auto& d : documents) {
        for (const auto& f : d.findings) {
            n += f.severity == severity ? 1 : 0;
        }
    }
    return n;
}

std::vector<CheckFinding> CheckRun::all_findings() const {
    std::vector<CheckFinding> out;
    for (const auto& d : documents) {
        out.insert(out.end(), d.findings.begin(), d.findings.end());
    }
    return out;
}

CheckRun run_check(const CheckRegistry& registry, const Corpus& corpus, const std::string& name,
                   const CheckTargets& targets, const Document* browsed) {
    CheckRun run{registry.descriptor(name), {}};
    std::vector<const Document*> docs;
    if (targets.all) {
        for (const auto& d : corpus.documents) {
            docs.push_back(&d);
        }
    } else if (!targets.keys.empty()) {
        for (const auto& key : targets.keys) {
            docs.push_back(&select_document(corpus, key));
        }
    } else if (browsed) {
        docs.push_back(browsed);
    } else {
        throw Error("no target document: use 'in <id|filename>', 'in all', or browse a document first");
    }
    for (const Document* d : docs) {
        run.documents.push_back({d, registry.run(name, *d, corpus)});
    }
    return run;
}

std::string finding_to_json(const CheckFinding& f) {
    nlohmann::json j = {{"check", f.check},       {"document", f.document}, {"doc_id", f.doc_id},
                        {"severity", to_string(f.severity)}, {"subjects", f.subjects}, {"message", f.message}};
    return j.dump();
}

std::string format_check_run(const CheckRun& run, FindingFormat format) {
    std::ostringstream out;
    if (format == FindingFormat::JsonLines) {
        for (const auto& d : run.documents) {
            for (const auto& f : d.findings) {
                out << finding_to_json(f) << "\n";
            }
        }
        return out.str();
    }
    out << "# " << run.descriptor.description << " v" << run.descriptor.version << " loaded\n";
    for (const auto& d : run.documents) {
        out << "# Checking " << d.doc->filename << " (id " << d.doc->doc_id << ")\n";
        for (const auto& f : d.findings) {
            out << f.message << "\n";
        }
    }
    const std::size_t n = run.documents.size();
    out << "# Done: " << n << (n == 1 ? " document" : " documents") << " checked; " << run.count(Severity::Error)
        << " errors, " << run.count(Severity::Warning) << " warnings, " << run.count(Severity::Info) << " info\n";
    return out.str();
}

} // namespace tmlwb
