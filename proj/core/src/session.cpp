#include "tmlwb/session.hpp"

#include <cstdio>

namespace tmlwb {

FoldScheme resolve_fold(FoldName name, const std::filesystem::path& workspace) {
    switch (name) {
    case FoldName::None:
        return FoldScheme::none();
    case FoldName::Cavat:
        return FoldScheme::cavat();
    case FoldName::Compact:
        return FoldScheme::compact();
    case FoldName::Sputlink:
        break;
    }
    const auto path = workspace / "folds" / "sputlink.fold";
    if (!std::filesystem::exists(path)) {
        throw Error("fold sputlink needs a mapping file at " + path.string() +
                    " (lines of ORIGINAL<TAB>TARGET<TAB>swap|noswap)");
    }
    FoldScheme scheme = FoldScheme::from_mapping_file(FoldName::Sputlink, path);
    if (scheme.mapping.empty()) {
        throw Error("fold mapping " + path.string() + " has no rules; populate it before importing");
    }
    return scheme;
}

Session::Session(Store& store, std::ostream& out, FindingFormat findings)
    : store_(store), out_(out), findings_(findings), registry_(CheckRegistry::with_builtins()) {}

Session::Outcome Session::execute_line(std::string_view line) {
    if (is_blank_command(line)) {
        return Outcome::Ok;
    }
    try {
        const Command cmd = parse_command(line);
        if (std::holds_alternative<ExitCommand>(cmd)) {
            return Outcome::Exit;
        }
        execute(cmd);
        return Outcome::Ok;
    } catch (const std::exception& e) {
        had_error_ = true;
        out_ << "error: " << e.what() << "\n";
        out_.flush();
        return Outcome::Failed;
    }
}

void Session::execute(const Command& command) {
    std::visit([this](const auto& c) { run(c); }, command);
    out_.flush();
}

const Document* Session::browsed() const {
    if (!browsed_id_ || !store_.active()) {
        return nullptr;
    }
    return store_.active()->find_document(*browsed_id_);
}

int Session::exit_code() const {
    if (had_error_) {
        return 1;
    }
    return had_error_findings_ ? 2 : 0;
}

const Corpus& Session::active() const {
    const Corpus* c = store_.active();
    if (!c) {
        throw Error("no corpus selected; use 'corpus use <name>'");
    }
    return *c;
}

void Session::run(const CorpusImport& c) {
    std::filesystem::path dir(c.directory);
    std::string name = c.name.value_or("");
    if (name.empty()) {
        name = dir.lexically_normal().filename().string();
        if (name.empty()) {
            name = dir.lexically_normal().parent_path().filename().string();
        }
    }
    if (!valid_corpus_name(name)) {
        throw Error("invalid corpus name '" + name + "'; use letters, digits, '_', '-' and '.'");
    }
    if (store_.contains(name)) {
        throw Error("corpus '" + name + "' already exists");
    }
    const FoldScheme scheme = resolve_fold(c.fold, store_.root());
    ImportResult result = import_corpus(dir, name, scheme);
    for (const auto& issue : result.issues) {
        out_ << (issue.is_error ? "skipped (error) " : "skipped ") << issue.filename << ": " << issue.message << "\n";
    }
    store_.save_corpus(result.corpus);
    out_ << "Imported " << result.corpus.documents.size() << " documents into corpus '" << name
         << "' (fold=" << to_string(c.fold) << ")\n";
}

void Session::run(const CorpusList&) {
    const StoreCatalog catalog = store_.list_corpora();
    if (catalog.entries.empty()) {
        out_ << "No corpora imported.\n";
        return;
    }
    std::size_t width = 4;
    for (const auto& e : catalog.entries) {
        width = std::max(width, e.name.size());
    }
    for (const auto& e : catalog.entries) {
        const bool active = store_.active() && store_.active()->name == e.name;
        char count[32];
        std::snprintf(count, sizeof count, "%6zu", e.document_count);
        out_ << (active ? "* " : "  ") << e.name << std::string(width - e.name.size() + 2, ' ') << count
             << " docs  " << e.imported_at << "  " << e.note << "\n";
    }
}

void Session::run(const CorpusUse& c) {
    const Corpus& corpus = store_.use_corpus(c.name);
    browsed_id_.reset();
    out_ << "Using corpus '" << corpus.name << "' (" << corpus.documents.size() << " documents)\n";
}

void Session::run(const CorpusInfo&) { out_ << store_.corpus_info() << "\n"; }

void Session::run(const CorpusDelete& c) {
    const bool was_active = store_.active() && store_.active()->name == c.name;
    store_.delete_corpus(c.name);
    if (was_active) {
        browsed_id_.reset();
    }
    out_ << "Deleted corpus '" << c.name << "'\n";
}

void Session::run(const ShowCommand& c) { out_ << format_report(run_query(active(), c.query), c.query.format); }

void Session::run(const BrowseDoc& c) {
    const Document& doc = select_document(active(), c.key);
    browsed_id_ = doc.doc_id;
    out_ << "Browsing " << doc.filename << " (id " << doc.doc_id << "): " << doc.events.size() << " events, "
         << doc.instances.size() << " instances, " << doc.timexes.size() << " timexes, " << doc.signals.size()
         << " signals, " << doc.links.size() << " links\n";
}

void Session::run(const BrowseTag& c) {
    active();
    const Document* doc = browsed();
    if (!doc) {
        throw Error("no document selected; use 'browse doc <id|filename>' first");
    }
    out_ << browse_tag(*doc, c.tag, c.id, c.format);
}

void Session::run(const CheckList&) {
    const auto checks = registry_.list_checks();
    std::size_t width = 0;
    for (const auto& d : checks) {
        width = std::max(width, d.name.size());
    }
    for (const auto& d : checks) {
        out_ << d.name << std::string(width - d.name.size() + 2, ' ') << "v" << d.version << "  " << d.description
             << "\n";
    }
}

void Session::run(const CheckCommand& c) {
    const CheckRun result = run_check(registry_, active(), c.name, CheckTargets{c.all, c.targets}, browsed());
    out_ << format_check_run(result, findings_);
    if (result.count(Severity::Error) > 0) {
        had_error_findings_ = true;
    }
}

void Session::run(const ContextCommand& c) {
    active();
    const Document* doc = browsed();
    if (!doc) {
        throw Error("no document selected; use 'browse doc <id|filename>' first");
    }
    out_ << show_link_context(*doc, c.lid);
}

void Session::run(const HelpCommand& c) { out_ << usage(c.topic) << "\n"; }

void Session::run(const ExitCommand&) {}

} // namespace tmlwb
