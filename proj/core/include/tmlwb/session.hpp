#pragma once

// Command execution shared by the interactive prompt and batch runs.

#include <filesystem>
#include <ostream>
#include <string_view>

#include "tmlwb/checks.hpp"
#include "tmlwb/command.hpp"
#include "tmlwb/store.hpp"

namespace tmlwb {

// Built-in fold tables, or for SPUTLINK the mapping file
// `<workspace>/folds/sputlink.fold`.
FoldScheme resolve_fold(FoldName name, const std::filesystem::path& workspace);

class Session {
public:
    enum class Outcome { Ok, Failed, Exit };

    Session(Store& store, std::ostream& out, FindingFormat findings = FindingFormat::Text);

    // Parses and runs one line. Errors are printed as "error: ..." and
    // reported as Failed; they never end the session.
    Outcome execute_line(std::string_view line);
    void execute(const Command& command);

    CheckRegistry& registry() { return registry_; }
    const Document* browsed() const;

    bool had_error() const { return had_error_; }
    // True once a check run produced an ERROR finding.
    bool had_error_findings() const { return had_error_findings_; }
    // 0 clean, 1 a command failed, 2 ERROR findings.
    int exit_code() const;

private:
    const Corpus& active() const;
    void run(const CorpusImport& c);
    void run(const CorpusList& c);
    void run(const CorpusUse& c);
    void run(const CorpusInfo& c);
    void run(const CorpusDelete& c);
    void run(const ShowCommand& c);
    void run(const BrowseDoc& c);
    void run(const BrowseTag& c);
    void run(const CheckList& c);
    void run(const CheckCommand& c);
    void run(const ContextCommand& c);
    void run(const HelpCommand& c);
    void run(const ExitCommand& c);

    Store& store_;
    std::ostream& out_;
    FindingFormat findings_;
    CheckRegistry registry_;
    std::optional<int> browsed_id_;
    bool had_error_ = false;
    bool had_error_findings_ = false;
};

} // namespace tmlwb
