#pragma once

// Parsing of workbench command lines.
//
//   corpus (import <dir> [as <name>] [fold <scheme>] | list | use <name> | info | delete <name>)
//   show (list|distribution|state) of <tag> <field>
//        [where <field> (is [not] <value> | is [not] filled | is [not] empty | is unfilled)]
//        [by (document|sentence)] [min-freq <n>] [as (screen|csv|tex)]
//   browse (doc <id|filename> | <tag> <id> [as (screen|csv|timeml)])
//   check (list | <name> [in (<id|filename>)+ | in all])
//   context <link id>
//   help [<command>]
//   exit
//
// Keywords are case-insensitive. Words may be double-quoted to include
// spaces.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tmlwb/browse.hpp"
#include "tmlwb/checks.hpp"
#include "tmlwb/ingest.hpp"
#include "tmlwb/query.hpp"

namespace tmlwb {

// A command line that does not fit the grammar. `column` is the 1-based
// offset of the offending word.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t column)
        : Error("syntax error at column " + std::to_string(column) + ": " + message), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

struct CorpusImport {
    std::string directory;
    std::optional<std::string> name;
    FoldName fold = FoldName::None;
    bool operator==(const CorpusImport&) const = default;
};
struct CorpusList {
    bool operator==(const CorpusList&) const = default;
};
struct CorpusUse {
    std::string name;
    bool operator==(const CorpusUse&) const = default;
};
struct CorpusInfo {
    bool operator==(const CorpusInfo&) const = default;
};
struct CorpusDelete {
    std::string name;
    bool operator==(const CorpusDelete&) const = default;
};
struct ShowCommand {
    Query query;
    bool operator==(const ShowCommand&) const = default;
};
struct BrowseDoc {
    std::string key;
    bool operator==(const BrowseDoc&) const = default;
};
struct BrowseTag {
    TagFamily tag = TagFamily::Event;
    std::string id;
    BrowseFormat format = BrowseFormat::Screen;
    bool operator==(const BrowseTag&) const = default;
};
struct CheckList {
    bool operator==(const CheckList&) const = default;
};
struct CheckCommand {
    std::string name;
    bool all = false;
    std::vector<std::string> targets;
    bool operator==(const CheckCommand&) const = default;
};
struct ContextCommand {
    std::string lid;
    bool operator==(const ContextCommand&) const = default;
};
struct HelpCommand {
    std::string topic;
    bool operator==(const HelpCommand&) const = default;
};
struct ExitCommand {
    bool operator==(const ExitCommand&) const = default;
};

using Command = std::variant<CorpusImport, CorpusList, CorpusUse, CorpusInfo, CorpusDelete, ShowCommand, BrowseDoc,
                             BrowseTag, CheckList, CheckCommand, ContextCommand, HelpCommand, ExitCommand>;

// Throws SyntaxError. Blank lines and `#` comments are not commands; use
// is_blank_command() first.
Command parse_command(std::string_view line);

bool is_blank_command(std::string_view line);

// Splits a `-c` argument on semicolons and newlines that are not inside
// quotes; pieces are trimmed and blank ones dropped.
std::vector<std::string> split_commands(std::string_view text);

// Usage text for a command family ("corpus", "show", ...), or all of them.
std::string usage(std::string_view family = {});

} // namespace tmlwb
