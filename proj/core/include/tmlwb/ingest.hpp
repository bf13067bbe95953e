#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tmlwb/model.hpp"

namespace tmlwb {

// The file could not be read or is not well-formed XML.
class ParseError : public Error {
public:
    using Error::Error;
};

// Parses one TimeML document held in memory. The document body is the
// content of the TEXT element when there is one, otherwise everything under
// the root; only body text is tokenized and given positions.
Document parse_timeml(std::string_view xml, std::string filename);

// Reads and parses a TimeML file; the document keeps the file's basename.
Document parse_document(const std::filesystem::path& path);

// A single re-serialized tag, as produced by `browse ... as timeml`.
using TagObject = std::variant<Event, EventInstance, Timex3, Signal, Link>;

// Parses a fragment holding exactly one EVENT, MAKEINSTANCE, TIMEX3, SIGNAL,
// TLINK, SLINK or ALINK element.
TagObject parse_fragment(std::string_view xml);

enum class FoldName { None, Cavat, Sputlink, Compact };

std::string_view to_string(FoldName name);
std::optional<FoldName> parse_fold_name(std::string_view text);

struct FoldRule {
    RelType target = RelType::Before;
    bool swap_args = false;

    bool operator==(const FoldRule&) const = default;
};

// Relation rewriting applied to TLINKs at import time.
struct FoldScheme {
    FoldName name = FoldName::None;
    std::map<RelType, FoldRule> mapping;
    // True when every rule preserves the point assertions of the link it
    // rewrites; computed from the mapping, not declared.
    bool lossless = true;

    static FoldScheme none();
    static FoldScheme cavat();
    static FoldScheme compact();

    // Reads `ORIGINAL<TAB>TARGET<TAB>swap|noswap` lines; `#` starts a comment.
    static FoldScheme from_mapping_text(FoldName name, std::string_view text);
    static FoldScheme from_mapping_file(FoldName name, const std::filesystem::path& path);
};

// Rewrites every TLINK whose relation has a rule; SLINK/ALINK are untouched.
Document apply_fold(Document doc, const FoldScheme& scheme);
Link fold_link(Link link, const FoldScheme& scheme);

struct ImportIssue {
    std::string filename;
    std::string message;
    bool is_error = false;
};

struct ImportResult {
    Corpus corpus;
    std::vector<ImportIssue> issues;
};

// Parses every regular file directly inside `directory`, numbering documents
// from 1 in filename order, and folds them. Files that do not look like XML
// are skipped with a warning; malformed XML is skipped with an error. Throws
// Error when the directory is missing or nothing could be parsed.
ImportResult import_corpus(const std::filesystem::path& directory, const std::string& name, const FoldScheme& fold);

} // namespace tmlwb
