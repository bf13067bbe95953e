#pragma once

// Document and tag inspection for the `browse` and `context` commands.

#include <string>
#include <string_view>
#include <vector>

#include "tmlwb/ingest.hpp"
#include "tmlwb/model.hpp"
#include "tmlwb/query.hpp"

namespace tmlwb {

enum class BrowseFormat { Screen, Csv, Timeml };

// Looks a document up by numeric id or filename. Unknown keys raise an
// Error naming the closest filenames.
const Document& select_document(const Corpus& corpus, std::string_view key);

// Filenames ordered by edit distance to `key`, at most `limit` of them.
std::vector<std::string> nearest_filenames(const Corpus& corpus, std::string_view key, std::size_t limit = 3);

// The tag `id` of family `tag` in `doc`; throws Error when absent.
TagObject find_tag(const Document& doc, TagFamily tag, std::string_view id);

// Attributes in output order: the id first, then the rest alphabetically.
// Links put relType and the two argument attributes right after the id.
Attributes canonical_attributes(const TagObject& tag);

// A single TimeML element; parse_fragment() reads it back.
std::string serialize_tag(const TagObject& tag);

// Equality up to attribute order and token positions, which a fragment
// cannot carry.
bool equivalent(const TagObject& a, const TagObject& b);

std::string browse_tag(const Document& doc, TagFamily tag, std::string_view id, BrowseFormat format);

// The sentences holding a link's arguments with the arguments bracketed
// as [1: ...] and [2: ...].
std::string show_link_context(const Document& doc, std::string_view lid);

} // namespace tmlwb
