#pragma once

// On-disk workspace holding imported corpora.
//
// Layout under the workspace root:
//
//   <root>/lock                      advisory write lock
//   <root>/corpora/<name>/corpus.json  name, note, import time, document count
//   <root>/corpora/<name>/docs/<n>.json  one file per document
//
// The format is private to the tool; only save/load fidelity is promised.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tmlwb/model.hpp"

namespace tmlwb {

class StoreError : public Error {
public:
    using Error::Error;
};

struct CatalogEntry {
    std::string name;
    std::size_t document_count = 0;
    std::string note;
    std::string imported_at;
};

struct StoreCatalog {
    std::vector<CatalogEntry> entries;
    std::optional<std::string> active;
};

// $TMLWB_HOME, or ~/.tml-workbench when unset.
std::filesystem::path default_workspace_root();

// Corpus names are restricted to [A-Za-z0-9_.-] and may not start with '.'.
bool valid_corpus_name(std::string_view name);

class Store {
public:
    explicit Store(std::filesystem::path root = default_workspace_root());

    const std::filesystem::path& root() const { return root_; }

    // Writes `corpus` atomically. Refuses an existing name.
    void save_corpus(const Corpus& corpus);
    Corpus load_corpus(const std::string& name) const;
    void delete_corpus(const std::string& name);
    bool contains(const std::string& name) const;

    // Loads `name` and makes it the active corpus of this session.
    const Corpus& use_corpus(const std::string& name);
    const Corpus* active() const { return active_ ? &*active_ : nullptr; }
    // Note of the active corpus; throws when none is selected.
    const std::string& corpus_info() const;

    StoreCatalog list_corpora() const;

private:
    std::filesystem::path corpora_dir() const { return root_ / "corpora"; }

    std::filesystem::path root_;
    std::optional<Corpus> active_;
};

// Serialized forms used by the store, exposed for fingerprinting and tests.
std::string serialize_document(const Document& doc);
Document deserialize_document(const std::string& text);

// 64-bit FNV-1a over the serialized corpus.
std::uint64_t corpus_fingerprint(const Corpus& corpus);

} // namespace tmlwb
