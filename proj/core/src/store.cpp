#include "tmlwb/store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tmlwb {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Exclusive advisory lock on <root>/lock, held for the lifetime of the object.
class WriteLock {
public:
    explicit WriteLock(const fs::path& root) {
        fd_ = ::open((root / "lock").c_str(), O_RDWR | O_CREAT, 0644);
        if (fd_ < 0 || ::flock(fd_, LOCK_EX) != 0) {
            if (fd_ >= 0) {
                ::close(fd_);
            }
            throw StoreError("cannot lock workspace " + root.string());
        }
    }
    ~WriteLock() {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    WriteLock(const WriteLock&) = delete;
    WriteLock& operator=(const WriteLock&) = delete;

private:
    int fd_ = -1;
};

json attributes_to_json(const Attributes& attrs) {
    json out = json::array();
    for (const auto& a : attrs) {
        out.push_back(json::array({a.name, a.value}));
    }
    return out;
}

Attributes attributes_from_json(const json& j) {
    Attributes out;
    for (const auto& a : j) {
        out.push_back({a.at(0).get<std::string>(), a.at(1).get<std::string>()});
    }
    return out;
}

json extent_to_json(const TextExtent& e) {
    json out = {{"text", e.text}, {"tokens", nullptr}};
    if (e.tokens) {
        out["tokens"] = json::array({e.tokens->first, e.tokens->count});
    }
    return out;
}

TextExtent extent_from_json(const json& j) {
    TextExtent e;
    e.text = j.at("text").get<std::string>();
    if (!j.at("tokens").is_null()) {
        e.tokens = TokenRange{j.at("tokens").at(0).get<std::size_t>(), j.at("tokens").at(1).get<std::size_t>()};
    }
    return e;
}

json interval_to_json(const IntervalRef& r) {
    return {{"kind", r.kind == IntervalKind::Timex ? "timex" : "instance"}, {"id", r.id}};
}

IntervalRef interval_from_json(const json& j) {
    return {j.at("kind").get<std::string>() == "timex" ? IntervalKind::Timex : IntervalKind::EventInstance,
            j.at("id").get<std::string>()};
}

json optional_to_json(const std::optional<std::string>& v) { return v ? json(*v) : json(nullptr); }

std::optional<std::string> optional_from_json(const json& j) {
    return j.is_null() ? std::nullopt : std::optional(j.get<std::string>());
}

LinkKind link_kind_from(const std::string& s) {
    if (s == "SLINK") {
        return LinkKind::SLink;
    }
    if (s == "ALINK") {
        return LinkKind::ALink;
    }
    return LinkKind::TLink;
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw StoreError("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out) {
        throw StoreError("cannot write " + path.string());
    }
}

std::string doc_file_name(int doc_id) {
    std::ostringstream ss;
    ss.width(6);
    ss.fill('0');
    ss << doc_id;
    return ss.str() + ".json";
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

fs::path default_workspace_root() {
    if (const char* home = std::getenv("TMLWB_HOME"); home && *home) {
        return home;
    }
    if (const char* home = std::getenv("HOME"); home && *home) {
        return fs::path(home) / ".tml-workbench";
    }
    return ".tml-workbench";
}

bool valid_corpus_name(std::string_view name) {
    if (name.empty() || name.front() == '.') {
        return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
    });
}

std::string serialize_document(const Document& doc) {
    json j;
    j["doc_id"] = doc.doc_id;
    j["filename"] = doc.filename;
    json tokens = json::array();
    for (const auto& t : doc.tokens) {
        tokens.push_back(json::array({t.sentence_index, t.word_index, t.surface, t.lemma}));
    }
    j["tokens"] = std::move(tokens);

    json events = json::array();
    for (const auto& e : doc.events) {
        events.push_back({{"eid", e.eid},
                          {"class", e.event_class},
                          {"attributes", attributes_to_json(e.attributes)},
                          {"extent", extent_to_json(e.extent)}});
    }
    j["events"] = std::move(events);

    json instances = json::array();
    for (const auto& i : doc.instances) {
        instances.push_back(
            {{"eiid", i.eiid}, {"event_id", i.event_id}, {"attributes", attributes_to_json(i.attributes)}});
    }
    j["instances"] = std::move(instances);

    json timexes = json::array();
    for (const auto& t : doc.timexes) {
        timexes.push_back(
            {{"tid", t.tid}, {"attributes", attributes_to_json(t.attributes)}, {"extent", extent_to_json(t.extent)}});
    }
    j["timexes"] = std::move(timexes);

    json signals = json::array();
    for (const auto& s : doc.signals) {
        signals.push_back(
            {{"sid", s.sid}, {"attributes", attributes_to_json(s.attributes)}, {"extent", extent_to_json(s.extent)}});
    }
    j["signals"] = std::move(signals);

    json links = json::array();
    for (const auto& l : doc.links) {
        links.push_back({{"kind", std::string(to_string(l.kind))},
                         {"lid", l.lid},
                         {"rel_type", l.rel_type},
                         {"arg1", interval_to_json(l.arg1)},
                         {"arg2", interval_to_json(l.arg2)},
                         {"arg1_attribute", l.arg1_attribute},
                         {"arg2_attribute", l.arg2_attribute},
                         {"signal_id", optional_to_json(l.signal_id)},
                         {"origin", optional_to_json(l.origin)},
                         {"extra", attributes_to_json(l.extra)}});
    }
    j["links"] = std::move(links);
    j["warnings"] = doc.warnings;
    return j.dump();
}

Document deserialize_document(const std::string& text) {
    const json j = json::parse(text);
    Document doc;
    doc.doc_id = j.at("doc_id").get<int>();
    doc.filename = j.at("filename").get<std::string>();
    for (const auto& t : j.at("tokens")) {
        doc.tokens.push_back(
            {t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<std::string>(), t.at(3).get<std::string>()});
    }
    for (const auto& e : j.at("events")) {
        doc.events.push_back({e.at("eid").get<std::string>(), e.at("class").get<std::string>(),
                              attributes_from_json(e.at("attributes")), extent_from_json(e.at("extent"))});
    }
    for (const auto& i : j.at("instances")) {
        doc.instances.push_back({i.at("eiid").get<std::string>(), i.at("event_id").get<std::string>(),
                                 attributes_from_json(i.at("attributes"))});
    }
    for (const auto& t : j.at("timexes")) {
        doc.timexes.push_back(
            {t.at("tid").get<std::string>(), attributes_from_json(t.at("attributes")), extent_from_json(t.at("extent"))});
    }
    for (const auto& s : j.at("signals")) {
        doc.signals.push_back(
            {s.at("sid").get<std::string>(), attributes_from_json(s.at("attributes")), extent_from_json(s.at("extent"))});
    }
    for (const auto& l : j.at("links")) {
        Link link;
        link.kind = link_kind_from(l.at("kind").get<std::string>());
        link.lid = l.at("lid").get<std::string>();
        link.rel_type = l.at("rel_type").get<std::string>();
        link.arg1 = interval_from_json(l.at("arg1"));
        link.arg2 = interval_from_json(l.at("arg2"));
        link.arg1_attribute = l.at("arg1_attribute").get<std::string>();
        link.arg2_attribute = l.at("arg2_attribute").get<std::string>();
        link.signal_id = optional_from_json(l.at("signal_id"));
        link.origin = optional_from_json(l.at("origin"));
        link.extra = attributes_from_json(l.at("extra"));
        doc.links.push_back(std::move(link));
    }
    doc.warnings = j.at("warnings").get<std::vector<std::string>>();
    return doc;
}

std::uint64_t corpus_fingerprint(const Corpus& corpus) {
    std::uint64_t hash = 1469598103934665603ULL;
    auto mix = [&](std::string_view bytes) {
        for (unsigned char c : bytes) {
            hash ^= c;
            hash *= 1099511628211ULL;
        }
        hash ^= 0xff;
        hash *= 1099511628211ULL;
    };
    mix(corpus.name);
    mix(corpus.note);
    for (const auto& doc : corpus.documents) {
        mix(serialize_document(doc));
    }
    return hash;
}

Store::Store(fs::path root) : root_(std::move(root)) {}

bool Store::contains(const std::string& name) const {
    std::error_code ec;
    return valid_corpus_name(name) && fs::is_regular_file(corpora_dir() / name / "corpus.json", ec);
}

void Store::save_corpus(const Corpus& corpus) {
    if (!valid_corpus_name(corpus.name)) {
        throw StoreError("invalid corpus name '" + corpus.name + "' (use letters, digits, '_', '-', '.')");
    }
    std::error_code ec;
    fs::create_directories(corpora_dir(), ec);
    if (ec) {
        throw StoreError("cannot create workspace " + corpora_dir().string() + ": " + ec.message());
    }
    WriteLock lock(root_);
    if (contains(corpus.name)) {
        throw StoreError("corpus '" + corpus.name + "' already exists");
    }

    const fs::path staging = corpora_dir() / (".staging-" + corpus.name + "-" + std::to_string(::getpid()));
    const fs::path target = corpora_dir() / corpus.name;
    try {
        fs::remove_all(staging);
        fs::create_directories(staging / "docs");
        json meta = {{"name", corpus.name},
                     {"note", corpus.note},
                     {"imported_at", utc_timestamp()},
                     {"document_count", corpus.documents.size()}};
        write_text(staging / "corpus.json", meta.dump(2) + "\n");
        for (const auto& doc : corpus.documents) {
            write_text(staging / "docs" / doc_file_name(doc.doc_id), serialize_document(doc));
        }
        fs::remove_all(target);
        fs::rename(staging, target);
    } catch (const fs::filesystem_error& e) {
        fs::remove_all(staging, ec);
        throw StoreError(std::string("cannot save corpus: ") + e.what());
    } catch (const StoreError&) {
        fs::remove_all(staging, ec);
        throw;
    }
}

Corpus Store::load_corpus(const std::string& name) const {
    if (!contains(name)) {
        std::string names;
        for (const auto& e : list_corpora().entries) {
            names += names.empty() ? e.name : ", " + e.name;
        }
        throw StoreError("unknown corpus '" + name + "'; available: " + (names.empty() ? "(none)" : names));
    }
    const fs::path dir = corpora_dir() / name;
    const json meta = json::parse(read_text(dir / "corpus.json"));
    Corpus corpus;
    corpus.name = meta.at("name").get<std::string>();
    corpus.note = meta.at("note").get<std::string>();

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir / "docs")) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        corpus.documents.push_back(deserialize_document(read_text(f)));
    }
    return corpus;
}

void Store::delete_corpus(const std::string& name) {
    if (!contains(name)) {
        throw StoreError("unknown corpus '" + name + "'");
    }
    WriteLock lock(root_);
    std::error_code ec;
    fs::remove_all(corpora_dir() / name, ec);
    if (ec) {
        throw StoreError("cannot delete corpus '" + name + "': " + ec.message());
    }
    if (active_ && active_->name == name) {
        active_.reset();
    }
}

const Corpus& Store::use_corpus(const std::string& name) {
    active_ = load_corpus(name);
    return *active_;
}

const std::string& Store::corpus_info() const {
    if (!active_) {
        throw StoreError("no corpus selected");
    }
    return active_->note;
}

StoreCatalog Store::list_corpora() const {
    StoreCatalog catalog;
    std::error_code ec;
    if (fs::is_directory(corpora_dir(), ec)) {
        for (const auto& entry : fs::directory_iterator(corpora_dir())) {
            const std::string name = entry.path().filename().string();
            if (!entry.is_directory() || !valid_corpus_name(name) || !fs::exists(entry.path() / "corpus.json")) {
                continue;
            }
            const json meta = json::parse(read_text(entry.path() / "corpus.json"));
            catalog.entries.push_back({meta.at("name").get<std::string>(), meta.at("document_count").get<std::size_t>(),
                                       meta.at("note").get<std::string>(), meta.at("imported_at").get<std::string>()});
        }
    }
    std::sort(catalog.entries.begin(), catalog.entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
    if (active_) {
        catalog.active = active_->name;
    }
    return catalog;
}

} // namespace tmlwb
