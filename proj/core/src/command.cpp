#include "tmlwb/command.hpp"

#include <algorithm>
#include <array>
#include <charconv>

namespace tmlwb {

namespace {

struct Word {
    std::string text;
    std::size_t column = 0;
    bool quoted = false;
};

constexpr std::array<std::string_view, 7> kFamilies = {"corpus", "show", "browse", "check", "context", "help", "exit"};

std::vector<Word> split_words(std::string_view line) {
    std::vector<Word> words;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        Word w;
        w.column = i + 1;
        if (line[i] == '"') {
            w.quoted = true;
            ++i;
            while (i < line.size() && line[i] != '"') {
                if (line[i] == '\\' && i + 1 < line.size()) {
                    ++i;
                }
                w.text += line[i++];
            }
            if (i >= line.size()) {
                throw SyntaxError("unterminated quote", w.column);
            }
            ++i;
        } else {
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
                w.text += line[i++];
            }
        }
        words.push_back(std::move(w));
    }
    return words;
}

std::size_t distance(std::string_view a, std::string_view b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) {
        row[j] = j;
    }
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

class Parser {
public:
    Parser(std::string_view line, std::vector<Word> words) : line_(line), words_(std::move(words)) {}

    Command parse() {
        const Word& head = next("a command");
        const std::string family = to_lower(head.text);
        Command cmd;
        if (family == "corpus") {
            cmd = parse_corpus();
        } else if (family == "show") {
            cmd = parse_show();
        } else if (family == "browse") {
            cmd = parse_browse();
        } else if (family == "check") {
            cmd = parse_check();
        } else if (family == "context") {
            cmd = ContextCommand{next("a link id").text};
        } else if (family == "help") {
            cmd = HelpCommand{at_end() ? std::string() : to_lower(next("a topic").text)};
        } else if (family == "exit" || family == "quit") {
            cmd = ExitCommand{};
        } else {
            std::string_view best = kFamilies.front();
            for (auto f : kFamilies) {
                if (distance(family, f) < distance(family, best)) {
                    best = f;
                }
            }
            throw SyntaxError("unknown command '" + head.text + "'; did you mean '" + std::string(best) +
                                  "'?\nusage: " + usage(best),
                              head.column);
        }
        if (!at_end()) {
            fail("unexpected '" + peek().text + "'", peek());
        }
        return cmd;
    }

private:
    bool at_end() const { return pos_ >= words_.size(); }
    const Word& peek() const { return words_[pos_]; }
    std::size_t end_column() const { return line_.size() + 1; }

    [[noreturn]] void fail(const std::string& message, const Word& at) const {
        throw SyntaxError(message + "\nusage: " + usage(family_), at.column);
    }
    [[noreturn]] void fail_at_end(const std::string& what) const {
        throw SyntaxError("expected " + what + " but the command ended\nusage: " + usage(family_), end_column());
    }

    const Word& next(const std::string& what) {
        if (at_end()) {
            fail_at_end(what);
        }
        return words_[pos_++];
    }

    bool peek_keyword(std::string_view kw) const { return !at_end() && !peek().quoted && iequals(peek().text, kw); }

    bool accept(std::string_view kw) {
        if (peek_keyword(kw)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(std::string_view kw) {
        if (at_end()) {
            fail_at_end("'" + std::string(kw) + "'");
        }
        if (!accept(kw)) {
            fail("expected '" + std::string(kw) + "', got '" + peek().text + "'", peek());
        }
    }

    // Reads one of `choices` (case-insensitive) and returns its index.
    std::size_t choose(std::initializer_list<std::string_view> choices, const std::string& what) {
        const Word& w = next(what);
        std::size_t i = 0;
        for (auto c : choices) {
            if (iequals(w.text, c)) {
                return i;
            }
            ++i;
        }
        std::string options;
        for (auto c : choices) {
            options += (options.empty() ? "" : "|") + std::string(c);
        }
        fail("expected " + what + " (" + options + "), got '" + w.text + "'", w);
    }

    TagFamily tag(const std::string& what) {
        const Word& w = next(what);
        if (auto t = parse_tag_family(w.text)) {
            return *t;
        }
        fail("unknown tag '" + w.text + "' (event|instance|timex3|signal|tlink|slink|alink)", w);
    }

    Command parse_corpus() {
        family_ = "corpus";
        switch (choose({"import", "list", "use", "info", "delete"}, "a corpus subcommand")) {
        case 0: {
            CorpusImport c;
            c.directory = next("a directory").text;
            bool named = false;
            bool folded = false;
            while (!at_end()) {
                if (!named && accept("as")) {
                    c.name = next("a corpus name").text;
                    named = true;
                } else if (!folded && accept("fold")) {
                    const Word& w = next("a fold scheme");
                    auto f = parse_fold_name(w.text);
                    if (!f) {
                        fail("unknown fold scheme '" + w.text + "' (none|cavat|sputlink|compact)", w);
                    }
                    c.fold = *f;
                    folded = true;
                } else {
                    fail("unexpected '" + peek().text + "'", peek());
                }
            }
            return c;
        }
        case 1:
            return CorpusList{};
        case 2:
            return CorpusUse{next("a corpus name").text};
        case 3:
            return CorpusInfo{};
        default:
            return CorpusDelete{next("a corpus name").text};
        }
    }

    bool clause_keyword() const {
        return peek_keyword("by") || peek_keyword("min-freq") || peek_keyword("as") || peek_keyword("where");
    }

    Filter filter() {
        Filter f;
        f.field = next("a filter field").text;
        expect("is");
        const bool negated = accept("not");
        if (accept("filled")) {
            f.predicate = negated ? Predicate::Unfilled : Predicate::Filled;
            return f;
        }
        if (accept("empty")) {
            f.predicate = negated ? Predicate::Filled : Predicate::Unfilled;
            return f;
        }
        if (accept("unfilled")) {
            f.predicate = negated ? Predicate::Filled : Predicate::Unfilled;
            return f;
        }
        f.predicate = negated ? Predicate::IsNot : Predicate::Is;
        f.value = next("a value").text;
        while (!at_end() && !clause_keyword()) {
            f.value += " " + words_[pos_++].text;
        }
        return f;
    }

    Command parse_show() {
        family_ = "show";
        Query q;
        static constexpr std::array<ReportKind, 3> kinds = {ReportKind::List, ReportKind::Distribution,
                                                            ReportKind::State};
        q.report = kinds[choose({"list", "distribution", "state"}, "a report type")];
        expect("of");
        q.tag = tag("a tag");
        q.field = next("a field").text;
        bool seen_where = false, seen_by = false, seen_min = false, seen_as = false;
        while (!at_end()) {
            const Word& w = peek();
            if (!seen_where && accept("where")) {
                q.filter = filter();
                seen_where = true;
            } else if (!seen_by && accept("by")) {
                q.granularity = choose({"document", "sentence"}, "a granularity") == 0 ? Granularity::Document
                                                                                        : Granularity::Sentence;
                seen_by = true;
            } else if (!seen_min && accept("min-freq")) {
                const Word& n = next("a number");
                std::size_t v = 0;
                auto [p, ec] = std::from_chars(n.text.data(), n.text.data() + n.text.size(), v);
                if (ec != std::errc() || p != n.text.data() + n.text.size() || v == 0) {
                    fail("min-freq needs a positive integer, got '" + n.text + "'", n);
                }
                q.min_freq = v;
                seen_min = true;
            } else if (!seen_as && accept("as")) {
                static constexpr std::array<OutputFormat, 3> formats = {OutputFormat::Screen, OutputFormat::Csv,
                                                                        OutputFormat::Tex};
                q.format = formats[choose({"screen", "csv", "tex"}, "an output format")];
                seen_as = true;
            } else {
                fail("unexpected '" + w.text + "'", w);
            }
        }
        return ShowCommand{q};
    }

    Command parse_browse() {
        family_ = "browse";
        if (accept("doc")) {
            return BrowseDoc{next("a document id or filename").text};
        }
        BrowseTag b;
        b.tag = tag("'doc' or a tag");
        b.id = next("a tag id").text;
        if (accept("as")) {
            static constexpr std::array<BrowseFormat, 3> formats = {BrowseFormat::Screen, BrowseFormat::Csv,
                                                                    BrowseFormat::Timeml};
            b.format = formats[choose({"screen", "csv", "timeml"}, "an output format")];
        }
        return b;
    }

    Command parse_check() {
        family_ = "check";
        const Word& name = next("'list' or a check name");
        if (iequals(name.text, "list") && !name.quoted) {
            return CheckList{};
        }
        CheckCommand c;
        c.name = name.text;
        if (accept("in")) {
            if (accept("all")) {
                c.all = true;
            } else {
                c.targets.push_back(next("a document id, filename or 'all'").text);
                while (!at_end()) {
                    c.targets.push_back(words_[pos_++].text);
                }
            }
        }
        return c;
    }

    std::string_view line_;
    std::vector<Word> words_;
    std::size_t pos_ = 0;
    std::string family_;
};

} // namespace

bool is_blank_command(std::string_view line) {
    const auto first = line.find_first_not_of(" \t\r\n");
    return first == std::string_view::npos || line[first] == '#';
}

Command parse_command(std::string_view line) {
    if (is_blank_command(line)) {
        throw SyntaxError("empty command", 1);
    }
    return Parser(line, split_words(line)).parse();
}

std::vector<std::string> split_commands(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    bool quoted = false;
    for (char c : text) {
        if (c == '"') {
            quoted = !quoted;
        }
        if ((c == ';' || c == '\n') && !quoted) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    std::erase_if(out, [](const std::string& s) { return is_blank_command(s); });
    for (auto& s : out) {
        s.erase(0, s.find_first_not_of(" \t\r"));
        s.erase(s.find_last_not_of(" \t\r") + 1);
    }
    return out;
}

std::string usage(std::string_view family) {
    const std::string f = to_lower(family);
    if (f == "corpus") {
        return "corpus (import <dir> [as <name>] [fold none|cavat|sputlink|compact] | list | use <name> | info | "
               "delete <name>)";
    }
    if (f == "show") {
        return "show (list|distribution|state) of <tag> <field> [where <field> (is [not] <value> | is [not] filled "
               "| is [not] empty | is unfilled)] [by document|sentence] [min-freq <n>] [as screen|csv|tex]";
    }
    if (f == "browse") {
        return "browse (doc <id|filename> | <tag> <id> [as screen|csv|timeml])";
    }
    if (f == "check") {
        return "check (list | <name> [in <id|filename>... | in all])";
    }
    if (f == "context") {
        return "context <link id>";
    }
    if (f == "help") {
        return "help [<command>]";
    }
    if (f == "exit") {
        return "exit";
    }
    std::string all;
    for (auto fam : kFamilies) {
        all += (all.empty() ? "" : "\n") + usage(fam);
    }
    return all;
}

} // namespace tmlwb
