#include "tmlwb/text.hpp"

#include <algorithm>
#include <cctype>

namespace tmlwb {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

constexpr std::string_view kOpeners = "\"'([{`";
constexpr std::string_view kClosers = "\"')]},;:";
constexpr std::string_view kTerminators = ".?!";

struct Chunk {
    std::size_t begin;
    std::size_t end;
    bool blank_line_before;
};

std::vector<Chunk> split_chunks(std::string_view body, const std::set<std::size_t>& breaks) {
    std::vector<Chunk> chunks;
    std::size_t i = 0;
    int newlines = 0;
    while (i < body.size()) {
        if (is_space(body[i])) {
            if (body[i] == '\n') {
                ++newlines;
            }
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j < body.size() && !is_space(body[j]) && !breaks.contains(j)) {
            ++j;
        }
        chunks.push_back({i, j, newlines >= 2});
        newlines = 0;
        i = j;
    }
    return chunks;
}

// First character of a chunk once opening punctuation is skipped.
bool starts_capitalized(std::string_view body, const Chunk& chunk) {
    for (std::size_t k = chunk.begin; k < chunk.end; ++k) {
        if (kOpeners.find(body[k]) == std::string_view::npos) {
            return is_upper(body[k]);
        }
    }
    return false;
}

bool has_vowel(std::string_view s) {
    return s.find_first_of("aeiouy") != std::string_view::npos;
}

std::string undo_doubling(std::string stem) {
    const std::size_t n = stem.size();
    if (n >= 4 && stem[n - 1] == stem[n - 2] && std::string_view("aeioulsz").find(stem[n - 1]) == std::string_view::npos) {
        stem.pop_back();
    }
    return stem;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

} // namespace

std::vector<BodyToken> tokenize_body(std::string_view body, const std::set<std::size_t>& breaks) {
    const auto chunks = split_chunks(body, breaks);
    std::vector<BodyToken> out;
    int sentence = 0;
    int word = 0;

    auto emit = [&](std::size_t b, std::size_t e) {
        BodyToken t;
        t.begin = b;
        t.end = e;
        t.token.sentence_index = sentence;
        t.token.word_index = word++;
        t.token.surface = std::string(body.substr(b, e - b));
        t.token.lemma = lemmatize(t.token.surface);
        out.push_back(std::move(t));
    };

    for (std::size_t c = 0; c < chunks.size(); ++c) {
        const Chunk& chunk = chunks[c];
        if (chunk.blank_line_before && word > 0) {
            ++sentence;
            word = 0;
        }

        std::size_t b = chunk.begin;
        std::size_t e = chunk.end;
        std::vector<std::pair<std::size_t, std::size_t>> pieces;
        while (e - b > 1 && kOpeners.find(body[b]) != std::string_view::npos) {
            pieces.emplace_back(b, b + 1);
            ++b;
        }
        std::vector<std::pair<std::size_t, std::size_t>> suffix;
        while (e - b > 1 && kClosers.find(body[e - 1]) != std::string_view::npos) {
            suffix.emplace_back(e - 1, e);
            --e;
        }

        const bool terminated = kTerminators.find(body[e - 1]) != std::string_view::npos;
        const bool next_capital = c + 1 == chunks.size() || starts_capitalized(body, chunks[c + 1]);
        const bool ends_sentence = terminated && next_capital;

        const char last = body[e - 1];
        if (e - b > 1 && (last == '?' || last == '!' || (last == '.' && ends_sentence))) {
            pieces.emplace_back(b, e - 1);
            pieces.emplace_back(e - 1, e);
        } else {
            pieces.emplace_back(b, e);
        }
        std::reverse(suffix.begin(), suffix.end());
        pieces.insert(pieces.end(), suffix.begin(), suffix.end());

        for (const auto& [pb, pe] : pieces) {
            emit(pb, pe);
        }
        if (ends_sentence && c + 1 < chunks.size()) {
            ++sentence;
            word = 0;
        }
    }
    return out;
}

std::string lemmatize(std::string_view word) {
    std::string w = to_lower(word);
    if (w.size() <= 3 || !std::all_of(w.begin(), w.end(), [](char c) { return is_alpha(c); })) {
        return w;
    }
    if (ends_with(w, "ies") && w.size() > 4) {
        return w.substr(0, w.size() - 3) + "y";
    }
    if (ends_with(w, "sses")) {
        return w.substr(0, w.size() - 2);
    }
    if (ends_with(w, "es")) {
        const std::string_view stem = std::string_view(w).substr(0, w.size() - 2);
        if (ends_with(stem, "x") || ends_with(stem, "z") || ends_with(stem, "ch") || ends_with(stem, "sh") ||
            ends_with(stem, "ss")) {
            return std::string(stem);
        }
    }
    if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") && !ends_with(w, "is")) {
        return w.substr(0, w.size() - 1);
    }
    if (ends_with(w, "ing") && w.size() >= 6) {
        std::string stem = w.substr(0, w.size() - 3);
        if (has_vowel(stem)) {
            return undo_doubling(std::move(stem));
        }
    }
    if (ends_with(w, "ied") && w.size() > 4) {
        return w.substr(0, w.size() - 3) + "y";
    }
    if (ends_with(w, "ed") && w.size() >= 5) {
        std::string stem = w.substr(0, w.size() - 2);
        if (has_vowel(stem)) {
            return undo_doubling(std::move(stem));
        }
    }
    return w;
}

std::string lemmatize_phrase(std::string_view phrase) {
    std::string out;
    std::size_t i = 0;
    while (i < phrase.size()) {
        while (i < phrase.size() && is_space(phrase[i])) {
            ++i;
        }
        std::size_t j = i;
        while (j < phrase.size() && !is_space(phrase[j])) {
            ++j;
        }
        if (j > i) {
            if (!out.empty()) {
                out += ' ';
            }
            out += lemmatize(phrase.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::string normalize_space(std::string_view text) {
    std::string out;
    bool pending = false;
    for (char c : text) {
        if (is_space(c)) {
            pending = !out.empty();
            continue;
        }
        if (pending) {
            out += ' ';
            pending = false;
        }
        out += c;
    }
    return out;
}

} // namespace tmlwb
