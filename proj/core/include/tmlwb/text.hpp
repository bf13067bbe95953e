#pragma once

// Tokenization, sentence segmentation and lemmatization for document bodies.

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tmlwb/model.hpp"

namespace tmlwb {

// A token together with the byte range of the body it was cut from.
struct BodyToken {
    std::size_t begin = 0;
    std::size_t end = 0;
    Token token;
};

// Splits `body` into tokens and assigns sentence/word coordinates.
//
// Tokens are whitespace-delimited; `breaks` holds byte offsets (tag
// boundaries) that also separate tokens. Leading and trailing quotes,
// brackets, commas, semicolons and colons are split off. A trailing `.`,
// `?` or `!` ends a sentence when the next token starts with a capital
// letter (or there is no next token); the terminator then becomes a token
// of its own. A blank line always ends a sentence.
std::vector<BodyToken> tokenize_body(std::string_view body, const std::set<std::size_t>& breaks = {});

// Rule-based English lemma of a single word: lowercases, then undoes
// plural -s/-es/-ies, -ing and -ed (including consonant doubling).
std::string lemmatize(std::string_view word);

// Lemmas of every whitespace-separated word, joined by single spaces.
std::string lemmatize_phrase(std::string_view phrase);

// Collapses runs of whitespace to one space and trims both ends.
std::string normalize_space(std::string_view text);

} // namespace tmlwb
