#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lexikit::tokenizer {

// Lowercase word tokens in text order. Tokens are non-empty and contain no
// whitespace; punctuation-only tokens are kept.
using TokenList = std::vector<std::string>;

// Lowercases (Unicode-aware for Latin scripts), splits on Unicode
// whitespace, and detaches leading/trailing punctuation runs from each
// chunk as separate tokens. Interior apostrophes and hyphens stay inside
// their token. Deterministic and pure.
TokenList tokenize(std::string_view input);

// True for tokens that contain at least one letter or digit. Punctuation-only
// tokens are not words and are excluded from frequency denominators.
bool is_word_token(std::string_view token);

// Number of word tokens in the list.
std::size_t word_token_count(const TokenList& tokens);

} // namespace lexikit::tokenizer
