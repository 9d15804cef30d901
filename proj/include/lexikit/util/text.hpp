#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lexikit::text {

// Decodes UTF-8 into codepoints. Invalid byte sequences raise ValidationError
// with the byte offset; callers validate input at file-load boundaries.
std::vector<char32_t> decode_utf8(std::string_view s);

void encode_utf8(char32_t cp, std::string& out);
std::string encode_utf8(const std::vector<char32_t>& cps);

bool is_valid_utf8(std::string_view s);

// Case mapping covers ASCII, Latin-1 Supplement and Latin Extended-A (enough
// for Dutch and most western European text); other codepoints pass through.
char32_t to_lower(char32_t cp);
std::string lowercase(std::string_view s);

bool is_space(char32_t cp);

// Letters and digits count as word characters; symbols, punctuation and
// emoji do not.
bool is_word_char(char32_t cp);

// Apostrophes and hyphens join a token when flanked by word characters.
bool is_join_char(char32_t cp);

// True when the string contains at least one word character.
bool has_word_char(std::string_view s);

std::string_view trim(std::string_view s);

std::vector<std::string_view> split_whitespace(std::string_view s);

} // namespace lexikit::text
