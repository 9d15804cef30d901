#include "lexikit/tokenizer.hpp"

#include "lexikit/util/text.hpp"

namespace lexikit::tokenizer {

namespace {

// Emits the tokens of one whitespace-delimited chunk. The chunk is split as
// [leading punctuation run][core][trailing punctuation run]; interior
// punctuation stays inside the core.
void emit_chunk(const std::vector<char32_t>& cps, std::size_t begin, std::size_t end,
                TokenList& out) {
    std::size_t n = end - begin;

    // Word mask: word chars, plus join chars flanked by word chars.
    std::vector<bool> word(n);
    for (std::size_t i = 0; i < n; ++i) word[i] = text::is_word_char(cps[begin + i]);
    std::vector<bool> resolved = word;
    for (std::size_t i = 0; i < n; ++i) {
        if (!word[i] && text::is_join_char(cps[begin + i]) && i > 0 && i + 1 < n &&
            word[i - 1] && word[i + 1])
            resolved[i] = true;
    }

    std::size_t first = n;
    std::size_t last = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (resolved[i]) {
            if (first == n) first = i;
            last = i;
        }
    }

    auto emit = [&](std::size_t from, std::size_t to) {
        if (from >= to) return;
        std::string token;
        for (std::size_t i = from; i < to; ++i) text::encode_utf8(cps[begin + i], token);
        out.push_back(std::move(token));
    };

    if (first == n) {
        emit(0, n); // punctuation-only chunk, kept whole
        return;
    }
    emit(0, first);
    emit(first, last + 1);
    emit(last + 1, n);
}

} // namespace

TokenList tokenize(std::string_view input) {
    TokenList tokens;
    if (input.empty()) return tokens;

    auto cps = text::decode_utf8(input);
    for (auto& cp : cps) cp = text::to_lower(cp);

    std::size_t i = 0;
    while (i < cps.size()) {
        while (i < cps.size() && text::is_space(cps[i])) ++i;
        std::size_t start = i;
        while (i < cps.size() && !text::is_space(cps[i])) ++i;
        if (i > start) emit_chunk(cps, start, i, tokens);
    }
    return tokens;
}

bool is_word_token(std::string_view token) { return text::has_word_char(token); }

std::size_t word_token_count(const TokenList& tokens) {
    std::size_t count = 0;
    for (const auto& token : tokens)
        if (is_word_token(token)) ++count;
    return count;
}

} // namespace lexikit::tokenizer
