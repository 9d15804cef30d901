#include "lexikit/util/text.hpp"

#include "lexikit/errors.hpp"

namespace lexikit::text {

namespace {

int sequence_length(unsigned char lead) {
    if (lead < 0x80) return 1;
    if ((lead & 0xe0) == 0xc0) return 2;
    if ((lead & 0xf0) == 0xe0) return 3;
    if ((lead & 0xf8) == 0xf0) return 4;
    return 0;
}

} // namespace

std::vector<char32_t> decode_utf8(std::string_view s) {
    std::vector<char32_t> out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char lead = static_cast<unsigned char>(s[i]);
        int len = sequence_length(lead);
        if (len == 0 || i + static_cast<std::size_t>(len) > s.size())
            throw ValidationError("invalid UTF-8 at byte " + std::to_string(i));
        char32_t cp = 0;
        switch (len) {
            case 1: cp = lead; break;
            case 2: cp = lead & 0x1f; break;
            case 3: cp = lead & 0x0f; break;
            default: cp = lead & 0x07; break;
        }
        for (int k = 1; k < len; ++k) {
            unsigned char cont = static_cast<unsigned char>(s[i + k]);
            if ((cont & 0xc0) != 0x80)
                throw ValidationError("invalid UTF-8 at byte " + std::to_string(i + k));
            cp = (cp << 6) | (cont & 0x3f);
        }
        // Reject overlong encodings and surrogates.
        if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
            (cp >= 0xd800 && cp <= 0xdfff) || cp > 0x10ffff)
            throw ValidationError("invalid UTF-8 at byte " + std::to_string(i));
        out.push_back(cp);
        i += static_cast<std::size_t>(len);
    }
    return out;
}

void encode_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else {
        out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    }
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) encode_utf8(cp, out);
    return out;
}

bool is_valid_utf8(std::string_view s) {
    try {
        decode_utf8(s);
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

char32_t to_lower(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return cp + 32;
    // Latin-1 Supplement uppercase block, excluding the multiplication sign.
    if (cp >= 0xc0 && cp <= 0xde && cp != 0xd7) return cp + 32;
    // Latin Extended-A comes in upper/lower pairs with shifting parity.
    if ((cp >= 0x100 && cp <= 0x137) || (cp >= 0x14a && cp <= 0x177)) {
        if (cp == 0x130) return U'i'; // dotted capital I
        return (cp % 2 == 0) ? cp + 1 : cp;
    }
    if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17e))
        return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp == 0x178) return 0xff; // Y with diaeresis
    return cp;
}

std::string lowercase(std::string_view s) {
    auto cps = decode_utf8(s);
    for (auto& cp : cps) cp = to_lower(cp);
    return encode_utf8(cps);
}

bool is_space(char32_t cp) {
    switch (cp) {
        case 0x09: case 0x0a: case 0x0b: case 0x0c: case 0x0d:
        case 0x20: case 0x85: case 0xa0: case 0x1680:
        case 0x2028: case 0x2029: case 0x202f: case 0x205f: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200a;
    }
}

bool is_word_char(char32_t cp) {
    if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z')) return true;
    if (cp >= U'0' && cp <= U'9') return true;
    // Latin-1 Supplement and the Latin Extended blocks, minus x and division.
    if (cp >= 0xc0 && cp <= 0x24f) return cp != 0xd7 && cp != 0xf7;
    // Greek through to the end of the alphabetic BMP ranges; coarse but
    // stable, and anything outside it is treated as punctuation.
    if (cp >= 0x370 && cp <= 0x1fff) return true;
    return false;
}

bool is_join_char(char32_t cp) {
    return cp == U'\'' || cp == 0x2019 || cp == U'-' || cp == 0x2010 || cp == 0x2011;
}

bool has_word_char(std::string_view s) {
    for (char32_t cp : decode_utf8(s))
        if (is_word_char(cp)) return true;
    return false;
}

std::string_view trim(std::string_view s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && (s[begin] == ' ' || s[begin] == '\t' || s[begin] == '\r' || s[begin] == '\n'))
        ++begin;
    while (end > begin && (s[end - 1] == ' ' || s[end - 1] == '\t' || s[end - 1] == '\r' || s[end - 1] == '\n'))
        --end;
    return s.substr(begin, end - begin);
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
    std::vector<std::string_view> parts;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == '\n')) ++i;
        std::size_t start = i;
        while (i < s.size() && !(s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == '\n')) ++i;
        if (i > start) parts.push_back(s.substr(start, i - start));
    }
    return parts;
}

} // namespace lexikit::text
