#include "lexikit/lexicon.hpp"

#include "lexikit/errors.hpp"
#include "lexikit/util/text.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace lexikit::lexicon {

bool Pattern::matches(std::string_view token) const {
    switch (wildcard) {
        case Wildcard::None:
            return token == stem;
        case Wildcard::TrailingInclusive:
            return token.starts_with(stem);
        case Wildcard::TrailingExclusive:
            return token.size() > stem.size() && token.starts_with(stem);
        case Wildcard::LeadingInclusive:
            return token.ends_with(stem);
        case Wildcard::LeadingExclusive:
            return token.size() > stem.size() && token.ends_with(stem);
    }
    return false;
}

std::string Pattern::display() const {
    switch (wildcard) {
        case Wildcard::None: return stem;
        case Wildcard::LeadingInclusive: return "*" + stem;
        case Wildcard::LeadingExclusive: return "+" + stem;
        case Wildcard::TrailingInclusive: return stem + "*";
        case Wildcard::TrailingExclusive: return stem + "+";
    }
    return stem;
}

Pattern parse_pattern(std::string_view line) {
    auto is_wild = [](char c) { return c == '*' || c == '+'; };

    std::string_view body = line;
    Wildcard leading = Wildcard::None;
    Wildcard trailing = Wildcard::None;
    if (!body.empty() && is_wild(body.front())) {
        leading = body.front() == '*' ? Wildcard::LeadingInclusive : Wildcard::LeadingExclusive;
        body.remove_prefix(1);
    }
    if (!body.empty() && is_wild(body.back())) {
        trailing = body.back() == '*' ? Wildcard::TrailingInclusive : Wildcard::TrailingExclusive;
        body.remove_suffix(1);
    }
    if (leading != Wildcard::None && trailing != Wildcard::None)
        throw ValidationError("two wildcards in pattern \"" + std::string(line) + "\"");
    if (body.empty())
        throw ValidationError("empty stem in pattern \"" + std::string(line) + "\"");
    if (body.find('*') != std::string_view::npos || body.find('+') != std::string_view::npos)
        throw ValidationError("wildcard inside stem in pattern \"" + std::string(line) + "\"");

    Pattern pattern;
    pattern.stem = text::lowercase(body);
    pattern.wildcard = leading != Wildcard::None ? leading : trailing;
    return pattern;
}

std::string to_string(Polarity polarity) {
    return polarity == Polarity::Negative ? "negative" : "neutral";
}

Polarity polarity_from_string(const std::string& s) {
    if (s == "negative") return Polarity::Negative;
    if (s == "neutral") return Polarity::Neutral;
    throw ValidationError("unknown polarity: \"" + s + "\"");
}

std::string Category::label() const { return name + "." + to_string(polarity); }

bool Category::contains(const Pattern& pattern) const {
    return std::find(patterns.begin(), patterns.end(), pattern) != patterns.end();
}

std::size_t Dictionary::word_count() const {
    std::size_t total = 0;
    for (const auto& category : categories) total += category.patterns.size();
    return total;
}

const Category* Dictionary::find(const std::string& name, Polarity polarity) const {
    for (const auto& category : categories)
        if (category.name == name && category.polarity == polarity) return &category;
    return nullptr;
}

namespace {

std::pair<std::string, Polarity> parse_category_header(std::string_view header,
                                                       std::size_t line_no) {
    // header is the text between the brackets: "name.polarity"
    auto dot = header.rfind('.');
    if (dot == std::string_view::npos || dot == 0 || dot + 1 >= header.size())
        throw ValidationError("line " + std::to_string(line_no) +
                              ": category header must be [name.polarity]");
    std::string name = text::lowercase(header.substr(0, dot));
    Polarity polarity;
    try {
        polarity = polarity_from_string(std::string(header.substr(dot + 1)));
    } catch (const ValidationError&) {
        throw ValidationError("line " + std::to_string(line_no) + ": unknown polarity \"" +
                              std::string(header.substr(dot + 1)) + "\"");
    }
    return {std::move(name), polarity};
}

} // namespace

DictionaryParseResult parse_dictionary_text(std::string_view content, std::string name) {
    DictionaryParseResult result;
    result.dictionary.name = std::move(name);

    Category* current = nullptr;
    std::unordered_set<std::string> seen_headers;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= content.size()) {
        auto eol = content.find('\n', pos);
        std::string_view raw = content.substr(pos, eol == std::string_view::npos ? content.size() - pos
                                                                                 : eol - pos);
        pos = eol == std::string_view::npos ? content.size() + 1 : eol + 1;
        ++line_no;

        auto line = text::trim(raw);
        if (line.empty() || line.front() == '#') continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ValidationError("line " + std::to_string(line_no) +
                                      ": unterminated category header");
            auto [cat_name, polarity] = parse_category_header(line.substr(1, line.size() - 2),
                                                              line_no);
            std::string key = cat_name + "." + to_string(polarity);
            if (!seen_headers.insert(key).second)
                throw ValidationError("line " + std::to_string(line_no) +
                                      ": duplicate category [" + key + "]");
            result.dictionary.categories.push_back(Category{cat_name, polarity, {}});
            current = &result.dictionary.categories.back();
            continue;
        }

        if (current == nullptr)
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": pattern before any category header");
        Pattern pattern;
        try {
            pattern = parse_pattern(line);
        } catch (const ValidationError& e) {
            throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (current->contains(pattern)) {
            ++result.duplicates_dropped;
        } else {
            current->patterns.push_back(std::move(pattern));
        }
    }
    return result;
}

DictionaryParseResult parse_dictionary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open dictionary file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string stem = path;
    if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
    return parse_dictionary_text(buffer.str(), stem);
}

void save_dictionary(const Dictionary& dictionary, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write dictionary file: " + path);
    bool first = true;
    for (const auto& category : dictionary.categories) {
        if (!first) out << '\n';
        first = false;
        out << '[' << category.label() << "]\n";
        for (const auto& pattern : category.patterns) out << pattern.display() << '\n';
    }
}

void CompiledMatcher::Trie::insert(std::string_view key, std::uint32_t category, bool exclusive) {
    std::int32_t node = 0;
    for (unsigned char byte : key) {
        std::int32_t next = -1;
        for (const auto& [b, child] : nodes[static_cast<std::size_t>(node)].children) {
            if (b == byte) {
                next = child;
                break;
            }
        }
        if (next < 0) {
            next = static_cast<std::int32_t>(nodes.size());
            nodes[static_cast<std::size_t>(node)].children.emplace_back(byte, next);
            nodes.emplace_back();
        }
        node = next;
    }
    nodes[static_cast<std::size_t>(node)].terminals.emplace_back(category, exclusive);
}

void CompiledMatcher::Trie::collect(std::string_view key, std::vector<std::uint32_t>& out) const {
    std::int32_t node = 0;
    std::size_t depth = 0;
    while (true) {
        for (const auto& [category, exclusive] : nodes[static_cast<std::size_t>(node)].terminals) {
            // exclusive requires at least one unconsumed affix byte
            if (!exclusive || depth < key.size()) out.push_back(category);
        }
        if (depth == key.size()) break;
        unsigned char byte = static_cast<unsigned char>(key[depth]);
        std::int32_t next = -1;
        for (const auto& [b, child] : nodes[static_cast<std::size_t>(node)].children) {
            if (b == byte) {
                next = child;
                break;
            }
        }
        if (next < 0) break;
        node = next;
        ++depth;
    }
}

CompiledMatcher::CompiledMatcher(const Dictionary& dictionary) : dictionary_(dictionary) {
    for (std::uint32_t c = 0; c < dictionary_.categories.size(); ++c) {
        for (const auto& pattern : dictionary_.categories[c].patterns) {
            switch (pattern.wildcard) {
                case Wildcard::None:
                    exact_.emplace_back(pattern.stem, c);
                    break;
                case Wildcard::TrailingInclusive:
                    forward_.insert(pattern.stem, c, false);
                    break;
                case Wildcard::TrailingExclusive:
                    forward_.insert(pattern.stem, c, true);
                    break;
                case Wildcard::LeadingInclusive:
                case Wildcard::LeadingExclusive: {
                    std::string reversed(pattern.stem.rbegin(), pattern.stem.rend());
                    reversed_.insert(reversed, c, pattern.wildcard == Wildcard::LeadingExclusive);
                    break;
                }
            }
        }
    }
    std::sort(exact_.begin(), exact_.end());
}

std::vector<std::uint32_t> CompiledMatcher::match_category_indices(std::string_view token) const {
    std::vector<std::uint32_t> hits;

    auto [lo, hi] = std::equal_range(
        exact_.begin(), exact_.end(), std::make_pair(std::string(token), std::uint32_t{0}),
        [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto it = lo; it != hi; ++it) hits.push_back(it->second);

    forward_.collect(token, hits);
    std::string reversed(token.rbegin(), token.rend());
    reversed_.collect(reversed, hits);

    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    return hits;
}

std::vector<CategoryRef> CompiledMatcher::match_token(std::string_view token) const {
    std::vector<CategoryRef> refs;
    for (auto index : match_category_indices(token)) {
        const auto& category = dictionary_.categories[index];
        refs.push_back(CategoryRef{category.name, category.polarity});
    }
    return refs;
}

bool CompiledMatcher::matches_any(std::string_view token) const {
    return !match_category_indices(token).empty();
}

FeatureVector featurize(const CompiledMatcher& matcher, const tokenizer::TokenList& tokens) {
    const auto& categories = matcher.dictionary().categories;

    FeatureVector features;
    features.values.assign(categories.size(), 0.0);
    features.dims.reserve(categories.size());
    for (const auto& category : categories) features.dims.push_back(category.label());

    std::size_t word_tokens = 0;
    for (const auto& token : tokens) {
        if (!tokenizer::is_word_token(token)) continue;
        ++word_tokens;
        for (auto index : matcher.match_category_indices(token)) features.values[index] += 1.0;
    }
    if (word_tokens > 0)
        for (auto& value : features.values) value /= static_cast<double>(word_tokens);
    return features;
}

FeatureVector concat_features(const FeatureVector& a, const FeatureVector& b) {
    std::unordered_set<std::string> names(a.dims.begin(), a.dims.end());
    for (const auto& dim : b.dims)
        if (names.count(dim))
            throw Error("overlapping feature dimension \"" + dim + "\"");

    FeatureVector out;
    out.values.reserve(a.values.size() + b.values.size());
    out.dims.reserve(a.dims.size() + b.dims.size());
    out.values.insert(out.values.end(), a.values.begin(), a.values.end());
    out.values.insert(out.values.end(), b.values.begin(), b.values.end());
    out.dims.insert(out.dims.end(), a.dims.begin(), a.dims.end());
    out.dims.insert(out.dims.end(), b.dims.begin(), b.dims.end());
    return out;
}

CoverageReport coverage(const CompiledMatcher& matcher, const corpus::Corpus& corpus) {
    CoverageReport report;
    std::uint64_t total_word_tokens = 0;
    std::uint64_t matched_word_tokens = 0;

    for (const auto& comment : corpus.comments) {
        if (!comment.gold)
            throw Error("comment \"" + comment.id + "\" has no gold label");
        bool hit = false;
        for (const auto& token : tokenizer::tokenize(comment.text)) {
            if (!tokenizer::is_word_token(token)) continue;
            ++total_word_tokens;
            if (matcher.matches_any(token)) {
                ++matched_word_tokens;
                hit = true;
            }
        }
        if (hit) {
            ++report.comments_hit;
            if (*comment.gold == corpus::Label::Racist) ++report.racist_comments_hit;
        }
    }

    report.token_coverage = total_word_tokens == 0
                                ? 0.0
                                : static_cast<double>(matched_word_tokens) /
                                      static_cast<double>(total_word_tokens);
    return report;
}

} // namespace lexikit::lexicon
