#pragma once

#include "lexikit/corpus.hpp"
#include "lexikit/tokenizer.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lexikit::lexicon {

// Wildcard position names where the affix may attach:
//   None              mossel    exact match only
//   LeadingInclusive  *stem     token ends with stem (equality allowed)
//   LeadingExclusive  +stem     token ends with stem and is strictly longer
//   TrailingInclusive stem*     token starts with stem (equality allowed)
//   TrailingExclusive stem+     token starts with stem and is strictly longer
enum class Wildcard { None, LeadingInclusive, LeadingExclusive, TrailingInclusive, TrailingExclusive };

struct Pattern {
    std::string stem;
    Wildcard wildcard = Wildcard::None;

    bool matches(std::string_view token) const;
    std::string display() const; // original dictionary-file spelling
    auto operator<=>(const Pattern&) const = default;
};

// Parses one pattern line ("+moslim", "moslim*", "mossel"). Throws
// ValidationError on double wildcards, interior wildcards or empty stems.
Pattern parse_pattern(std::string_view line);

enum class Polarity { Negative, Neutral };

std::string to_string(Polarity polarity);
Polarity polarity_from_string(const std::string& s);

struct Category {
    std::string name;
    Polarity polarity = Polarity::Neutral;
    std::vector<Pattern> patterns; // deduplicated, insertion order kept

    // "name.polarity", the feature dimension label.
    std::string label() const;
    bool contains(const Pattern& pattern) const;
};

struct Dictionary {
    std::string name;
    std::vector<Category> categories; // order fixes feature dimensions

    std::size_t word_count() const; // total patterns over all categories
    const Category* find(const std::string& name, Polarity polarity) const;
};

struct DictionaryParseResult {
    Dictionary dictionary;
    std::size_t duplicates_dropped = 0;
};

// Text format: '#' starts a comment line, "[name.polarity]" opens a
// category, every other non-empty line is one pattern.
DictionaryParseResult parse_dictionary_text(std::string_view content, std::string name);
DictionaryParseResult parse_dictionary(const std::string& path);
void save_dictionary(const Dictionary& dictionary, const std::string& path);

struct CategoryRef {
    std::string name;
    Polarity polarity;
    auto operator<=>(const CategoryRef&) const = default;
};

// Byte tries over stems: a forward trie for trailing wildcards, a reversed
// trie for leading wildcards, and an exact-lookup table. Immutable after
// construction; concurrent matching is safe.
class CompiledMatcher {
  public:
    explicit CompiledMatcher(const Dictionary& dictionary);

    // Distinct indices into dictionary().categories, ascending.
    std::vector<std::uint32_t> match_category_indices(std::string_view token) const;

    // Category name/polarity pairs; a category appears at most once.
    std::vector<CategoryRef> match_token(std::string_view token) const;

    bool matches_any(std::string_view token) const;

    const Dictionary& dictionary() const { return dictionary_; }

  private:
    struct TrieNode {
        std::vector<std::pair<unsigned char, std::int32_t>> children;
        std::vector<std::pair<std::uint32_t, bool>> terminals; // (category, exclusive)
    };

    struct Trie {
        std::vector<TrieNode> nodes{TrieNode{}};
        void insert(std::string_view key, std::uint32_t category, bool exclusive);
        void collect(std::string_view key, std::vector<std::uint32_t>& out) const;
    };

    Dictionary dictionary_;
    Trie forward_;  // stems anchored at the token start
    Trie reversed_; // stems anchored at the token end, stored reversed
    std::vector<std::pair<std::string, std::uint32_t>> exact_; // sorted
};

struct FeatureVector {
    std::vector<double> values;
    std::vector<std::string> dims;

    std::size_t size() const { return values.size(); }
};

// Per-category relative frequencies: tokens matched into the category
// divided by the number of word tokens. Punctuation-only tokens count in
// neither numerator nor denominator. Empty input gives the zero vector.
FeatureVector featurize(const CompiledMatcher& matcher, const tokenizer::TokenList& tokens);

// Concatenation; dimension names must be disjoint.
FeatureVector concat_features(const FeatureVector& a, const FeatureVector& b);

struct CoverageReport {
    double token_coverage = 0.0;     // matched word tokens / all word tokens
    std::uint64_t comments_hit = 0;  // comments with at least one match
    std::uint64_t racist_comments_hit = 0;
};

// Corpus comments must carry gold labels (racist counts depend on them).
CoverageReport coverage(const CompiledMatcher& matcher, const corpus::Corpus& corpus);

} // namespace lexikit::lexicon
