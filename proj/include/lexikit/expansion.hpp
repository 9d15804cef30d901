#pragma once

#include "lexikit/lexicon.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace lexikit::expansion {

// Dense word vectors, row-major. Immutable after load; concurrent neighbor
// queries are safe.
class EmbeddingTable {
  public:
    EmbeddingTable() = default;
    EmbeddingTable(std::size_t dim, std::vector<std::string> words, std::vector<double> matrix);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return words_.size(); }
    bool contains(const std::string& word) const { return index_.count(word) != 0; }
    const std::vector<std::string>& words() const { return words_; }
    std::span<const double> vector_of(std::size_t row) const;
    std::optional<std::size_t> row_of(const std::string& word) const;
    double norm_of(std::size_t row) const { return norms_[row]; }

  private:
    std::size_t dim_ = 0;
    std::vector<std::string> words_;
    std::vector<double> matrix_;
    std::vector<double> norms_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct EmbeddingLoadResult {
    EmbeddingTable table;
    std::size_t duplicates_skipped = 0;
};

// Text format: optional "V d" header, then one word and d reals per line.
// Duplicate words keep the first occurrence; dimension mismatches and zero
// vectors raise ValidationError with the line number.
EmbeddingLoadResult load_embeddings(const std::string& path);
void save_embeddings(const EmbeddingTable& table, const std::string& path);

struct Neighbor {
    std::string word;
    double similarity;
};

// The k most cosine-similar vocabulary words, excluding the query,
// descending similarity with lexicographic tie-break. Returns nullopt for
// out-of-vocabulary queries.
std::optional<std::vector<Neighbor>> nearest_neighbors(const EmbeddingTable& table,
                                                       const std::string& word, std::size_t k);

struct ExpandResult {
    lexicon::Dictionary dictionary;
    std::size_t oov_stems = 0;
};

// Adds the k nearest neighbors of every pattern stem (wildcards stripped
// for lookup) to the same category as wildcard-free patterns. Originals are
// kept; duplicates are dropped; out-of-vocabulary stems are skipped.
ExpandResult expand_dictionary(const lexicon::Dictionary& dictionary,
                               const EmbeddingTable& table, std::size_t k = 5);

struct RemovalEntry {
    std::string category;
    lexicon::Polarity polarity;
    std::string word;
    auto operator<=>(const RemovalEntry&) const = default;
};

using RemovalList = std::vector<RemovalEntry>;

// File format: one "name.polarity<TAB>word" entry per line.
RemovalList load_removals(const std::string& path);

struct RemovalResult {
    lexicon::Dictionary dictionary;
    RemovalList unused; // entries that matched nothing
};

// Removes listed wildcard-free words from the named categories. Wildcard
// patterns are never touched.
RemovalResult apply_removals(const lexicon::Dictionary& dictionary, const RemovalList& removals);

} // namespace lexikit::expansion
