#include "lexikit/expansion.hpp"

#include "lexikit/errors.hpp"
#include "lexikit/simd/simd.hpp"
#include "lexikit/util/text.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace lexikit::expansion {

EmbeddingTable::EmbeddingTable(std::size_t dim, std::vector<std::string> words,
                               std::vector<double> matrix)
    : dim_(dim), words_(std::move(words)), matrix_(std::move(matrix)) {
    if (matrix_.size() != words_.size() * dim_)
        throw Error("embedding matrix size does not match vocabulary");
    norms_.reserve(words_.size());
    for (std::size_t row = 0; row < words_.size(); ++row) {
        const double* v = matrix_.data() + row * dim_;
        double norm = std::sqrt(simd::dot_scalar(v, v, dim_));
        if (norm == 0.0) throw ValidationError("zero vector for word \"" + words_[row] + "\"");
        norms_.push_back(norm);
    }
    for (std::size_t row = 0; row < words_.size(); ++row) {
        if (!index_.emplace(words_[row], row).second)
            throw Error("duplicate word in embedding table: \"" + words_[row] + "\"");
    }
}

std::span<const double> EmbeddingTable::vector_of(std::size_t row) const {
    return {matrix_.data() + row * dim_, dim_};
}

std::optional<std::size_t> EmbeddingTable::row_of(const std::string& word) const {
    auto it = index_.find(word);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

namespace {

bool looks_like_header(const std::vector<std::string_view>& fields) {
    if (fields.size() != 2) return false;
    for (auto field : fields) {
        if (field.empty()) return false;
        for (char c : field)
            if (c < '0' || c > '9') return false;
    }
    return true;
}

double parse_real(std::string_view field, std::size_t line_no) {
    try {
        std::size_t consumed = 0;
        double value = std::stod(std::string(field), &consumed);
        if (consumed != field.size()) throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw ValidationError("line " + std::to_string(line_no) + ": bad number \"" +
                              std::string(field) + "\"");
    }
}

} // namespace

EmbeddingLoadResult load_embeddings(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open embedding file: " + path);

    EmbeddingLoadResult result;
    std::vector<std::string> words;
    std::vector<double> matrix;
    std::size_t dim = 0;
    std::size_t declared_count = 0;

    std::unordered_map<std::string, std::size_t> seen;
    std::string line;
    std::size_t line_no = 0;
    bool first_content_line = true;
    while (std::getline(in, line)) {
        ++line_no;
        auto trimmed = text::trim(line);
        if (trimmed.empty()) continue;
        auto fields = text::split_whitespace(trimmed);

        if (first_content_line) {
            first_content_line = false;
            if (looks_like_header(fields)) {
                declared_count = static_cast<std::size_t>(std::stoull(std::string(fields[0])));
                dim = static_cast<std::size_t>(std::stoull(std::string(fields[1])));
                if (dim == 0)
                    throw ValidationError("line " + std::to_string(line_no) +
                                          ": dimension must be positive");
                words.reserve(declared_count);
                matrix.reserve(declared_count * dim);
                continue;
            }
            if (fields.size() < 2)
                throw ValidationError("line " + std::to_string(line_no) +
                                      ": expected a word and at least one value");
            dim = fields.size() - 1; // no header: dimension inferred
        }

        if (fields.size() != dim + 1)
            throw ValidationError("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(dim) + " values");
        std::string word = text::lowercase(fields[0]);
        if (seen.count(word)) {
            ++result.duplicates_skipped;
            continue;
        }
        seen.emplace(word, words.size());
        words.push_back(word);
        for (std::size_t i = 1; i < fields.size(); ++i)
            matrix.push_back(parse_real(fields[i], line_no));
        // Zero vectors cannot participate in cosine similarity.
        const double* v = matrix.data() + (words.size() - 1) * dim;
        if (simd::dot_scalar(v, v, dim) == 0.0)
            throw ValidationError("line " + std::to_string(line_no) + ": zero vector for \"" +
                                  words.back() + "\"");
    }
    if (dim == 0) throw ValidationError("embedding file is empty: " + path);

    result.table = EmbeddingTable(dim, std::move(words), std::move(matrix));
    return result;
}

void save_embeddings(const EmbeddingTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write embedding file: " + path);
    out << table.size() << ' ' << table.dim() << '\n';
    out.precision(17);
    for (std::size_t row = 0; row < table.size(); ++row) {
        out << table.words()[row];
        for (double value : table.vector_of(row)) out << ' ' << value;
        out << '\n';
    }
}

std::optional<std::vector<Neighbor>> nearest_neighbors(const EmbeddingTable& table,
                                                       const std::string& word, std::size_t k) {
    if (k == 0) throw Error("k must be positive");
    auto query_row = table.row_of(word);
    if (!query_row) return std::nullopt;

    auto query = table.vector_of(*query_row);
    double query_norm = table.norm_of(*query_row);

    std::vector<Neighbor> all;
    all.reserve(table.size());
    for (std::size_t row = 0; row < table.size(); ++row) {
        if (row == *query_row) continue;
        double sim = simd::dot(query, table.vector_of(row)) / (query_norm * table.norm_of(row));
        all.push_back(Neighbor{table.words()[row], sim});
    }

    auto before = [](const Neighbor& a, const Neighbor& b) {
        if (a.similarity != b.similarity) return a.similarity > b.similarity;
        return a.word < b.word;
    };
    std::size_t keep = std::min(k, all.size());
    std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep), all.end(),
                      before);
    all.resize(keep);
    return all;
}

ExpandResult expand_dictionary(const lexicon::Dictionary& dictionary, const EmbeddingTable& table,
                               std::size_t k) {
    ExpandResult result;
    result.dictionary = dictionary;

    for (auto& category : result.dictionary.categories) {
        // Snapshot: only the original patterns seed the expansion.
        const std::vector<lexicon::Pattern> originals = category.patterns;
        for (const auto& pattern : originals) {
            auto neighbors = nearest_neighbors(table, pattern.stem, k);
            if (!neighbors) {
                ++result.oov_stems;
                continue;
            }
            for (const auto& neighbor : *neighbors) {
                lexicon::Pattern added{text::lowercase(neighbor.word), lexicon::Wildcard::None};
                if (added.stem == pattern.stem) continue;
                if (!category.contains(added)) category.patterns.push_back(std::move(added));
            }
        }
    }
    return result;
}

RemovalList load_removals(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open removal list: " + path);

    RemovalList removals;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto trimmed = text::trim(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;
        auto tab = trimmed.find('\t');
        if (tab == std::string_view::npos)
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": expected name.polarity<TAB>word");
        auto head = trimmed.substr(0, tab);
        auto word = text::trim(trimmed.substr(tab + 1));
        auto dot = head.rfind('.');
        if (dot == std::string_view::npos || dot == 0 || word.empty())
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": expected name.polarity<TAB>word");
        RemovalEntry entry;
        entry.category = text::lowercase(head.substr(0, dot));
        entry.polarity = lexicon::polarity_from_string(std::string(head.substr(dot + 1)));
        entry.word = text::lowercase(word);
        if (std::find(removals.begin(), removals.end(), entry) == removals.end())
            removals.push_back(std::move(entry));
    }
    return removals;
}

RemovalResult apply_removals(const lexicon::Dictionary& dictionary, const RemovalList& removals) {
    RemovalResult result;
    result.dictionary = dictionary;

    for (const auto& entry : removals) {
        bool used = false;
        for (auto& category : result.dictionary.categories) {
            if (category.name != entry.category || category.polarity != entry.polarity) continue;
            auto it = std::remove_if(category.patterns.begin(), category.patterns.end(),
                                     [&](const lexicon::Pattern& pattern) {
                                         return pattern.wildcard == lexicon::Wildcard::None &&
                                                pattern.stem == entry.word;
                                     });
            if (it != category.patterns.end()) {
                category.patterns.erase(it, category.patterns.end());
                used = true;
            }
        }
        if (!used) result.unused.push_back(entry);
    }
    return result;
}

} // namespace lexikit::expansion
