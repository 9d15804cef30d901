#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lexikit::corpus {

enum class Label { Racist, NonRacist, Invalid };

// Serialized forms: "racist", "non-racist", "invalid".
std::string to_string(Label label);
Label label_from_string(const std::string& s);

struct Annotation {
    std::string annotator;
    Label label;
};

struct AnnotatedComment {
    std::string id;
    std::string text;
    std::vector<Annotation> annotations;
    std::optional<Label> gold;

    std::optional<Label> annotation_by(const std::string& annotator) const;
};

struct Corpus {
    std::string name;
    std::vector<AnnotatedComment> comments;

    std::size_t size() const { return comments.size(); }
};

// One JSON object per line:
// {"id": str, "text": str,
//  "annotations": [{"annotator": str, "label": str}], "gold": str?}
// Line order is preserved; blank lines are skipped. Malformed lines and
// duplicate ids raise ValidationError with the offending line or id.
Corpus load_corpus(const std::string& path);
void save_corpus(const Corpus& corpus, const std::string& path);

// Agreement between the two primary annotators wins; otherwise the
// tiebreaker decides. Missing primaries or an unresolvable disagreement
// raise Error.
Label adjudicate(const AnnotatedComment& comment, const std::string& primary_a,
                 const std::string& primary_b, const std::string& tiebreaker);

// Keeps comments whose gold label is not Invalid, preserving order. Every
// comment must carry a gold label.
Corpus filter_valid(const Corpus& corpus);

struct FoldSplit {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

// Stratified k-fold partition of arbitrary class keys: per fold each class
// contributes floor or ceil of its size / k. Deterministic for a fixed seed.
// A class smaller than k raises Error.
std::vector<FoldSplit> stratified_partition(const std::vector<int>& class_of, std::size_t k,
                                            std::uint64_t seed);

// Stratifies by gold label. Comments must all carry gold labels.
std::vector<FoldSplit> stratified_folds(const Corpus& corpus, std::size_t k, std::uint64_t seed);

} // namespace lexikit::corpus
