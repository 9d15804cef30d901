#include "lexikit/corpus.hpp"

#include "lexikit/errors.hpp"
#include "lexikit/util/rng.hpp"
#include "lexikit/util/text.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <unordered_set>

using nlohmann::json;

namespace lexikit::corpus {

std::string to_string(Label label) {
    switch (label) {
        case Label::Racist: return "racist";
        case Label::NonRacist: return "non-racist";
        case Label::Invalid: return "invalid";
    }
    throw Error("unreachable label value");
}

Label label_from_string(const std::string& s) {
    if (s == "racist") return Label::Racist;
    if (s == "non-racist") return Label::NonRacist;
    if (s == "invalid") return Label::Invalid;
    throw ValidationError("unknown label: \"" + s + "\"");
}

std::optional<Label> AnnotatedComment::annotation_by(const std::string& annotator) const {
    for (const auto& annotation : annotations)
        if (annotation.annotator == annotator) return annotation.label;
    return std::nullopt;
}

namespace {

AnnotatedComment parse_comment(const json& record, std::size_t line_no) {
    auto missing = [line_no](const char* field) {
        return ValidationError("line " + std::to_string(line_no) + ": missing field " + field);
    };
    if (!record.is_object())
        throw ValidationError("line " + std::to_string(line_no) + ": not a JSON object");
    if (!record.contains("id")) throw missing("id");
    if (!record.contains("text")) throw missing("text");
    if (!record.contains("annotations")) throw missing("annotations");

    AnnotatedComment comment;
    try {
        comment.id = record.at("id").get<std::string>();
        comment.text = record.at("text").get<std::string>();
        for (const auto& entry : record.at("annotations")) {
            Annotation annotation;
            annotation.annotator = entry.at("annotator").get<std::string>();
            annotation.label = label_from_string(entry.at("label").get<std::string>());
            comment.annotations.push_back(std::move(annotation));
        }
        if (record.contains("gold") && !record.at("gold").is_null())
            comment.gold = label_from_string(record.at("gold").get<std::string>());
    } catch (const json::exception& e) {
        throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
    }

    if (comment.id.empty())
        throw ValidationError("line " + std::to_string(line_no) + ": empty id");
    if (!text::is_valid_utf8(comment.text))
        throw ValidationError("line " + std::to_string(line_no) + ": text is not valid UTF-8");

    std::unordered_set<std::string> seen;
    for (const auto& annotation : comment.annotations)
        if (!seen.insert(annotation.annotator).second)
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": duplicate annotator \"" + annotation.annotator + "\"");
    return comment;
}

} // namespace

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open corpus file: " + path);

    Corpus corpus;
    corpus.name = std::filesystem::path(path).stem().string();

    std::unordered_set<std::string> ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto trimmed = text::trim(line);
        if (trimmed.empty()) continue;
        json record = json::parse(trimmed, nullptr, false);
        if (record.is_discarded())
            throw ValidationError("line " + std::to_string(line_no) + ": malformed JSON");
        auto comment = parse_comment(record, line_no);
        if (!ids.insert(comment.id).second)
            throw ValidationError("duplicate comment id \"" + comment.id + "\" at line " +
                                  std::to_string(line_no));
        corpus.comments.push_back(std::move(comment));
    }
    return corpus;
}

void save_corpus(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write corpus file: " + path);
    for (const auto& comment : corpus.comments) {
        json record;
        record["id"] = comment.id;
        record["text"] = comment.text;
        json annotations = json::array();
        for (const auto& annotation : comment.annotations)
            annotations.push_back(
                {{"annotator", annotation.annotator}, {"label", to_string(annotation.label)}});
        record["annotations"] = std::move(annotations);
        if (comment.gold) record["gold"] = to_string(*comment.gold);
        out << record.dump() << '\n';
    }
}

Label adjudicate(const AnnotatedComment& comment, const std::string& primary_a,
                 const std::string& primary_b, const std::string& tiebreaker) {
    auto label_a = comment.annotation_by(primary_a);
    auto label_b = comment.annotation_by(primary_b);
    if (!label_a || !label_b)
        throw Error("comment \"" + comment.id + "\": primary annotator missing");
    if (*label_a == *label_b) return *label_a;
    auto tie = comment.annotation_by(tiebreaker);
    if (!tie)
        throw Error("comment \"" + comment.id + "\": unresolvable, tiebreaker absent");
    return *tie;
}

Corpus filter_valid(const Corpus& corpus) {
    Corpus out;
    out.name = corpus.name;
    for (const auto& comment : corpus.comments) {
        if (!comment.gold)
            throw Error("comment \"" + comment.id + "\" has no gold label");
        if (*comment.gold != Label::Invalid) out.comments.push_back(comment);
    }
    return out;
}

std::vector<FoldSplit> stratified_partition(const std::vector<int>& class_of, std::size_t k,
                                            std::uint64_t seed) {
    if (k < 2) throw Error("fold count must be at least 2");

    // Classes keyed in order of first appearance for stable behavior.
    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < class_of.size(); ++i) by_class[class_of[i]].push_back(i);

    for (const auto& [cls, members] : by_class)
        if (members.size() < k)
            throw Error("class " + std::to_string(cls) + " has " +
                        std::to_string(members.size()) + " members, fewer than k=" +
                        std::to_string(k));

    std::vector<std::vector<std::size_t>> fold_members(k);
    rng::Generator gen(seed);
    for (auto& [cls, members] : by_class) {
        rng::shuffle(members, gen);
        for (std::size_t j = 0; j < members.size(); ++j)
            fold_members[j % k].push_back(members[j]);
    }

    std::vector<FoldSplit> folds(k);
    for (std::size_t f = 0; f < k; ++f) {
        auto& test = fold_members[f];
        std::sort(test.begin(), test.end());
        folds[f].test = test;
        for (std::size_t g = 0; g < k; ++g) {
            if (g == f) continue;
            folds[f].train.insert(folds[f].train.end(), fold_members[g].begin(),
                                  fold_members[g].end());
        }
        std::sort(folds[f].train.begin(), folds[f].train.end());
    }
    return folds;
}

std::vector<FoldSplit> stratified_folds(const Corpus& corpus, std::size_t k, std::uint64_t seed) {
    std::vector<int> class_of;
    class_of.reserve(corpus.size());
    for (const auto& comment : corpus.comments) {
        if (!comment.gold)
            throw Error("comment \"" + comment.id + "\" has no gold label");
        class_of.push_back(static_cast<int>(*comment.gold));
    }
    return stratified_partition(class_of, k, seed);
}

} // namespace lexikit::corpus
