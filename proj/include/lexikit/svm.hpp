#pragma once

#include "lexikit/corpus.hpp"
#include "lexikit/lexicon.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lexikit::svm {

enum class KernelKind { Rbf, Linear };

std::string to_string(KernelKind kind);
KernelKind kernel_from_string(const std::string& s);

struct SvmConfig {
    double C = 1.0;
    KernelKind kernel = KernelKind::Rbf;
    // nullopt means automatic: 1 / n_features, resolved at training time.
    // An explicit zero is rejected (it would make the RBF kernel constant).
    std::optional<double> gamma;
    double tolerance = 1e-3;
    // 0 means automatic: 10 * n_samples working-set iterations.
    std::size_t max_passes = 0;
    std::uint64_t seed = 0;

    void validate() const;
    bool operator==(const SvmConfig&) const = default;
};

double kernel_eval(KernelKind kind, double gamma, std::span<const double> x,
                   std::span<const double> z);
// Resolves automatic gamma from the vector dimension.
double kernel_eval(const SvmConfig& config, std::span<const double> x, std::span<const double> z);

struct Prediction {
    corpus::Label label = corpus::Label::NonRacist;
    double score = 0.0; // label is Racist iff score > 0
};

struct SvmModel {
    SvmConfig config;
    double gamma = 0.0; // resolved value used by the kernel
    std::vector<std::string> dims;
    std::size_t dim = 0;
    std::vector<double> support_vectors; // flat, n_sv x dim
    std::vector<double> dual_coefs;      // alpha_i * y_i, only alpha_i > 0
    double bias = 0.0;
    std::size_t iterations = 0;
    bool converged = true;
    std::map<std::string, std::string> metadata; // fold, dictionary, ...

    std::size_t num_support_vectors() const { return dual_coefs.size(); }
    std::span<const double> support_vector(std::size_t i) const;
};

// Soft-margin kernel SVM trained with SMO using maximal-KKT-violation pair
// selection on a precomputed Gram matrix. Deterministic. Labels are +1/-1
// with +1 the positive (racist) class.
SvmModel train(const SvmConfig& config, const std::vector<lexicon::FeatureVector>& X,
               const std::vector<int>& y);

Prediction predict(const SvmModel& model, const lexicon::FeatureVector& x);
// Raw decision value for a plain vector (dims unchecked).
double decision_value(const SvmModel& model, std::span<const double> x);

// Dual objective sum(alpha) - 1/2 sum_ij alpha_i alpha_j y_i y_j K_ij,
// computed from the stored support vectors.
double dual_objective(const SvmModel& model);

struct GridSearchResult {
    SvmConfig best;
    std::size_t best_index = 0;
    // Mean cross-validated F1 on the positive class per grid entry; NaN for
    // cells whose training failed.
    std::vector<double> mean_f1;
};

// Exhaustive search over configs, scored by stratified k-fold mean F1 on
// the positive class. Ties keep the earliest grid entry. Cell failures are
// recorded, never fatal.
GridSearchResult grid_search(const std::vector<SvmConfig>& grid,
                             const std::vector<lexicon::FeatureVector>& X,
                             const std::vector<int>& y, std::size_t k, std::uint64_t seed);

// Weighted random baseline: i.i.d. label draws by class prior. The score is
// the drawn class's prior, signed so that positive scores mean Racist.
std::vector<Prediction> weighted_random_baseline(const std::map<corpus::Label, double>& priors,
                                                 std::uint64_t seed, std::size_t n);

// Sorted unique word tokens over a tokenized corpus; the unigram dimension.
std::vector<std::string> build_vocabulary(const std::vector<tokenizer::TokenList>& token_lists);

// Relative-frequency vector over a fixed vocabulary. Out-of-vocabulary
// tokens count toward the denominator only.
lexicon::FeatureVector unigram_featurize(const std::vector<std::string>& vocabulary,
                                         const tokenizer::TokenList& tokens);

void save_model(const SvmModel& model, const std::string& path);
SvmModel load_model(const std::string& path);

} // namespace lexikit::svm
