#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "srcp/classify.hpp"
#include "srcp/linalg.hpp"

namespace srcp {

// Samples as columns (d x N), contiguous class ids from 0.
struct LabeledDataset {
    Mat features;
    std::vector<int> labels;
    std::vector<std::string> class_names;  // id -> name

    int num_classes() const { return static_cast<int>(class_names.size()); }
    Eigen::Index dim() const { return features.rows(); }
    Eigen::Index size() const { return features.cols(); }
};

struct SplitSpec {
    int per_class_train = 10;
    int repeats = 1;
    std::uint64_t seed = 0;
};

struct CvGrid {
    std::vector<int> sparsity_levels;
    std::vector<double> gammas;  // ignored for non-kernel methods
    int folds = 5;
};

struct CvCell {
    int sparsity;
    double gamma;  // 0 for non-kernel methods
    double mean_accuracy;
};

struct CvResult {
    int best_sparsity;
    double best_gamma;
    std::vector<CvCell> table;
};

// CSV contract: UTF-8, header "f0,...,f{d-1},label", one sample per row,
// numeric feature cells, arbitrary non-empty label strings mapped to
// contiguous ids by first appearance.
LabeledDataset load_csv(const std::string& path);
void save_csv(const LabeledDataset& ds, const std::string& path);

// Draws exactly per_class_train samples per class without replacement from
// a stream seeded by (seed, repeat); the remainder becomes the test set.
std::pair<LabeledDataset, LabeledDataset> stratified_split(const LabeledDataset& ds,
                                                           const SplitSpec& spec, int repeat);

// Per class: a random orthonormal basis of subspace_dim in ambient_dim,
// samples are random in-subspace combinations plus isotropic noise, then
// unit-normalized.
LabeledDataset synth_subspace(int classes, int subspace_dim, int ambient_dim, int per_class,
                              double noise_sigma, std::uint64_t seed);

// Stratified k-fold selection of (sparsity, gamma) maximizing mean fold
// accuracy; ties prefer smaller sparsity, then smaller gamma.
CvResult cross_validate(const LabeledDataset& train, const ClassifierKind& kind_template,
                        const CvGrid& grid, std::uint64_t seed);

double accuracy_percent(const std::vector<int>& predictions, const std::vector<int>& truth);
std::vector<double> per_class_accuracy_percent(const std::vector<int>& predictions,
                                               const std::vector<int>& truth, int num_classes);

struct MeanStd {
    double mean;
    double stddev;  // sample std, (n-1) divisor; 0 for a single value
};
MeanStd mean_std(const std::vector<double>& values);

LabeledDictionary fit_dataset(const LabeledDataset& ds);

}  // namespace srcp
