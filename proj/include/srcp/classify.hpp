#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srcp/kernel.hpp"
#include "srcp/linalg.hpp"
#include "srcp/pursuit.hpp"

namespace srcp {

enum class Method { src, ksrc, cd_omp, cd_ols, cd_cols, kcd_omp, kcd_ols, kcd_cols };

bool is_kernel_method(Method m);
bool is_class_dependent(Method m);
Method method_from_string(const std::string& name);
std::string to_string(Method m);

struct ClassifierKind {
    Method method = Method::cd_ols;
    int sparsity = 1;
    std::optional<KernelSpec> kernel;  // required iff the method is a kernel variant
};

// Training atoms with per-column class labels. Columns are unit-normalized
// at fit time; class ids are contiguous from 0.
struct LabeledDictionary {
    Mat atoms;                // d x n, unit-norm columns
    std::vector<int> labels;  // per-column class id
    std::vector<std::vector<int>> class_index;  // class -> ordered column positions

    int num_classes() const { return static_cast<int>(class_index.size()); }
    Mat class_atoms(int cls) const;
};

struct ClassificationResult {
    std::vector<double> residuals;  // per-class nu_l
    int label = 0;                  // argmin residual, lowest index on ties
    // Diagnostics: class-local atom positions for class-dependent methods,
    // global column indices for src/ksrc.
    std::vector<SupportSet> per_class_support;
};

LabeledDictionary fit(const Mat& atoms, const std::vector<int>& labels);

// Per-class Gram matrices for kernel methods, built once per batch.
struct GramCache {
    KernelSpec spec;
    std::vector<Mat> class_grams;
    std::optional<Mat> global_gram;  // only built for ksrc
};
GramCache build_gram_cache(const LabeledDictionary& model, const KernelSpec& spec,
                           bool need_global = false);

// Residual norm and support of the pursuit named by `kind`, restricted to
// one class (class-dependent methods) or split from the global pursuit
// (src/ksrc). Sparsity above the class atom count is clamped.
std::pair<double, SupportSet> class_residual(const LabeledDictionary& model, const Vec& x, int cls,
                                             const ClassifierKind& kind);

ClassificationResult classify(const LabeledDictionary& model, const Vec& x,
                              const ClassifierKind& kind);

ClassificationResult classify(const LabeledDictionary& model, const Vec& x,
                              const ClassifierKind& kind, const GramCache* cache);

// Elementwise classify over sample columns, order-preserving. Thread count
// comes from the SRCP_THREADS environment variable (default: hardware
// concurrency). Errors report the offending sample index.
std::vector<ClassificationResult> classify_batch(const LabeledDictionary& model,
                                                 const Mat& samples, const ClassifierKind& kind);

}  // namespace srcp
