#include "srcp/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace srcp {
namespace {

int clamp_sparsity(int sparsity, int limit) { return std::min(sparsity, limit); }

void validate_kind(const LabeledDictionary& model, const Vec& x, const ClassifierKind& kind) {
    if (x.size() != model.atoms.rows())
        throw std::invalid_argument("classify: sample dimension " + std::to_string(x.size()) +
                                    " != dictionary dimension " + std::to_string(model.atoms.rows()));
    check_finite(x, "classify sample");
    if (kind.sparsity < 1) throw std::invalid_argument("classify: sparsity must be >= 1");
    if (is_kernel_method(kind.method) != kind.kernel.has_value())
        throw std::invalid_argument(is_kernel_method(kind.method)
                                        ? "classify: kernel method requires a kernel spec"
                                        : "classify: kernel spec given for a non-kernel method");
}

int argmin_label(const std::vector<double>& residuals) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(residuals.size()); ++i)
        if (residuals[static_cast<std::size_t>(i)] < residuals[static_cast<std::size_t>(best)])
            best = i;
    return best;
}

// Eq.-style split residual of a single global pursuit: restrict support and
// coefficients to one class and measure the class-only reconstruction.
double src_class_residual(const LabeledDictionary& model, const Vec& x,
                          const PursuitResult& global, int cls, SupportSet* class_support) {
    Mat cols(model.atoms.rows(), 0);
    Vec beta(global.support.size());
    Eigen::Index m = 0;
    for (std::size_t i = 0; i < global.support.size(); ++i) {
        int col = global.support[i];
        if (model.labels[static_cast<std::size_t>(col)] != cls) continue;
        cols.conservativeResize(Eigen::NoChange, m + 1);
        cols.col(m) = model.atoms.col(col);
        beta(m) = global.coefficients(static_cast<Eigen::Index>(i));
        if (class_support) class_support->push_back(col);
        ++m;
    }
    if (m == 0) return x.norm();
    return (x - cols.leftCols(m) * beta.head(m)).norm();
}

double ksrc_class_residual(const Mat& K, const Vec& k, double kxx,
                           const LabeledDictionary& model, const KernelPursuitResult& global,
                           int cls, SupportSet* class_support) {
    std::vector<int> idx;
    std::vector<double> beta;
    for (std::size_t i = 0; i < global.support.size(); ++i) {
        int col = global.support[i];
        if (model.labels[static_cast<std::size_t>(col)] != cls) continue;
        idx.push_back(col);
        beta.push_back(global.coefficients(static_cast<Eigen::Index>(i)));
        if (class_support) class_support->push_back(col);
    }
    double val = kxx;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        val -= 2.0 * beta[i] * k(idx[i]);
        for (std::size_t j = 0; j < idx.size(); ++j) val += beta[i] * beta[j] * K(idx[i], idx[j]);
    }
    return std::sqrt(std::max(val, 0.0));
}

std::pair<double, SupportSet> cd_class_residual(const LabeledDictionary& model, const Vec& x,
                                                int cls, const ClassifierKind& kind,
                                                const GramCache* cache) {
    const auto& members = model.class_index[static_cast<std::size_t>(cls)];
    const int n_l = static_cast<int>(members.size());
    if (is_kernel_method(kind.method)) {
        const KernelSpec& spec = *kind.kernel;
        Mat class_atoms = model.class_atoms(cls);
        Mat K = (cache && cache->class_grams.size() > static_cast<std::size_t>(cls))
                    ? cache->class_grams[static_cast<std::size_t>(cls)]
                    : kernel_matrix(spec, class_atoms);
        Vec k = kernel_vector(spec, x, class_atoms);
        double kxx = kernel_eval(spec, x, x);
        int s = clamp_sparsity(kind.sparsity, n_l);
        KernelPursuitResult res;
        switch (kind.method) {
            case Method::kcd_omp:
                res = komp(K, k, kxx, s);
                break;
            case Method::kcd_ols:
                res = kols(K, k, kxx, s);
                break;
            case Method::kcd_cols: {
                bool have = false;
                for (int j = 0; j < n_l; ++j) {
                    KernelPursuitResult run = kols_forced_first(K, k, kxx, s, j);
                    if (!have || run.final_residual_norm < res.final_residual_norm) {
                        res = std::move(run);
                        have = true;
                    }
                }
                break;
            }
            default:
                throw std::logic_error("cd_class_residual: not a kernel cd method");
        }
        return {res.final_residual_norm, res.support};
    }

    Mat sub = model.class_atoms(cls);
    int s = clamp_sparsity(kind.sparsity, std::min<int>(n_l, static_cast<int>(model.atoms.rows())));
    PursuitResult res;
    switch (kind.method) {
        case Method::cd_omp: res = omp(sub, x, s); break;
        case Method::cd_ols: res = ols(sub, x, s); break;
        case Method::cd_cols: res = cols(sub, x, s); break;
        default: throw std::logic_error("cd_class_residual: not a cd method");
    }
    return {res.final_residual_norm, res.support};
}

unsigned thread_count() {
    if (const char* env = std::getenv("SRCP_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

}  // namespace

bool is_kernel_method(Method m) {
    return m == Method::ksrc || m == Method::kcd_omp || m == Method::kcd_ols ||
           m == Method::kcd_cols;
}

bool is_class_dependent(Method m) { return m != Method::src && m != Method::ksrc; }

Method method_from_string(const std::string& name) {
    if (name == "src") return Method::src;
    if (name == "ksrc") return Method::ksrc;
    if (name == "cd_omp") return Method::cd_omp;
    if (name == "cd_ols") return Method::cd_ols;
    if (name == "cd_cols") return Method::cd_cols;
    if (name == "kcd_omp") return Method::kcd_omp;
    if (name == "kcd_ols") return Method::kcd_ols;
    if (name == "kcd_cols") return Method::kcd_cols;
    throw std::invalid_argument("unknown method: " + name);
}

std::string to_string(Method m) {
    switch (m) {
        case Method::src: return "src";
        case Method::ksrc: return "ksrc";
        case Method::cd_omp: return "cd_omp";
        case Method::cd_ols: return "cd_ols";
        case Method::cd_cols: return "cd_cols";
        case Method::kcd_omp: return "kcd_omp";
        case Method::kcd_ols: return "kcd_ols";
        case Method::kcd_cols: return "kcd_cols";
    }
    return "?";
}

Mat LabeledDictionary::class_atoms(int cls) const {
    const auto& members = class_index[static_cast<std::size_t>(cls)];
    Mat sub(atoms.rows(), static_cast<Eigen::Index>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
        sub.col(static_cast<Eigen::Index>(i)) = atoms.col(members[i]);
    return sub;
}

LabeledDictionary fit(const Mat& atoms, const std::vector<int>& labels) {
    if (static_cast<Eigen::Index>(labels.size()) != atoms.cols())
        throw std::invalid_argument("fit: label count != atom count");
    if (atoms.cols() < 1 || atoms.rows() < 1)
        throw std::invalid_argument("fit: empty dictionary");
    check_finite(atoms, "fit atoms");

    int num_classes = 0;
    for (int l : labels) {
        if (l < 0) throw std::invalid_argument("fit: negative class id");
        num_classes = std::max(num_classes, l + 1);
    }

    LabeledDictionary model;
    model.atoms = atoms;
    model.labels = labels;
    model.class_index.resize(static_cast<std::size_t>(num_classes));
    for (Eigen::Index j = 0; j < atoms.cols(); ++j) {
        double n = model.atoms.col(j).norm();
        if (n < 1e-300)
            throw std::invalid_argument("fit: zero-norm atom at column " + std::to_string(j));
        model.atoms.col(j) /= n;
        model.class_index[static_cast<std::size_t>(labels[static_cast<std::size_t>(j)])].push_back(
            static_cast<int>(j));
    }
    for (int c = 0; c < num_classes; ++c)
        if (model.class_index[static_cast<std::size_t>(c)].empty())
            throw std::invalid_argument("fit: class " + std::to_string(c) + " has no atoms");
    return model;
}

GramCache build_gram_cache(const LabeledDictionary& model, const KernelSpec& spec,
                           bool need_global) {
    GramCache cache;
    cache.spec = spec;
    cache.class_grams.reserve(static_cast<std::size_t>(model.num_classes()));
    for (int c = 0; c < model.num_classes(); ++c)
        cache.class_grams.push_back(kernel_matrix(spec, model.class_atoms(c)));
    if (need_global) cache.global_gram = kernel_matrix(spec, model.atoms);
    return cache;
}

std::pair<double, SupportSet> class_residual(const LabeledDictionary& model, const Vec& x, int cls,
                                             const ClassifierKind& kind) {
    validate_kind(model, x, kind);
    if (cls < 0 || cls >= model.num_classes())
        throw std::invalid_argument("class_residual: class id out of range");
    if (is_class_dependent(kind.method)) return cd_class_residual(model, x, cls, kind, nullptr);
    ClassificationResult full = classify(model, x, kind);
    return {full.residuals[static_cast<std::size_t>(cls)],
            full.per_class_support[static_cast<std::size_t>(cls)]};
}

ClassificationResult classify(const LabeledDictionary& model, const Vec& x,
                              const ClassifierKind& kind) {
    return classify(model, x, kind, nullptr);
}

ClassificationResult classify(const LabeledDictionary& model, const Vec& x,
                              const ClassifierKind& kind, const GramCache* cache) {
    validate_kind(model, x, kind);
    const int c = model.num_classes();
    ClassificationResult out;
    out.residuals.resize(static_cast<std::size_t>(c));
    out.per_class_support.resize(static_cast<std::size_t>(c));

    if (kind.method == Method::src) {
        int s = clamp_sparsity(kind.sparsity,
                               static_cast<int>(std::min(model.atoms.rows(), model.atoms.cols())));
        PursuitResult global = omp(model.atoms, x, s);
        for (int i = 0; i < c; ++i)
            out.residuals[static_cast<std::size_t>(i)] =
                src_class_residual(model, x, global, i, &out.per_class_support[static_cast<std::size_t>(i)]);
    } else if (kind.method == Method::ksrc) {
        const KernelSpec& spec = *kind.kernel;
        Mat K = (cache && cache->global_gram) ? *cache->global_gram
                                              : kernel_matrix(spec, model.atoms);
        Vec k = kernel_vector(spec, x, model.atoms);
        double kxx = kernel_eval(spec, x, x);
        int s = clamp_sparsity(kind.sparsity, static_cast<int>(model.atoms.cols()));
        KernelPursuitResult global = komp(K, k, kxx, s);
        for (int i = 0; i < c; ++i)
            out.residuals[static_cast<std::size_t>(i)] = ksrc_class_residual(
                K, k, kxx, model, global, i, &out.per_class_support[static_cast<std::size_t>(i)]);
    } else {
        for (int i = 0; i < c; ++i) {
            auto [nu, support] = cd_class_residual(model, x, i, kind, cache);
            out.residuals[static_cast<std::size_t>(i)] = nu;
            out.per_class_support[static_cast<std::size_t>(i)] = std::move(support);
        }
    }
    out.label = argmin_label(out.residuals);
    return out;
}

std::vector<ClassificationResult> classify_batch(const LabeledDictionary& model,
                                                 const Mat& samples, const ClassifierKind& kind) {
    const Eigen::Index count = samples.cols();
    std::vector<ClassificationResult> results(static_cast<std::size_t>(count));
    if (count == 0) return results;
    if (samples.rows() != model.atoms.rows())
        throw std::invalid_argument("classify_batch: sample dimension mismatch");

    GramCache cache;
    const GramCache* cache_ptr = nullptr;
    if (is_kernel_method(kind.method) && kind.kernel) {
        cache = build_gram_cache(model, *kind.kernel, kind.method == Method::ksrc);
        cache_ptr = &cache;
    }

    unsigned workers = std::min<unsigned>(thread_count(), static_cast<unsigned>(count));
    std::vector<Eigen::Index> fail_at(workers, count);
    std::vector<std::string> fail_msg(workers);
    auto work = [&](unsigned w) {
        for (Eigen::Index i = static_cast<Eigen::Index>(w); i < count;
             i += static_cast<Eigen::Index>(workers)) {
            try {
                results[static_cast<std::size_t>(i)] = classify(model, samples.col(i), kind, cache_ptr);
            } catch (const std::exception& e) {
                fail_at[w] = i;
                fail_msg[w] = e.what();
                return;
            }
        }
    };

    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    unsigned worst = 0;
    for (unsigned w = 1; w < workers; ++w)
        if (fail_at[w] < fail_at[worst]) worst = w;
    if (fail_at[worst] < count)
        throw std::runtime_error("classify_batch: sample " + std::to_string(fail_at[worst]) + ": " +
                                 fail_msg[worst]);
    return results;
}

}  // namespace srcp
