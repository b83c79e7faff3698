#include "srcp/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace srcp {
namespace {

constexpr double kEarlyStopNorm = 1e-12;
constexpr double kMinImprovement = 1e-12;
constexpr double kSqrtGuard = 1e-10;

void validate_kernel_system(const Mat& K, const Vec& k, double kxx, int sparsity) {
    if (K.rows() != K.cols())
        throw std::invalid_argument("kernel pursuit: Gram matrix not square");
    if (k.size() != K.rows())
        throw std::invalid_argument("kernel pursuit: k length != Gram size");
    if (!(kxx >= 0.0))
        throw std::invalid_argument("kernel pursuit: kxx must be nonnegative");
    if (sparsity < 1 || sparsity > static_cast<int>(K.rows()))
        throw std::invalid_argument("kernel pursuit: sparsity out of range [1, " +
                                    std::to_string(K.rows()) + "]");
    check_finite(K, "kernel Gram matrix");
    check_finite(k, "kernel vector");
}

Mat sub_gram(const Mat& K, const SupportSet& s) {
    const auto m = static_cast<Eigen::Index>(s.size());
    Mat out(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            out(i, j) = K(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]);
    // symmetrize: element-wise extraction can keep tiny asymmetries of K
    out = ((out + out.transpose()) * 0.5).eval();
    return out;
}

Vec sub_vec(const Vec& k, const SupportSet& s) {
    Vec out(static_cast<Eigen::Index>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) out(static_cast<Eigen::Index>(i)) = k(s[i]);
    return out;
}

double residual_sq(const Mat& K, const Vec& k, double kxx, const SupportSet& s, double ridge,
                   Vec* beta_out) {
    Mat Ks = sub_gram(K, s);
    Vec ks = sub_vec(k, s);
    Vec beta = solve_spd(Ks, ks, ridge);
    double val = kxx - 2.0 * beta.dot(ks) + beta.dot(Ks * beta);
    if (beta_out) *beta_out = std::move(beta);
    return val;
}

int argmax_entry(const Vec& k) {
    int best = 0;
    for (int j = 1; j < k.size(); ++j)
        if (k(j) > k(best)) best = j;
    return best;
}

KernelPursuitResult finalize(const Mat& K, const Vec& k, double kxx, SupportSet support,
                             std::vector<double> history, int sparsity, double ridge) {
    KernelPursuitResult out;
    if (!support.empty()) {
        Mat Ks = sub_gram(K, support);
        Vec ks = sub_vec(k, support);
        out.coefficients = solve_spd(Ks, ks, ridge);
    } else {
        out.coefficients = Vec(0);
    }
    out.support = std::move(support);
    while (history.size() < static_cast<std::size_t>(sparsity) + 1) history.push_back(history.back());
    out.final_residual_norm = history.back();
    out.residual_norm_history = std::move(history);
    return out;
}

KernelPursuitResult kernel_pursuit(const Mat& K, const Vec& k, double kxx, int sparsity,
                                   int forced_first, bool correlation_rule) {
    validate_kernel_system(K, k, kxx, sparsity);
    const int n = static_cast<int>(K.rows());
    const double ridge = gram_ridge(K);

    KernelPursuitResult out;
    SupportSet support;
    std::vector<double> history;
    double cur = std::sqrt(std::max(kxx, 0.0));
    history.push_back(cur);
    if (cur < kEarlyStopNorm)
        return finalize(K, k, kxx, {}, {cur}, 0, ridge);

    std::vector<char> in_support(static_cast<std::size_t>(n), 0);
    Vec beta(0);

    for (int m = 0; m < sparsity; ++m) {
        int best = -1;
        if (m == 0) {
            best = forced_first >= 0 ? forced_first : argmax_entry(k);
        } else if (correlation_rule) {
            // feature-space correlation of each candidate with the residual
            double best_score = -1.0;
            for (int j = 0; j < n; ++j) {
                if (in_support[static_cast<std::size_t>(j)]) continue;
                double proj = 0.0;
                for (std::size_t i = 0; i < support.size(); ++i)
                    proj += K(j, support[i]) * beta(static_cast<Eigen::Index>(i));
                double denom = std::sqrt(std::max(K(j, j), kEarlyStopNorm));
                double score = std::abs(k(j) - proj) / denom;
                if (score > best_score) {
                    best_score = score;
                    best = j;
                }
            }
        } else {
            double best_norm = std::numeric_limits<double>::infinity();
            SupportSet cand = support;
            cand.push_back(0);
            for (int j = 0; j < n; ++j) {
                if (in_support[static_cast<std::size_t>(j)]) continue;
                cand.back() = j;
                double norm;
                try {
                    norm = std::sqrt(std::max(residual_sq(K, k, kxx, cand, ridge, nullptr), 0.0));
                } catch (const std::runtime_error&) {
                    continue;  // subsystem not positive definite even with ridge
                }
                if (cur - norm < kMinImprovement) continue;
                if (norm < best_norm) {
                    best_norm = norm;
                    best = j;
                }
            }
            if (best < 0) break;
        }
        support.push_back(best);
        in_support[static_cast<std::size_t>(best)] = 1;
        double r2 = residual_sq(K, k, kxx, support, ridge, &beta);
        cur = std::sqrt(std::max(r2, 0.0));
        history.push_back(cur);
        if (cur < kEarlyStopNorm) break;
    }
    return finalize(K, k, kxx, std::move(support), std::move(history), sparsity, ridge);
}

}  // namespace

KernelSpec KernelSpec::make_rbf(double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("KernelSpec: rbf gamma must be positive");
    KernelSpec s;
    s.family = KernelFamily::rbf;
    s.gamma = gamma;
    return s;
}

KernelSpec KernelSpec::make_polynomial(int degree, double coef0) {
    if (degree < 1) throw std::invalid_argument("KernelSpec: polynomial degree must be >= 1");
    KernelSpec s;
    s.family = KernelFamily::polynomial;
    s.degree = degree;
    s.coef0 = coef0;
    return s;
}

KernelFamily kernel_family_from_string(const std::string& name) {
    if (name == "linear") return KernelFamily::linear;
    if (name == "rbf") return KernelFamily::rbf;
    if (name == "polynomial" || name == "poly") return KernelFamily::polynomial;
    throw std::invalid_argument("unknown kernel family: " + name);
}

std::string to_string(KernelFamily family) {
    switch (family) {
        case KernelFamily::linear: return "linear";
        case KernelFamily::rbf: return "rbf";
        case KernelFamily::polynomial: return "polynomial";
    }
    return "?";
}

double kernel_eval(const KernelSpec& spec, const Vec& u, const Vec& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("kernel_eval: dimension mismatch");
    switch (spec.family) {
        case KernelFamily::linear:
            return u.dot(v);
        case KernelFamily::rbf:
            return std::exp(-spec.gamma * (u - v).squaredNorm());
        case KernelFamily::polynomial:
            return std::pow(u.dot(v) + spec.coef0, spec.degree);
    }
    return 0.0;
}

Mat kernel_matrix(const KernelSpec& spec, const Mat& atoms) {
    const Eigen::Index n = atoms.cols();
    if (n < 1) throw std::invalid_argument("kernel_matrix: no atoms");
    Mat K(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            double v = kernel_eval(spec, atoms.col(i), atoms.col(j));
            K(i, j) = v;
            K(j, i) = v;
        }
    }
    return K;
}

Vec kernel_vector(const KernelSpec& spec, const Vec& x, const Mat& atoms) {
    Vec k(atoms.cols());
    for (Eigen::Index i = 0; i < atoms.cols(); ++i) k(i) = kernel_eval(spec, x, atoms.col(i));
    return k;
}

double gram_ridge(const Mat& K) {
    return 1e-10 * K.trace() / static_cast<double>(K.rows());
}

double kernel_residual_norm(const Mat& K, const Vec& k, double kxx, const SupportSet& support) {
    if (support.empty()) return std::sqrt(std::max(kxx, 0.0));
    for (int idx : support)
        if (idx < 0 || idx >= K.rows())
            throw std::invalid_argument("kernel_residual_norm: support index out of range");
    double val = residual_sq(K, k, kxx, support, gram_ridge(K), nullptr);
    if (val < -kSqrtGuard)
        throw std::runtime_error("kernel_residual_norm: squared residual " + std::to_string(val) +
                                 " below round-off guard; Gram data inconsistent");
    return std::sqrt(std::max(val, 0.0));
}

KernelPursuitResult kols(const Mat& K, const Vec& k, double kxx, int sparsity) {
    return kernel_pursuit(K, k, kxx, sparsity, -1, false);
}

KernelPursuitResult kols_forced_first(const Mat& K, const Vec& k, double kxx, int sparsity,
                                      int first_atom) {
    if (first_atom < 0 || first_atom >= K.rows())
        throw std::invalid_argument("kols_forced_first: first atom out of range");
    return kernel_pursuit(K, k, kxx, sparsity, first_atom, false);
}

KernelPursuitResult komp(const Mat& K, const Vec& k, double kxx, int sparsity) {
    return kernel_pursuit(K, k, kxx, sparsity, -1, true);
}

}  // namespace srcp
