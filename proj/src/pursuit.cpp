#include "srcp/pursuit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace srcp {
namespace {

constexpr double kEarlyStopNorm = 1e-12;
constexpr double kMinImprovement = 1e-12;

void validate(const Mat& dict, const Vec& signal, int sparsity) {
    if (dict.rows() != signal.size())
        throw std::invalid_argument("pursuit: dictionary rows != signal length");
    check_finite(dict, "pursuit dictionary");
    check_finite(signal, "pursuit signal");
    const int max_s = static_cast<int>(std::min(dict.rows(), dict.cols()));
    if (sparsity < 1 || sparsity > max_s)
        throw std::invalid_argument("pursuit: sparsity " + std::to_string(sparsity) +
                                    " out of range [1, " + std::to_string(max_s) + "]");
}

// Shared precomputation for Gram-based candidate scans.
struct Workspace {
    const Mat& dict;
    const Vec& x;
    Mat gram;   // dict^T dict
    Vec corr;   // dict^T x
    double xx;  // ||x||^2

    Workspace(const Mat& d, const Vec& s)
        : dict(d), x(s), gram(d.transpose() * d), corr(d.transpose() * s), xx(s.squaredNorm()) {}
};

// Least-squares residual^2 on a subset via the Gram system. Returns nullopt
// when the subset Cholesky breaks down (numerically rank deficient).
std::optional<double> subset_residual_sq(const Workspace& w, const int* idx, int m) {
    double L[64];  // m <= sparsity, small by construction
    double y[8 * 8];
    if (m > 8) {
        // fall back to a dense solve for deep supports
        Mat sub(w.dict.rows(), m);
        for (int i = 0; i < m; ++i) sub.col(i) = w.dict.col(idx[i]);
        LsSolution sol = least_squares(sub, w.x);
        return sol.residual_norm * sol.residual_norm;
    }
    // Cholesky of gram submatrix, breakdown check on the pivot
    for (int j = 0; j < m; ++j) {
        double d = w.gram(idx[j], idx[j]);
        for (int k = 0; k < j; ++k) d -= L[j * 8 + k] * L[j * 8 + k];
        if (d < 1e-12) return std::nullopt;
        d = std::sqrt(d);
        L[j * 8 + j] = d;
        for (int i = j + 1; i < m; ++i) {
            double s = w.gram(idx[i], idx[j]);
            for (int k = 0; k < j; ++k) s -= L[i * 8 + k] * L[j * 8 + k];
            L[i * 8 + j] = s / d;
        }
    }
    for (int i = 0; i < m; ++i) {
        double s = w.corr(idx[i]);
        for (int k = 0; k < i; ++k) s -= L[i * 8 + k] * y[k];
        y[i] = s / L[i * 8 + i];
    }
    // ||x||^2 - b^T beta = ||x||^2 - ||y||^2
    double r2 = w.xx;
    for (int i = 0; i < m; ++i) r2 -= y[i] * y[i];
    return std::max(r2, 0.0);
}

Mat submatrix(const Mat& dict, const SupportSet& support) {
    Mat sub(dict.rows(), static_cast<Eigen::Index>(support.size()));
    for (std::size_t i = 0; i < support.size(); ++i) sub.col(static_cast<Eigen::Index>(i)) = dict.col(support[i]);
    return sub;
}

PursuitResult finalize(const Mat& dict, const Vec& signal, SupportSet support,
                       std::vector<double> history, int sparsity) {
    PursuitResult out;
    out.support = std::move(support);
    if (out.support.empty()) {
        out.coefficients = Vec(0);
    } else {
        out.coefficients = least_squares(submatrix(dict, out.support), signal).coefficients;
    }
    while (history.size() < static_cast<std::size_t>(sparsity) + 1) history.push_back(history.back());
    out.final_residual_norm = history.back();
    out.residual_history = std::move(history);
    return out;
}

PursuitResult zero_signal_result() {
    PursuitResult out;
    out.coefficients = Vec(0);
    out.residual_history = {0.0};
    out.final_residual_norm = 0.0;
    return out;
}

// OLS body; forced_first >= 0 pins the first atom (restart-COLS).
PursuitResult ols_impl(const Workspace& w, int sparsity, int forced_first) {
    const int n = static_cast<int>(w.dict.cols());
    SupportSet support;
    std::vector<double> history;
    double x_norm = std::sqrt(w.xx);
    history.push_back(x_norm);
    if (x_norm < kEarlyStopNorm) return zero_signal_result();

    std::vector<char> in_support(static_cast<std::size_t>(n), 0);
    std::vector<int> idx;
    double cur_norm = x_norm;

    for (int m = 0; m < sparsity; ++m) {
        int best = -1;
        double best_norm = std::numeric_limits<double>::infinity();
        if (m == 0 && forced_first >= 0) {
            best = forced_first;
            idx.assign(1, forced_first);
            auto r2 = subset_residual_sq(w, idx.data(), 1);
            best_norm = r2 ? std::sqrt(*r2) : cur_norm;
        } else {
            idx.assign(support.begin(), support.end());
            idx.push_back(0);
            for (int j = 0; j < n; ++j) {
                if (in_support[static_cast<std::size_t>(j)]) continue;
                idx.back() = j;
                auto r2 = subset_residual_sq(w, idx.data(), static_cast<int>(idx.size()));
                if (!r2) continue;  // rank-deficient inclusion
                double norm = std::sqrt(*r2);
                if (cur_norm - norm < kMinImprovement) continue;
                if (norm < best_norm) {
                    best_norm = norm;
                    best = j;
                }
            }
            if (best < 0) break;  // nothing improves; stop early
        }
        support.push_back(best);
        in_support[static_cast<std::size_t>(best)] = 1;
        // exact residual on the updated support
        cur_norm = least_squares(submatrix(w.dict, support), w.x).residual_norm;
        history.push_back(cur_norm);
        if (cur_norm < kEarlyStopNorm) break;
    }
    return finalize(w.dict, w.x, std::move(support), std::move(history), sparsity);
}

}  // namespace

PursuitResult omp(const Mat& dict, const Vec& signal, int sparsity) {
    validate(dict, signal, sparsity);
    const int n = static_cast<int>(dict.cols());
    SupportSet support;
    std::vector<double> history;
    double x_norm = signal.norm();
    history.push_back(x_norm);
    if (x_norm < kEarlyStopNorm) return zero_signal_result();

    std::vector<char> in_support(static_cast<std::size_t>(n), 0);
    Vec residual = signal;
    for (int m = 0; m < sparsity; ++m) {
        Vec corr = dict.transpose() * residual;
        int best = -1;
        double best_abs = -1.0;
        for (int j = 0; j < n; ++j) {
            if (in_support[static_cast<std::size_t>(j)]) continue;
            double a = std::abs(corr(j));
            if (a > best_abs) {
                best_abs = a;
                best = j;
            }
        }
        support.push_back(best);
        in_support[static_cast<std::size_t>(best)] = 1;
        LsSolution sol = least_squares(submatrix(dict, support), signal);
        residual = sol.residual;
        history.push_back(sol.residual_norm);
        if (sol.residual_norm < kEarlyStopNorm) break;
    }
    return finalize(dict, signal, std::move(support), std::move(history), sparsity);
}

PursuitResult ols(const Mat& dict, const Vec& signal, int sparsity) {
    validate(dict, signal, sparsity);
    Workspace w(dict, signal);
    return ols_impl(w, sparsity, -1);
}

PursuitResult cols(const Mat& dict, const Vec& signal, int sparsity) {
    validate(dict, signal, sparsity);
    Workspace w(dict, signal);
    if (signal.norm() < kEarlyStopNorm) return zero_signal_result();

    const int n = static_cast<int>(dict.cols());
    PursuitResult best;
    bool have = false;
    for (int j = 0; j < n; ++j) {
        PursuitResult run = ols_impl(w, sparsity, j);
        if (!have || run.final_residual_norm < best.final_residual_norm) {
            best = std::move(run);
            have = true;
        }
    }
    return best;
}

double binomial_approx(int n, int k) {
    double c = 1.0;
    for (int i = 0; i < k; ++i) c *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    return c;
}

PursuitResult exhaustive_best_subset(const Mat& dict, const Vec& signal, int sparsity,
                                     double max_subsets) {
    validate(dict, signal, sparsity);
    const int n = static_cast<int>(dict.cols());
    if (binomial_approx(n, sparsity) > max_subsets)
        throw std::runtime_error(
            "exhaustive_best_subset: C(" + std::to_string(n) + "," + std::to_string(sparsity) +
            ") exceeds the subset cap; reduce the sparsity level or dictionary size");
    if (signal.norm() < kEarlyStopNorm) return zero_signal_result();

    Workspace w(dict, signal);
    std::vector<int> idx(static_cast<std::size_t>(sparsity));
    for (int i = 0; i < sparsity; ++i) idx[static_cast<std::size_t>(i)] = i;

    std::vector<int> best_idx;
    double best_r2 = std::numeric_limits<double>::infinity();
    for (;;) {
        auto r2 = subset_residual_sq(w, idx.data(), sparsity);
        double val;
        if (r2) {
            val = *r2;
        } else {
            Mat sub = submatrix(dict, SupportSet(idx.begin(), idx.end()));
            double rn = least_squares(sub, signal).residual_norm;
            val = rn * rn;
        }
        if (val < best_r2) {  // strict: first (lexicographic) winner kept on ties
            best_r2 = val;
            best_idx = idx;
        }
        // next lexicographic combination
        int i = sparsity - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - sparsity + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < sparsity; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }

    // history over ascending-index prefixes of the winning subset
    SupportSet support(best_idx.begin(), best_idx.end());
    std::vector<double> history;
    history.push_back(signal.norm());
    for (std::size_t m = 1; m <= support.size(); ++m) {
        SupportSet prefix(support.begin(), support.begin() + static_cast<std::ptrdiff_t>(m));
        history.push_back(least_squares(submatrix(dict, prefix), signal).residual_norm);
    }
    return finalize(dict, signal, std::move(support), std::move(history), sparsity);
}

std::pair<Mat, Vec> fig1_fixture() {
    // Frozen by randomized search and validated against the exhaustive
    // oracle: a1 on the first axis, a2 in the 1-2 plane, a3 in the 1-3
    // plane, signal most correlated with a1.
    Mat dict(3, 3);
    dict.col(0) << 1.0, 0.0, 0.0;
    dict.col(1) << std::cos(1.06), std::sin(1.06), 0.0;
    dict.col(2) << std::cos(0.76), 0.0, std::sin(0.76);
    Vec signal(3);
    signal << 0.9, 0.3, 0.32;
    signal /= signal.norm();
    return {dict, signal};
}

}  // namespace srcp
