#pragma once

#include <string>
#include <vector>

#include "srcp/linalg.hpp"
#include "srcp/pursuit.hpp"

namespace srcp {

enum class KernelFamily { linear, rbf, polynomial };

struct KernelSpec {
    KernelFamily family = KernelFamily::linear;
    double gamma = 1.0;  // rbf bandwidth
    int degree = 2;      // polynomial only
    double coef0 = 0.0;  // polynomial only

    static KernelSpec make_linear() { return {}; }
    static KernelSpec make_rbf(double gamma);
    static KernelSpec make_polynomial(int degree, double coef0);
};

KernelFamily kernel_family_from_string(const std::string& name);
std::string to_string(KernelFamily family);

struct KernelPursuitResult {
    SupportSet support;  // class-local atom positions, selection order
    Vec coefficients;
    std::vector<double> residual_norm_history;  // feature-space norms, entry 0 = sqrt(kxx)
    double final_residual_norm = 0.0;
};

double kernel_eval(const KernelSpec& spec, const Vec& u, const Vec& v);

// n x n symmetric matrix of pairwise kernel values over the atom columns.
Mat kernel_matrix(const KernelSpec& spec, const Mat& atoms);

// kernel_eval(x, atom_i) for every atom column.
Vec kernel_vector(const KernelSpec& spec, const Vec& x, const Mat& atoms);

// Ridge used in every Gram subsystem solve: 1e-10 * trace/size.
double gram_ridge(const Mat& K);

// Feature-space residual norm of the least-squares fit on `support`:
// sqrt(kxx - 2 b^T k_S + b^T K_SS b). An empty support yields sqrt(kxx).
// A sqrt argument below -1e-10 signals broken Gram consistency and throws;
// round-off within [-1e-10, 0) is clamped to 0.
double kernel_residual_norm(const Mat& K, const Vec& k, double kxx, const SupportSet& support);

// Feature-space OLS: first atom is the largest entry of k, later atoms
// minimize the feature-space residual. Mirrors `ols` under the linear kernel.
KernelPursuitResult kols(const Mat& K, const Vec& k, double kxx, int sparsity);

// Restart variant of kols with the first atom pinned (kernel COLS building block).
KernelPursuitResult kols_forced_first(const Mat& K, const Vec& k, double kxx, int sparsity,
                                      int first_atom);

// Feature-space OMP: first atom as kols, later atoms maximize the residual
// correlation |k_j - K_{j,S} beta| / sqrt(K_jj). Mirrors `omp` under the
// linear kernel.
KernelPursuitResult komp(const Mat& K, const Vec& k, double kxx, int sparsity);

}  // namespace srcp
