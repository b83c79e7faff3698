#pragma once

#include <utility>
#include <vector>

#include "srcp/linalg.hpp"

namespace srcp {

// Atom indices in selection order, no duplicates.
using SupportSet = std::vector<int>;

struct PursuitResult {
    SupportSet support;
    Vec coefficients;  // aligned with support order
    // residual_history[m] = ||r|| after m atoms; entry 0 is ||signal||.
    // Padded with the final value on early stop so histories for the same
    // sparsity level stay length-comparable.
    std::vector<double> residual_history;
    double final_residual_norm = 0.0;
};

// Greedy pursuit over a dictionary with unit-norm columns. All solvers:
//   pre: dict.rows == signal.len, 1 <= sparsity <= min(rows, cols)
//   ties resolve to the lowest atom index; a zero signal returns an empty
//   support with residual_history = {0}; selection stops early once the
//   residual norm drops below 1e-12.

// Selects the atom most correlated with the current residual, then refits
// by least squares on the whole support.
PursuitResult omp(const Mat& dict, const Vec& signal, int sparsity);

// Selects the atom whose inclusion minimizes the post-projection residual.
// Candidates that improve the residual by less than 1e-12 (rank-deficient
// inclusions) are skipped.
PursuitResult ols(const Mat& dict, const Vec& signal, int sparsity);

// Restart form: one OLS run per dictionary atom with that atom forced
// first; the run with the smallest final residual wins (ties: lowest
// first-atom index).
PursuitResult cols(const Mat& dict, const Vec& signal, int sparsity);

// Global minimum over all S-subsets. Throws if C(cols, S) exceeds
// max_subsets. Support is in ascending index order; ties go to the
// lexicographically smallest subset.
PursuitResult exhaustive_best_subset(const Mat& dict, const Vec& signal, int sparsity,
                                     double max_subsets = 2e6);

// Frozen 3-atom, 3-d instance where OMP picks {0,1}, OLS picks {0,2} and
// COLS picks {1,2}, with strictly ordered residual norms.
std::pair<Mat, Vec> fig1_fixture();

double binomial_approx(int n, int k);

}  // namespace srcp
