#pragma once

#include <Eigen/Dense>
#include <string>

namespace srcp {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

struct LsSolution {
    Vec coefficients;      // one per selected column
    Vec residual;          // target - columns * coefficients
    double residual_norm;  // l2 norm of residual
};

// Throws std::invalid_argument naming `what` if any entry is NaN/Inf.
void check_finite(const Mat& m, const std::string& what);
void check_finite(const Vec& v, const std::string& what);

// Minimum-norm least squares via a rank-revealing (complete orthogonal)
// decomposition. Rank-deficient inputs get the minimum-norm solution,
// relative rank tolerance 1e-10.
LsSolution least_squares(const Mat& columns, const Vec& target);

// Solves (gram + ridge*I) v = rhs by Cholesky. `gram` must be symmetric
// within 1e-10 relative; a non-positive pivot throws with the pivot index.
Vec solve_spd(const Mat& gram, const Vec& rhs, double ridge);

double norm2(const Vec& v);

}  // namespace srcp
