#include "srcp/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace srcp {

void check_finite(const Mat& m, const std::string& what) {
    if (!m.allFinite())
        throw std::invalid_argument(what + ": non-finite entry");
}

void check_finite(const Vec& v, const std::string& what) {
    if (!v.allFinite())
        throw std::invalid_argument(what + ": non-finite entry");
}

LsSolution least_squares(const Mat& columns, const Vec& target) {
    if (columns.rows() != target.size())
        throw std::invalid_argument("least_squares: dimension mismatch (" +
                                    std::to_string(columns.rows()) + " rows vs target length " +
                                    std::to_string(target.size()) + ")");
    if (columns.cols() < 1)
        throw std::invalid_argument("least_squares: no columns");
    check_finite(columns, "least_squares columns");
    check_finite(target, "least_squares target");

    Eigen::CompleteOrthogonalDecomposition<Mat> cod(columns.rows(), columns.cols());
    cod.setThreshold(1e-10);
    cod.compute(columns);

    LsSolution out;
    out.coefficients = cod.solve(target);
    out.residual = target - columns * out.coefficients;
    out.residual_norm = out.residual.norm();
    return out;
}

Vec solve_spd(const Mat& gram, const Vec& rhs, double ridge) {
    const Eigen::Index n = gram.rows();
    if (gram.cols() != n)
        throw std::invalid_argument("solve_spd: matrix not square");
    if (rhs.size() != n)
        throw std::invalid_argument("solve_spd: rhs length mismatch");
    if (ridge < 0.0)
        throw std::invalid_argument("solve_spd: negative ridge");
    check_finite(gram, "solve_spd gram");
    check_finite(rhs, "solve_spd rhs");

    const double scale = gram.cwiseAbs().maxCoeff();
    const double asym = (gram - gram.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10 * std::max(scale, 1.0))
        throw std::invalid_argument("solve_spd: matrix not symmetric");

    // in-place Cholesky so the failing pivot can be reported
    Mat L = gram;
    L.diagonal().array() += ridge;
    for (Eigen::Index j = 0; j < n; ++j) {
        double d = L(j, j);
        for (Eigen::Index k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
        if (!(d > 0.0))
            throw std::runtime_error("solve_spd: non-positive pivot at index " +
                                     std::to_string(j));
        d = std::sqrt(d);
        L(j, j) = d;
        for (Eigen::Index i = j + 1; i < n; ++i) {
            double s = L(i, j);
            for (Eigen::Index k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
            L(i, j) = s / d;
        }
    }

    Vec y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double s = rhs(i);
        for (Eigen::Index k = 0; k < i; ++k) s -= L(i, k) * y(k);
        y(i) = s / L(i, i);
    }
    Vec v(n);
    for (Eigen::Index i = n - 1; i >= 0; --i) {
        double s = y(i);
        for (Eigen::Index k = i + 1; k < n; ++k) s -= L(k, i) * v(k);
        v(i) = s / L(i, i);
    }
    return v;
}

double norm2(const Vec& v) { return v.norm(); }

}  // namespace srcp
