#pragma once

#include "srcp/linalg.hpp"
#include "srcp/rng.hpp"

namespace srcp::testutil {

// unit-norm Gaussian atoms
inline Mat random_dict(int d, int n, Rng& rng) {
    Mat m(d, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) m(i, j) = rng.normal();
        m.col(j) /= m.col(j).norm();
    }
    return m;
}

// unit-norm atoms with nonnegative entries (reflectance-like data, so that
// signed and absolute correlation criteria agree)
inline Mat random_nonneg_dict(int d, int n, Rng& rng) {
    Mat m(d, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) m(i, j) = std::abs(rng.normal());
        m.col(j) /= m.col(j).norm();
    }
    return m;
}

inline Vec random_signal(int d, Rng& rng) {
    Vec v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = rng.normal();
    return v / v.norm();
}

inline Vec random_nonneg_signal(int d, Rng& rng) {
    Vec v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = std::abs(rng.normal());
    return v / v.norm();
}

// random orthonormal square dictionary via Gram-Schmidt
inline Mat random_orthonormal(int d, Rng& rng) {
    Mat m(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        Vec v(d);
        for (Eigen::Index i = 0; i < d; ++i) v(i) = rng.normal();
        for (Eigen::Index k = 0; k < j; ++k) v -= m.col(k).dot(v) * m.col(k);
        m.col(j) = v / v.norm();
    }
    return m;
}

}  // namespace srcp::testutil
