#include "doctest.h"

#include "srcp/kernel.hpp"
#include "srcp/pursuit.hpp"
#include "srcp/rng.hpp"
#include "test_util.hpp"

using namespace srcp;
using namespace srcp::testutil;

TEST_CASE("kernel_eval closed forms") {
    Vec u(2), v(2);
    u << 1, 2;
    v << 3, 4;
    CHECK(kernel_eval(KernelSpec::make_linear(), u, v) == doctest::Approx(11.0));
    CHECK(kernel_eval(KernelSpec::make_rbf(2.0), u, u) == doctest::Approx(1.0));
    Vec a(2), b(2);
    a << 0, 0;
    b << 1, 1;
    CHECK(kernel_eval(KernelSpec::make_rbf(0.5), a, b) == doctest::Approx(std::exp(-1.0)));
    CHECK(kernel_eval(KernelSpec::make_polynomial(2, 1.0), u, v) == doctest::Approx(144.0));
    Vec w(3);
    CHECK_THROWS_AS(kernel_eval(KernelSpec::make_linear(), u, w), std::invalid_argument);
}

TEST_CASE("kernel_matrix structure") {
    Rng rng(41);
    Mat one = random_dict(5, 1, rng);
    Mat K1 = kernel_matrix(KernelSpec::make_rbf(1.0), one);
    REQUIRE(K1.rows() == 1);
    CHECK(K1(0, 0) == doctest::Approx(1.0));

    Mat ortho = random_orthonormal(4, rng);
    Mat Klin = kernel_matrix(KernelSpec::make_linear(), ortho);
    CHECK(Klin.isApprox(Mat::Identity(4, 4), 1e-12));

    Mat atoms = random_dict(6, 3, rng);
    KernelSpec rbf = KernelSpec::make_rbf(0.7);
    Mat K = kernel_matrix(rbf, atoms);
    CHECK((K - K.transpose()).cwiseAbs().maxCoeff() <= 1e-14);
    for (int i = 0; i < 3; ++i) {
        CHECK(K(i, i) == doctest::Approx(1.0));
        for (int j = 0; j < 3; ++j)
            CHECK(K(i, j) == doctest::Approx(kernel_eval(rbf, atoms.col(i), atoms.col(j))));
    }
}

TEST_CASE("kernel_vector matches elementwise evaluation") {
    Rng rng(42);
    Mat atoms = random_dict(6, 5, rng);
    Vec x = random_signal(6, rng);

    Vec klin = kernel_vector(KernelSpec::make_linear(), x, atoms);
    CHECK(klin.isApprox(atoms.transpose() * x, 1e-13));

    KernelSpec rbf = KernelSpec::make_rbf(1.5);
    Vec k = kernel_vector(rbf, x, atoms);
    for (int i = 0; i < 5; ++i) CHECK(k(i) == doctest::Approx(kernel_eval(rbf, x, atoms.col(i))));

    Vec k0 = kernel_vector(rbf, atoms.col(0), atoms);
    CHECK(k0(0) == doctest::Approx(1.0));
    CHECK(k0.maxCoeff() == doctest::Approx(k0(0)));
}

TEST_CASE("kernel_residual_norm conventions") {
    Rng rng(43);
    Mat atoms = random_dict(8, 4, rng);
    KernelSpec rbf = KernelSpec::make_rbf(0.9);
    Mat K = kernel_matrix(rbf, atoms);

    Vec x = atoms.col(2);
    Vec k = kernel_vector(rbf, x, atoms);
    double kxx = kernel_eval(rbf, x, x);
    CHECK(kernel_residual_norm(K, k, kxx, {2}) <= 1e-6);
    CHECK(kernel_residual_norm(K, k, kxx, {}) == doctest::Approx(std::sqrt(kxx)));

    // linear kernel must agree with the input-space least-squares residual
    Mat Klin = kernel_matrix(KernelSpec::make_linear(), atoms);
    Vec x2 = random_signal(8, rng);
    Vec k2 = kernel_vector(KernelSpec::make_linear(), x2, atoms);
    SupportSet support{0, 3};
    Mat sub(8, 2);
    sub.col(0) = atoms.col(0);
    sub.col(1) = atoms.col(3);
    double input_space = least_squares(sub, x2).residual_norm;
    CHECK(kernel_residual_norm(Klin, k2, x2.squaredNorm(), support) ==
          doctest::Approx(input_space).epsilon(1e-8));
}

TEST_CASE("kernel_residual_norm rejects inconsistent Gram data") {
    Mat K = Mat::Identity(2, 2);
    Vec k(2);
    k << 5, 0;  // impossible for a unit-diagonal PSD system with kxx = 1
    CHECK_THROWS_AS(kernel_residual_norm(K, k, 1.0, {0}), std::runtime_error);
}

TEST_CASE("kols and komp with the linear kernel reduce to ols and omp") {
    Rng rng(44);
    for (int trial = 0; trial < 50; ++trial) {
        Mat dict = random_nonneg_dict(10, 15, rng);
        Vec x = random_nonneg_signal(10, rng);
        Mat K = kernel_matrix(KernelSpec::make_linear(), dict);
        Vec k = kernel_vector(KernelSpec::make_linear(), x, dict);
        double kxx = x.squaredNorm();

        PursuitResult r_ols = ols(dict, x, 3);
        KernelPursuitResult r_kols = kols(K, k, kxx, 3);
        CHECK(r_kols.support == r_ols.support);
        CHECK(std::abs(r_kols.final_residual_norm - r_ols.final_residual_norm) <= 1e-8);

        PursuitResult r_omp = omp(dict, x, 3);
        KernelPursuitResult r_komp = komp(K, k, kxx, 3);
        CHECK(r_komp.support == r_omp.support);
        CHECK(std::abs(r_komp.final_residual_norm - r_omp.final_residual_norm) <= 1e-8);
    }
}

TEST_CASE("kols one-atom closed form") {
    Rng rng(45);
    Mat atoms = random_dict(7, 6, rng);
    KernelSpec rbf = KernelSpec::make_rbf(1.2);
    Mat K = kernel_matrix(rbf, atoms);
    Vec x = random_signal(7, rng);
    Vec k = kernel_vector(rbf, x, atoms);
    double kxx = kernel_eval(rbf, x, x);

    KernelPursuitResult res = kols(K, k, kxx, 1);
    int jmax = 0;
    for (int j = 1; j < 6; ++j)
        if (k(j) > k(jmax)) jmax = j;
    REQUIRE(res.support == SupportSet{jmax});
    double expect = std::sqrt(kxx - k(jmax) * k(jmax) / K(jmax, jmax));
    CHECK(res.final_residual_norm == doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("kols recovers a planted combination over orthonormal feature atoms") {
    Mat K = Mat::Identity(6, 6);
    Vec beta0 = Vec::Zero(6);
    beta0(1) = 0.8;
    beta0(4) = 0.6;
    Vec k = beta0;  // K * beta0
    double kxx = beta0.squaredNorm();
    KernelPursuitResult res = kols(K, k, kxx, 2);
    SupportSet s = res.support;
    std::sort(s.begin(), s.end());
    CHECK(s == SupportSet{1, 4});
    CHECK(res.final_residual_norm <= 1e-8);
}

TEST_CASE("komp shares the first atom with kols and kols dominates at sparsity 2") {
    Rng rng(46);
    for (int trial = 0; trial < 25; ++trial) {
        Mat atoms = random_dict(8, 10, rng);
        KernelSpec rbf = KernelSpec::make_rbf(0.8);
        Mat K = kernel_matrix(rbf, atoms);
        Vec x = random_signal(8, rng);
        Vec k = kernel_vector(rbf, x, atoms);
        double kxx = kernel_eval(rbf, x, x);

        CHECK(komp(K, k, kxx, 1).support == kols(K, k, kxx, 1).support);
        CHECK(komp(K, k, kxx, 2).final_residual_norm >=
              kols(K, k, kxx, 2).final_residual_norm - 1e-12);
    }
}

TEST_CASE("feature-space residual histories are non-increasing") {
    Rng rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        Mat atoms = random_dict(9, 12, rng);
        KernelSpec rbf = KernelSpec::make_rbf(1.0);
        Mat K = kernel_matrix(rbf, atoms);
        Vec x = random_signal(9, rng);
        Vec k = kernel_vector(rbf, x, atoms);
        double kxx = kernel_eval(rbf, x, x);
        for (const auto& res : {kols(K, k, kxx, 4), komp(K, k, kxx, 4)}) {
            for (std::size_t m = 1; m < res.residual_norm_history.size(); ++m)
                CHECK(res.residual_norm_history[m] <= res.residual_norm_history[m - 1] + 1e-10);
        }
    }
}

TEST_CASE("kernel pursuit input validation") {
    Mat K = Mat::Identity(3, 3);
    Vec k = Vec::Ones(3);
    CHECK_THROWS_AS(kols(K, k, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(kols(K, k, 1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(komp(K, Vec::Ones(2), 1.0, 1), std::invalid_argument);
}
