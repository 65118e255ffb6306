#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wkl/hermgroup.hpp"
#include "wkl/matcore.hpp"

using namespace wkl;

TEST_CASE("mat_exp examples") {
    CHECK(mat_exp(CMatrix::Zero(2, 2)).isApprox(CMatrix::Identity(2, 2)));

    CMatrix e0 = make_matrix({{0, 1}, {0, 0}});
    CHECK((mat_exp(e0) - make_matrix({{1, 1}, {0, 1}})).norm() == 0.0);

    CMatrix x0 = make_matrix({{0, 1}, {1, 0}});
    CMatrix a = mat_exp(0.7 * x0);
    CMatrix expect = make_matrix({{std::cosh(0.7), std::sinh(0.7)}, {std::sinh(0.7), std::cosh(0.7)}});
    CHECK((a - expect).norm() < 1e-14);
}

TEST_CASE("mat_exp rejects bad input") {
    CHECK_THROWS_AS(mat_exp(CMatrix::Zero(2, 3)), Error);
    CMatrix bad = CMatrix::Zero(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(mat_exp(bad), Error);
    CHECK_THROWS_AS(make_matrix(2, 2, {1, 2, 3}), Error);
}

TEST_CASE("nilpotency order is detected") {
    CMatrix n3 = CMatrix::Zero(3, 3);
    n3(0, 1) = 2.0;
    n3(1, 2) = -1.5;
    CHECK(nilpotency_order(n3) == 3);
    CHECK(nilpotency_order(CMatrix::Identity(3, 3)) == 0);
}

TEST_CASE("mat_log_unipotent examples") {
    CHECK(mat_log_unipotent(CMatrix::Identity(3, 3)).norm() == 0.0);
    Complex z(0.3, -1.2);
    CMatrix u = make_matrix({{1, z}, {0, 1}});
    CMatrix l = mat_log_unipotent(u);
    CHECK(std::abs(l(0, 1) - z) < 1e-15);
    CHECK(std::abs(l(0, 0)) + std::abs(l(1, 0)) + std::abs(l(1, 1)) == 0.0);
    CHECK_THROWS_AS(mat_log_unipotent(2.0 * CMatrix::Identity(2, 2)), Error);
}

TEST_CASE("exp/log round trip on random nilpotent matrices") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> nd;
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + trial % 5;
        CMatrix m = CMatrix::Zero(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) m(i, j) = Complex(nd(rng), nd(rng));
        m *= 5.0 * std::uniform_real_distribution<double>(0.0, 1.0)(rng) / m.norm();
        // Conjugate to leave the strictly triangular pattern.
        CMatrix s = CMatrix::Identity(n, n) + 0.2 * CMatrix::Random(n, n);
        CMatrix nm = s * m * s.inverse();
        CMatrix back = mat_log_unipotent(mat_exp(nm));
        worst = std::max(worst, (back - nm).norm());
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("mat_exp additivity on commuting pairs") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> nd;
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + trial % 4;
        CMatrix x = CMatrix::Zero(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) x(i, j) = Complex(nd(rng), nd(rng)) * 0.4;
        CMatrix y = 0.3 * x * x - 0.7 * x;  // polynomial in x, commutes with x
        CMatrix lhs = mat_exp(x + y);
        CMatrix rhs = mat_exp(x) * mat_exp(y);
        CHECK(rel_diff(lhs, rhs) <= 1e-10);
    }
}

TEST_CASE("mat_exp backward accuracy against eigen-decomposition") {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> nd;
    for (int n = 2; n <= 8; ++n) {
        CMatrix h(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) h(i, j) = Complex(nd(rng), nd(rng));
        h = (0.5 * (h + h.adjoint())).eval();
        Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
        CMatrix ref = es.eigenvectors() * es.eigenvalues().array().exp().matrix().cast<Complex>().asDiagonal() *
                      es.eigenvectors().adjoint();
        CHECK(rel_diff(ref, mat_exp(h)) / std::max(1.0, ref.norm()) <= 1e-12);
    }
}

TEST_CASE("indef_adjoint examples") {
    BlockSpec s{1, 1};
    CHECK(indef_adjoint(CMatrix::Identity(2, 2), s).isApprox(CMatrix::Identity(2, 2)));
    Complex g = std::polar(1.0, 0.8);
    CMatrix d = make_matrix({{g, 0}, {0, 1.0 / g}});
    CMatrix expect = make_matrix({{std::conj(g), 0}, {0, std::conj(1.0 / g)}});
    CHECK((indef_adjoint(d, s) - expect).norm() < 1e-15);
    CMatrix x0 = make_matrix({{0, 1}, {1, 0}});
    CHECK((theta_alg(x0, s) - make_matrix({{0, -1}, {-1, 0}})).norm() == 0.0);
    CHECK_THROWS_AS(indef_adjoint(CMatrix::Identity(3, 3), s), Error);
}

TEST_CASE("block helpers") {
    BlockSpec s{2, 1};
    CMatrix g = CMatrix::Random(3, 3);
    CMatrix back = block_diag(block_a(g, s), block_d(g, s)) + upper_block(block_b(g, s), s) + lower_block(block_c(g, s), s);
    CHECK((back - g).norm() == 0.0);
}
