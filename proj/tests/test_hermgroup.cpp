#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wkl/hermgroup.hpp"

using namespace wkl;

namespace {
const BlockSpec SU11{1, 1};
const BlockSpec SU21{2, 1};

CMatrix a_t(double t) {
    return make_matrix({{std::cosh(t), std::sinh(t)}, {std::sinh(t), std::cosh(t)}});
}
}  // namespace

TEST_CASE("hc_factorize examples") {
    HCTriple id = hc_factorize(CMatrix::Identity(3, 3), SU21);
    CHECK(id.zplus.norm() == 0.0);
    CHECK(id.zminus.norm() == 0.0);
    CHECK(id.k.isApprox(CMatrix::Identity(3, 3)));

    Complex a(2, 1), b(0.5, -1), d(1.5, 0.25);
    Complex c = (a * d - 1.0) / b;
    CMatrix g = make_matrix({{a, b}, {c, d}});
    HCTriple t = hc_factorize(g, SU11);
    CHECK(std::abs(t.zplus(0, 0) - b / d) < 1e-14);
    CHECK(std::abs(t.k(0, 0) - 1.0 / d) < 1e-14);
    CHECK(std::abs(t.zminus(0, 0) - c / d) < 1e-14);
    CHECK(rel_diff(t.reassemble(SU11), g) < 1e-14);

    HCTriple ta = hc_factorize(a_t(0.7), SU11);
    CHECK(std::abs(ta.zplus(0, 0) - std::tanh(0.7)) < 1e-15);
    CHECK(std::abs(ta.zminus(0, 0) - std::tanh(0.7)) < 1e-15);
    CHECK(std::abs(ta.k(0, 0) - 1.0 / std::cosh(0.7)) < 1e-15);
    CHECK(std::abs(ta.k(1, 1) - std::cosh(0.7)) < 1e-15);
}

TEST_CASE("hc_factorize reports the dense-cell complement") {
    CMatrix w = make_matrix({{0, -1}, {1, 0}});
    try {
        hc_factorize(w, SU11);
        FAIL("expected NotInDenseCell");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInDenseCell);
    }
}

TEST_CASE("group element certificates") {
    CHECK_NOTHROW(GroupElement::su(a_t(0.3), SU11));
    CHECK_THROWS_AS(GroupElement::su(2.0 * CMatrix::Identity(2, 2), SU11), Error);
    CHECK_NOTHROW(GroupElement::sl2c(make_matrix({{1, 0}, {Complex(0, 1), 1}})));
    CHECK_THROWS_AS(GroupElement::sl2c(make_matrix({{1, 1}, {1, 1}})), Error);
}

TEST_CASE("domain_action examples and group action") {
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        CMatrix z = random_domain_point(rng, SU21, 0.9);
        CMatrix g = random_group(rng, SU21, 2.0), h = random_group(rng, SU21, 2.0);
        auto gz = domain_action(GroupElement::su(g, SU21), DomainPoint::make(z));
        CHECK(DomainPoint::contains(gz.z()));
        CMatrix lhs = mobius(g * h, z, SU21);
        CMatrix rhs = mobius(g, mobius(h, z, SU21), SU21);
        CHECK((lhs - rhs).norm() <= 1e-10);
        CHECK((mobius(CMatrix::Identity(3, 3), z, SU21) - z).norm() == 0.0);
        CMatrix k = random_k_compact(rng, SU21);
        CMatrix kz = block_a(k, SU21) * z * block_d(k, SU21).inverse();
        CHECK((mobius(k, z, SU21) - kz).norm() <= 1e-14);
    }
    auto o = DomainPoint::origin(SU11);
    CHECK(std::abs(domain_action(GroupElement::su(a_t(0.7), SU11), o).z()(0, 0) - std::tanh(0.7)) < 1e-15);
}

TEST_CASE("domain points are validated") {
    CHECK_THROWS_AS(DomainPoint::make(make_matrix({{1.0}})), Error);
    CHECK_NOTHROW(DomainPoint::make(make_matrix({{0.5}, {0.5}})));
    CHECK_THROWS_AS(DomainPoint::make(make_matrix({{0.8}, {0.7}})), Error);
}

TEST_CASE("universal cocycle examples") {
    Rng rng(9);
    CMatrix k = random_k_complex(rng, SU21, 0.5);
    CMatrix z = random_domain_point(rng, SU21, 0.7);
    CHECK(rel_diff(universal_cocycle(k, z, SU21), k) < 1e-13);

    Complex a(1.2, 0.3), b(-0.4, 0.9), d(0.8, -0.6);
    Complex c = (a * d - 1.0) / b;
    Complex zz(0.2, 0.1);
    CMatrix j = universal_cocycle(make_matrix({{a, b}, {c, d}}), make_matrix({{zz}}), SU11);
    CHECK(std::abs(j(0, 0) - 1.0 / (c * zz + d)) < 1e-13);

    CMatrix ja = universal_cocycle(a_t(0.4), CMatrix::Zero(1, 1), SU11);
    CHECK(std::abs(ja(0, 0) - 1.0 / std::cosh(0.4)) < 1e-15);
}

TEST_CASE("universal kernel examples") {
    Rng rng(2);
    CMatrix z = random_domain_point(rng, SU21, 0.8), w = random_domain_point(rng, SU21, 0.8);
    CHECK(universal_kernel(z, CMatrix::Zero(2, 1), SU21).isApprox(CMatrix::Identity(3, 3)));
    CHECK(universal_kernel(CMatrix::Zero(2, 1), w, SU21).isApprox(CMatrix::Identity(3, 3)));
    CHECK(rel_diff(universal_kernel(z, w, SU21), universal_kernel(w, z, SU21).adjoint()) < 1e-13);

    Complex z1(0.3, 0.2), w1(-0.1, 0.5);
    CMatrix k = universal_kernel(make_matrix({{z1}}), make_matrix({{w1}}), SU11);
    CHECK(std::abs(k(0, 0) - 1.0 / (1.0 - z1 * std::conj(w1))) < 1e-14);
}

TEST_CASE("cocycle and kernel identities on random inputs") {
    for (BlockSpec s : {SU11, SU21}) {
        Rng rng(101 + s.p);
        double worst2 = 0, worst5 = 0, worst6 = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            CMatrix a = random_group(rng, s, 2.0), b = random_group(rng, s, 2.0);
            CMatrix z = random_domain_point(rng, s, 0.9), w = random_domain_point(rng, s, 0.9);
            CMatrix jab = universal_cocycle(a * b, z, s);
            CMatrix chain = universal_cocycle(a, mobius(b, z, s), s) * universal_cocycle(b, z, s);
            worst2 = std::max(worst2, (jab - chain).norm() / jab.norm());

            CMatrix az = mobius(a, z, s), aw = mobius(a, w, s);
            CMatrix lhs = universal_cocycle(a, w, s).adjoint() * universal_kernel(az, aw, s) * universal_cocycle(a, z, s);
            CMatrix kzw = universal_kernel(z, w, s);
            worst5 = std::max(worst5, (lhs - kzw).norm() / kzw.norm());

            CMatrix o = CMatrix::Zero(s.p, s.q);
            CMatrix ao = mobius(a, o, s);
            CMatrix ja = universal_cocycle(a, o, s);
            CMatrix k6 = universal_kernel(ao, ao, s);
            CMatrix r6 = ja.inverse().adjoint() * ja.inverse();
            worst6 = std::max(worst6, (k6 - r6).norm() / k6.norm());
        }
        CHECK(worst2 <= 1e-9);
        CHECK(worst5 <= 1e-9);
        CHECK(worst6 <= 1e-9);
    }
}

TEST_CASE("involutions and z0") {
    Rng rng(4);
    CMatrix g = random_group(rng, SU21, 1.5);
    CHECK(rel_diff(sigma_group(g, SU21), g) < 1e-12);
    CMatrix z0 = z0_element(SU21);
    CHECK(std::abs(z0.trace()) < 1e-15);
    CMatrix pp = upper_block(CMatrix::Random(2, 1), SU21);
    CHECK((commutator(z0, pp) - I_UNIT * pp).norm() < 1e-14);
    CMatrix pm = lower_block(CMatrix::Random(1, 2), SU21);
    CHECK((commutator(z0, pm) + I_UNIT * pm).norm() < 1e-14);
    CMatrix k = random_k_complex(rng, SU21, 0.4);
    CHECK(rel_diff(k_star(k, SU21), k.adjoint()) < 1e-13);
}

TEST_CASE("domain section") {
    Rng rng(8);
    for (int i = 0; i < 20; ++i) {
        CMatrix z = random_domain_point(rng, SU21, 0.95);
        CMatrix g = domain_section(z, SU21);
        CHECK(is_in_su(g, SU21));
        CHECK((mobius(g, CMatrix::Zero(2, 1), SU21) - z).norm() < 1e-13);
    }
}
