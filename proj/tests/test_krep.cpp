#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wkl/hermgroup.hpp"
#include "wkl/krep.hpp"

using namespace wkl;

TEST_CASE("dimensions and parsing") {
    BlockSpec s{2, 1};
    CHECK(KRep::parse("trivial", s).dim() == 1);
    CHECK(KRep::parse("char:-3", s).char_power() == -3);
    CHECK(KRep::parse("sym1:-4", s).dim() == 2);
    CHECK(KRep::parse("sym:-4:3", s).dim() == 4);
    CHECK(KRep::parse("sym:0:2", BlockSpec{3, 1}).dim() == 6);
    for (const char* bad : {"", "char", "char:x", "char:1:2", "sym:1", "sym1:2.5", "foo:1"}) {
        try {
            KRep::parse(bad, s);
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidArgument);
        }
    }
    CHECK(KRep::parse("sym:-4:3", s).name() == "sym:-4:3");
}

TEST_CASE("homomorphism, adjoint and unitarity") {
    Rng rng(31);
    for (BlockSpec s : {BlockSpec{1, 1}, BlockSpec{2, 1}, BlockSpec{2, 2}, BlockSpec{3, 1}}) {
        for (KRep pi : {KRep::character(s, 3), KRep::character(s, -2), KRep(s, -1, 1), KRep(s, 2, 3)}) {
            for (int i = 0; i < 20; ++i) {
                CMatrix a = random_k_complex(rng, s, 0.6), b = random_k_complex(rng, s, 0.6);
                CHECK(rel_diff(pi(a * b), pi(a) * pi(b)) <= 1e-12);
                CHECK(rel_diff(pi(a).adjoint(), pi(k_star(a, s))) <= 1e-11);
                CHECK(rel_diff(pi.inverse_at(a) * pi(a), CMatrix::Identity(pi.dim(), pi.dim())) <= 1e-12);
                CMatrix u = random_k_compact(rng, s);
                CMatrix pu = pi(u);
                CHECK((pu.adjoint() * pu - CMatrix::Identity(pi.dim(), pi.dim())).norm() <= 1e-12);
            }
            CHECK(rel_diff(pi(CMatrix::Identity(s.size(), s.size())), CMatrix::Identity(pi.dim(), pi.dim())) == 0.0);
        }
    }
}

TEST_CASE("torus weights") {
    BlockSpec s{2, 1};
    KRep pi(s, -4, 1);
    CMatrix h = CMatrix::Zero(3, 3);
    h(0, 0) = 1.0;
    h(2, 2) = -1.0;
    const double t = 0.37;
    CMatrix pt = pi(mat_exp(t * h));
    // x_1 scales by e^{t}, x_2 is fixed, det(k_A)^{-4} = e^{-4t}.
    CHECK(std::abs(pt(0, 0) - std::exp(-3.0 * t)) <= 1e-14);
    CHECK(std::abs(pt(1, 1) - std::exp(-4.0 * t)) <= 1e-14);
    CHECK(std::abs(pt(0, 1)) <= 1e-15);
}
