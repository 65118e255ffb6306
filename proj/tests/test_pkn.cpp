#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wkl/pkn.hpp"

using namespace wkl;

namespace {
const BlockSpec SU11{1, 1}, SU21{2, 1}, SU22{2, 2}, SU31{3, 1};

CMatrix torus(const RootDatum& rd, const std::vector<double>& t) {
    CMatrix h = CMatrix::Zero(rd.spec.size(), rd.spec.size());
    for (int j = 0; j < rd.rank; ++j) h += t[j] * rd.x[j];
    return mat_exp(h);
}
}  // namespace

TEST_CASE("SU(1,1) torus: closed form matches the Newton solve") {
    auto rd = root_datum(SU11);
    PknOptions newton_only;
    newton_only.allow_closed_forms = false;
    for (int i = 0; i < 50; ++i) {
        double t = -3.0 + 6.0 * i / 49.0;
        CMatrix g = torus(*rd, {t});
        PKNTriple nt = pkn_factorize(g, *rd, PknSign::Plus, newton_only);
        double u = 1.0 - std::exp(-2.0 * t);
        CHECK(std::abs(nt.zplus(0, 0) - u) <= 1e-12 * std::max(1.0, std::abs(u)));
        CHECK(std::abs(nt.log_n.center(0) - u / (2.0 * I_UNIT)) <= 1e-12 * std::max(1.0, std::abs(u)));
        CHECK(rel_diff(nt.k, mat_exp(-t * rd->triples[0].h)) <= 1e-12);
        CHECK(nt.residual <= 1e-11);
    }
}

TEST_CASE("SL(2) closed form") {
    auto rd = root_datum(SU11);
    CMatrix g1 = make_matrix({{1, 0}, {I_UNIT, 1}});
    PKNTriple t1 = pkn_factorize(g1, *rd);
    CHECK(t1.method == PknMethod::SL2ClosedForm);
    CHECK(t1.residual <= 1e-14);
    Complex cd = I_UNIT + 1.0;
    CHECK(std::abs(t1.k(0, 0) - 1.0 / cd) <= 1e-15);
    CHECK(std::abs(t1.log_n.center(0) + I_UNIT * I_UNIT / cd) <= 1e-15);

    CMatrix g2 = make_matrix({{0, -1}, {1, 0}});
    CHECK(pkn_factorize(g2, *rd).residual <= 1e-14);

    CMatrix g3 = make_matrix({{1, 0}, {-1, 1}});
    try {
        pkn_factorize(g3, *rd);
        FAIL("expected NotInCell");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInCell);
    }
    // The closed form agrees with Newton on generic SL(2,C) elements.
    PknOptions newton_only;
    newton_only.allow_closed_forms = false;
    Rng rng(12);
    for (int i = 0; i < 50; ++i) {
        CMatrix x = CMatrix::Random(2, 2) * 0.8;
        x(1, 1) = -x(0, 0);
        CMatrix g = mat_exp(x);
        PKNTriple a = pkn_factorize(g, *rd);
        PKNTriple b = pkn_factorize(g, *rd, PknSign::Plus, newton_only);
        CHECK(rel_diff(a.k, b.k) <= 1e-10);
        CHECK(rel_diff(a.zplus, b.zplus) <= 1e-10);
        CHECK(rel_diff(a.n, b.n) <= 1e-10);
    }
}

TEST_CASE("identity gives the trivial triple") {
    for (BlockSpec s : {SU11, SU21, SU22}) {
        auto rd = root_datum(s);
        PKNTriple t = pkn_factorize(CMatrix::Identity(s.size(), s.size()), *rd);
        CHECK(t.zplus.norm() == 0.0);
        CHECK(t.k.isApprox(CMatrix::Identity(s.size(), s.size())));
        CHECK(t.n.isApprox(CMatrix::Identity(s.size(), s.size())));
    }
}

TEST_CASE("torus closed form") {
    for (BlockSpec s : {SU11, SU21, SU22, SU31}) {
        auto rd = root_datum(s);
        Rng rng(7);
        std::uniform_real_distribution<double> ud(-3.0, 3.0);
        for (int i = 0; i < 40; ++i) {
            std::vector<double> t(rd->rank);
            for (auto& v : t) v = ud(rng);
            PKNTriple c = torus_pkn_closed_form(t, *rd);
            CHECK(c.residual <= 1e-12);
            CHECK(rel_diff(c.reassemble(s), torus(*rd, t)) <= 1e-12);
        }
        PKNTriple z = torus_pkn_closed_form(std::vector<double>(rd->rank, 0.0), *rd);
        CHECK(z.zplus.norm() == 0.0);
        CHECK(rel_diff(z.n, CMatrix::Identity(s.size(), s.size())) == 0.0);
    }
    auto rd = root_datum(SU11);
    CHECK(std::abs(torus_pkn_closed_form({0.5}, *rd).zplus(0, 0) - (1.0 - std::exp(-1.0))) <= 1e-15);
}

TEST_CASE("torus closed form agrees with Newton in higher rank") {
    PknOptions newton_only;
    newton_only.allow_closed_forms = false;
    for (BlockSpec s : {SU21, SU22, SU31}) {
        auto rd = root_datum(s);
        Rng rng(19);
        std::uniform_real_distribution<double> ud(-1.5, 1.5);
        for (int i = 0; i < 10; ++i) {
            std::vector<double> t(rd->rank);
            for (auto& v : t) v = ud(rng);
            CMatrix g = torus(*rd, t);
            PKNTriple a = torus_pkn_closed_form(t, *rd);
            PKNTriple b = pkn_factorize(g, *rd, PknSign::Plus, newton_only);
            CHECK(b.residual <= 1e-10);
            CHECK(rel_diff(a.k, b.k) <= 1e-9);
            CHECK(rel_diff(a.n, b.n) <= 1e-9);
        }
    }
}

TEST_CASE("reassembly on random group elements") {
    for (BlockSpec s : {SU11, SU21}) {
        auto rd = root_datum(s);
        Rng rng(2024 + s.p);
        double worst = 0.0, worst_gauge = 0.0;
        for (int i = 0; i < 1000; ++i) {
            CMatrix g = random_group(rng, s, 2.0);
            PKNTriple t = pkn_factorize(g, *rd);
            worst = std::max(worst, (t.reassemble(s) - g).norm() / g.norm());
            NCCoords c = rd->nc_coords(mat_log_unipotent(t.n));
            CHECK(c.residual <= 1e-10);
            worst_gauge = std::max(worst_gauge, c.plus.size() ? c.plus.norm() : 0.0);
            CHECK(off_block_diag_norm(t.k, s) <= 1e-10 * std::max(1.0, t.k.norm()));
        }
        CHECK(worst <= 1e-9);
        CHECK(worst_gauge <= 1e-10);
    }
}

TEST_CASE("complexified elements near the identity") {
    auto rd = root_datum(SU21);
    Rng rng(77);
    for (int i = 0; i < 100; ++i) {
        CMatrix x = random_lie_algebra(rng, SU21, 1.0) + I_UNIT * random_lie_algebra(rng, SU21, 1.0);
        CMatrix g = mat_exp(x);
        PKNTriple t = pkn_factorize(g, *rd);
        CHECK(t.residual <= 1e-9);
    }
}

TEST_CASE("pkn_membership") {
    auto rd = root_datum(SU22);
    CMatrix g = mat_exp(rd->x[1]);
    CHECK_FALSE(pkn_membership(g, 1, *rd));
    CHECK(pkn_membership(g, 2, *rd));
    CHECK(pkn_membership(mat_exp(rd->x[0]), 1, *rd));
    // Elements of N lie in the cell for j = r.
    Rng rng(5);
    for (BlockSpec s : {SU11, SU21, SU22}) {
        auto r = root_datum(s);
        CMatrix x = r->project_nj(random_lie_algebra(rng, s, 1.5), r->rank);
        CHECK(pkn_membership(mat_exp(x), r->rank, *r));
    }
    auto r11 = root_datum(SU11);
    CHECK(pkn_membership(random_group(rng, SU11, 2.0), 1, *r11));
}

TEST_CASE("sigma_mirror") {
    auto rd = root_datum(SU21);
    PKNTriple id = pkn_factorize(CMatrix::Identity(3, 3), *rd);
    PKNTriple mid = sigma_mirror(id, *rd);
    CHECK(mid.zplus.norm() == 0.0);
    CHECK(mid.k.isApprox(CMatrix::Identity(3, 3)));

    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        CMatrix g = random_group(rng, SU21, 2.0);
        PKNTriple t = pkn_factorize(g, *rd);
        PKNTriple mm = sigma_mirror(sigma_mirror(t, *rd), *rd);
        CHECK((mm.zplus - t.zplus).norm() <= 1e-10);
        CHECK(rel_diff(mm.k, t.k) <= 1e-10);
        CHECK(rel_diff(mm.n, t.n) <= 1e-10);
        PKNTriple minus = pkn_factorize(g, *rd, PknSign::Minus);
        CHECK(minus.sign == PknSign::Minus);
        CHECK(minus.residual <= 1e-9);
        CHECK(block_b(minus.p_factor(SU21), SU21).norm() == 0.0);
        // Complexified input: mirror of sigma(g) is a factorization of g.
        CMatrix gc = mat_exp(random_lie_algebra(rng, SU21, 0.8) + I_UNIT * random_lie_algebra(rng, SU21, 0.8));
        CHECK(pkn_factorize(gc, *rd, PknSign::Minus).residual <= 1e-9);
    }
    auto r11 = root_datum(SU11);
    CMatrix a = mat_exp(0.8 * r11->x[0]);
    PKNTriple p = pkn_factorize(a, *r11, PknSign::Plus);
    PKNTriple m = pkn_factorize(a, *r11, PknSign::Minus);
    CHECK(rel_diff(m.k, sigma_group(p.k, SU11)) <= 1e-13);
    CHECK(rel_diff(m.n, sigma_group(p.n, SU11)) <= 1e-13);
    CHECK(rel_diff(m.p_factor(SU11), sigma_group(p.p_factor(SU11), SU11)) <= 1e-13);
}

TEST_CASE("regauging keeps the product") {
    auto rd = root_datum(SU21);
    Rng rng(21);
    for (int i = 0; i < 50; ++i) {
        CMatrix g = random_group(rng, SU21, 2.0);
        PKNTriple t = pkn_factorize(g, *rd);
        CVector a = CVector::Random(rd->half_dim());
        PKNTriple r = regauge(t, a, *rd);
        CHECK(rel_diff(r.reassemble(SU21), g) <= 1e-10);
        CHECK((r.log_n.plus - a).norm() <= 1e-10);
        CHECK(off_block_diag_norm(r.k, SU21) <= 1e-12);
    }
}
