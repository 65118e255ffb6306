#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wkl/hermgroup.hpp"
#include "wkl/l2norm.hpp"
#include "wkl/multiplicity.hpp"

using namespace wkl;

namespace {
const BlockSpec SU11{1, 1}, SU21{2, 1}, SU22{2, 2};

// Integral over R of exp(2(1 - e^{-2t}) + 2(rho_n - mu) t) with y = e^{-2t}.
double rank_one_closed_form(double mu, double rho_n) {
    const double a = mu - rho_n;
    return 0.5 * std::exp(2.0) * std::tgamma(a) / std::pow(2.0, a);
}
}  // namespace

TEST_CASE("reduced series on SU(1,1) and SU(2,1)") {
    auto r11 = root_datum(SU11);
    for (int lam : {2, 3, 4}) {
        L2Result r = reduced_series({double(lam)}, *r11, 1.0);
        CHECK(r.status == L2Status::Finite);
        CHECK(std::abs(r.value - rank_one_closed_form(lam, 1.0)) <= 1e-10 * r.value);
    }
    for (int lam : {1, 0}) CHECK(reduced_series({double(lam)}, *r11, 1.0).status == L2Status::Divergent);

    auto r21 = root_datum(SU21);
    CHECK(rho_constants(*r21).rho == std::vector<double>{2.0});
    for (int m = 0; m <= 5; ++m) {
        KRep pi = KRep::character(SU21, -m);
        std::vector<double> mu = extract_mu(pi, *r21).mu;
        L2Result r = reduced_series(mu, *r21, 1.0);
        CHECK((r.status == L2Status::Finite) == (m > 2));
        if (m > 2) CHECK(std::abs(r.value - rank_one_closed_form(m, r21->rho_n[0])) <= 1e-10 * r.value);
    }
}

TEST_CASE("reduced series on SU(2,2)") {
    auto rd = root_datum(SU22);
    for (int m : {2, 3, 4, 5}) {
        std::vector<double> mu = extract_mu(KRep::character(SU22, -m), *rd).mu;
        L2Result r = reduced_series(mu, *rd, 1.0);
        CHECK((r.status == L2Status::Finite) == (m > 3));
    }
}

TEST_CASE("reduced integrand matches the section on the torus") {
    for (BlockSpec s : {SU11, SU21, SU22}) {
        auto rd = root_datum(s);
        FockSpace f(rd, 8);
        KRep pi(s, -5, s.p == 2 && s.q == 1 ? 1 : 0);
        WhittakerKernel wk(f, pi, CVector::Ones(pi.dim()).normalized());
        MuExtraction me = extract_mu(pi, *rd);
        const double a2 = std::pow(wk.a_eta_star(me.vector).norm(), 2);
        for (double t1 : {-1.0, 0.3, 2.0}) {
            std::vector<double> t(static_cast<std::size_t>(rd->rank), t1);
            if (rd->rank == 2) t[1] = t1 - 0.7;
            CMatrix h = CMatrix::Zero(s.size(), s.size());
            double rho_n = 0.0;
            for (int j = 0; j < rd->rank; ++j) {
                h += t[static_cast<std::size_t>(j)] * rd->x[static_cast<std::size_t>(j)];
                rho_n += 2.0 * rd->rho_n[static_cast<std::size_t>(j)] * t[static_cast<std::size_t>(j)];
            }
            const double direct = std::pow(wk.t_lkt_eval(me.vector, mat_exp(h)).norm(), 2) * std::exp(rho_n) * l_density_w(t, *rd);
            const double reduced = a2 * reduced_integrand(t, me.mu, *rd, 1.0);
            CHECK(std::abs(direct - reduced) <= 1e-9 * std::max(direct, 1e-300));
        }
    }
}

TEST_CASE("full against reduced on SU(1,1)") {
    auto rd = root_datum(SU11);
    FockSpace f(rd);
    std::vector<double> ratios;
    for (int lam : {2, 3, 4}) {
        WhittakerKernel wk(f, KRep::character(SU11, -lam), CVector::Ones(1));
        L2Result full = gn_l2_norm_full(wk, CVector::Ones(1));
        L2Result red = gn_l2_norm_reduced(wk);
        REQUIRE(full.status == L2Status::Finite);
        ratios.push_back(full.value / red.value);
    }
    for (double r : ratios) CHECK(std::abs(r / ratios[0] - 1.0) <= 0.02);

    WhittakerKernel edge(f, KRep::character(SU11, -1), CVector::Ones(1));
    CHECK(gn_l2_norm_full(edge, CVector::Ones(1)).status == L2Status::Boundary);
    CHECK(gn_l2_norm_reduced(edge).status == L2Status::Divergent);
    WhittakerKernel below(f, KRep::character(SU11, 0), CVector::Ones(1));
    CHECK(gn_l2_norm_full(below, CVector::Ones(1)).status == L2Status::Divergent);
}

TEST_CASE("full norm and Schur relations on SU(2,1)") {
    auto rd = root_datum(SU21);
    FockSpace f(rd, 8);
    WhittakerKernel scalar(f, KRep::character(SU21, -3), CVector::Ones(1));
    FullOptions opt;
    opt.k_samples = 8;
    L2Result r = gn_l2_norm_full(scalar, CVector::Ones(1), opt);
    CHECK(r.status == L2Status::Finite);
    CHECK(r.value > 0.0);
    WhittakerKernel edge(f, KRep::character(SU21, -2), CVector::Ones(1));
    CHECK(gn_l2_norm_full(edge, CVector::Ones(1)).status == L2Status::Boundary);

    KRep pi(SU21, -5, 1);
    const CVector e0 = CVector::Unit(2, 0), e1 = CVector::Unit(2, 1);
    WhittakerKernel w0(f, pi, e0), w1(f, pi, e1);
    opt.k_samples = 12;
    opt.l_samples = 3;
    SchurResult self = schur_orthogonality(w0, w0, e0, e0, opt);
    CHECK(self.value.real() > 0.0);
    CHECK(std::abs(self.value.imag()) <= 1e-10 * self.value.real());
    SchurResult eta_perp = schur_orthogonality(w0, w1, e0, e0, opt);
    CHECK(std::abs(eta_perp.value) <= 3.0 * eta_perp.error + 1e-12 * self.value.real());
    SchurResult xi_perp = schur_orthogonality(w0, w0, e0, e1, opt);
    CHECK(std::abs(xi_perp.value) <= 3.0 * xi_perp.error + 1e-12 * self.value.real());
}

TEST_CASE("multiplicity") {
    auto rd = root_datum(SU21);
    FockSpace f(rd, 10);
    for (KRep pi : {KRep::character(SU21, -3), KRep(SU21, -4, 1)}) {
        RankResult sr = section_rank(f, pi);
        CHECK(sr.rank == pi.dim());
        CHECK(sr.gap >= 1e6);
        RankResult cn = constraint_nullity(f, pi, 4);
        CHECK(cn.rank == pi.dim());
        WhittakerKernel wk(f, pi, CVector::Ones(pi.dim()));
        CVector u = intertwiner_unknowns(wk, 4);
        CHECK((intertwiner_constraints(f, pi, 4) * u).norm() <= 1e-8 * u.norm());
    }
    auto r31 = root_datum(BlockSpec{3, 1});
    FockSpace f31(r31, 6);
    KRep sym(BlockSpec{3, 1}, -4, 1);
    CHECK(constraint_nullity(f31, sym, 3).rank == 3);
}
