// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include <Eigen/SVD>

#include "oracles.hpp"
#include "wkl/hermgroup.hpp"
#include "wkl/holods.hpp"
#include "wkl/l2norm.hpp"
#include "wkl/multiplicity.hpp"
#include "wkl/whittaker.hpp"

#ifndef WKL_CLI_PATH
#error "WKL_CLI_PATH must name the cli executable"
#endif

using namespace wkl;

namespace {

const BlockSpec SU11{1, 1}, SU21{2, 1}, SU22{2, 2};

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

double rel(const CMatrix& a, const CMatrix& b) { return (a - b).norm() / std::max(b.norm(), 1e-300); }

CVector random_vector(Rng& rng, int n) {
    std::normal_distribution<double> nd(0.0, 1.0);
    CVector v(n);
    for (int i = 0; i < n; ++i) v(i) = Complex(nd(rng), nd(rng));
    return v;
}

CVector random_ball(Rng& rng, int n, double radius) {
    CVector v = random_vector(rng, n);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    return v * (radius * ud(rng) / v.norm());
}

Outcome closed_form_sl2() {
    auto rd = root_datum(SU11);
    PknOptions newton;
    newton.allow_closed_forms = false;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double t = -3.0 + 6.0 * i / 49.0;
        PKNTriple p = pkn_factorize(mat_exp(t * rd->x[0]), *rd, PknSign::Plus, newton);
        const double u = 1.0 - std::exp(-2.0 * t), scale = std::max(1.0, std::abs(u));
        worst = std::max({worst, std::abs(p.zplus(0, 0) - u) / scale, std::abs(p.log_n.center(0) - u / (2.0 * I_UNIT)) / scale,
                          rel(p.k, mat_exp(-t * rd->triples[0].h))});
    }
    return {worst <= 1e-12, fmt("max rel err %.2e (tol 1e-12), 50 t in [-3,3]", worst)};
}

Outcome cocycle_kernel() {
    double worst = 0.0;
    for (BlockSpec s : {SU11, SU21}) {
        Rng rng(31 + s.p);
        const CMatrix o = CMatrix::Zero(s.p, s.q), one = CMatrix::Identity(s.size(), s.size());
        for (int t = 0; t < 1000; ++t) {
            CMatrix a = random_group(rng, s, 2.0), b = random_group(rng, s, 2.0), k = random_k_compact(rng, s);
            CMatrix z = random_domain_point(rng, s, 0.9), w = random_domain_point(rng, s, 0.9);
            CMatrix kzw = universal_kernel(z, w, s);
            CMatrix jinv = universal_cocycle(a, o, s).inverse(), ao = mobius(a, o, s);
            worst = std::max({worst, rel(universal_cocycle(k, z, s), k),
                              rel(universal_cocycle(a, mobius(b, z, s), s) * universal_cocycle(b, z, s), universal_cocycle(a * b, z, s)),
                              rel(universal_kernel(z, o, s), one), rel(universal_kernel(o, w, s), one),
                              rel(universal_kernel(w, z, s).adjoint(), kzw),
                              rel(universal_cocycle(a, w, s).adjoint() * universal_kernel(mobius(a, z, s), mobius(a, w, s), s) *
                                      universal_cocycle(a, z, s),
                                  kzw),
                              rel(jinv.adjoint() * jinv, universal_kernel(ao, ao, s))});
        }
    }
    return {worst <= 1e-9, fmt("max rel err %.2e (tol 1e-9), 1000 trials x 6 items on SU(1,1), SU(2,1)", worst)};
}

Outcome uniqueness() {
    auto r22 = root_datum(SU22);
    const CMatrix g = mat_exp(r22->x[1]);
    const bool j1 = pkn_membership(g, 1, *r22), j2 = pkn_membership(g, 2, *r22);
    bool rank_one = true;
    Rng rng(5);
    for (BlockSpec s : {SU11, SU21}) {
        auto rd = root_datum(s);
        rank_one = rank_one && pkn_membership(mat_exp(rd->x[0]), 1, *rd);
        for (int i = 0; i < 10; ++i) rank_one = rank_one && pkn_membership(random_group(rng, s, 2.0), 1, *rd);
    }
    return {!j1 && j2 && rank_one, std::string("SU(2,2) exp(x_2): j=1 ") + (j1 ? "true" : "false") + ", j=2 " + (j2 ? "true" : "false") +
                                       "; rank one j=r " + (rank_one ? "true" : "false")};
}

Outcome moore() {
    bool ok = true;
    for (BlockSpec s : {SU11, SU21, SU22}) {
        RootDatum rd = build_root_datum(s);
        std::map<std::vector<int>, int> got;
        for (const auto& r : rd.restricted_table) got[r.label] = r.multiplicity;
        auto spectrum = oracle::ad_spectrum(rd);
        spectrum.erase(std::vector<int>(static_cast<std::size_t>(rd.rank), 0));
        ok = ok && got == oracle::moore_table(s) && got == spectrum && rd.tube_type() == (s.p == s.q);
    }
    return {ok, "restricted root tables of SU(1,1), SU(2,1), SU(2,2) against the theorem list and the ad(a) spectrum"};
}

Outcome fock_adjoint() {
    auto rd = root_datum(SU21);
    FockSpace f(rd, 12);
    const auto& set = f.indices();
    const int n = set.size(), low = set.degree_begin(9);
    RVector gd(n);
    for (int i = 0; i < n; ++i) gd(i) = std::sqrt(set.factorial(i));
    Rng rng(11);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        CVector z = random_ball(rng, f.vars(), 1.0);
        CMatrix a(n, n), b(n, n);
        for (int j = 0; j < n; ++j) {
            FockVector m = FockVector::monomial(f, set.at(j));
            a.col(j) = fock_act_nzplus(f, z, m).coeffs;
            b.col(j) = fock_act_nzminus(f, -z, m).coeffs;
        }
        a = gd.asDiagonal() * a * gd.cwiseInverse().asDiagonal();
        b = gd.asDiagonal() * b * gd.cwiseInverse().asDiagonal();
        Eigen::JacobiSVD<CMatrix> svd(CMatrix((a.adjoint() - b).leftCols(low)));
        worst = std::max(worst, svd.singularValues()(0));
    }
    return {worst <= 1e-9, fmt("operator-norm residual %.2e (tol 1e-9), D=12, degree <= 8, 100 z", worst)};
}

Outcome reproducing() {
    auto rd = root_datum(SU11);
    const CVector one = CVector::Ones(1);
    double worst = 0.0;
    for (int lam : {2, 3, 4}) {
        HoloDS ds(KRep::character(SU11, -lam), rd);
        Rng rng(100 + lam);
        for (int i = 0; i < 20; ++i) {
            CMatrix w = random_domain_point(rng, SU11, 0.8);
            worst = std::max(worst, std::abs(ds.inner(HoloFunction::constant(one), HoloFunction::kernel_section(ds.rep(), w, one)).value - 1.0));
        }
    }
    return {worst <= 1e-5, fmt("max |<1, K(.,w)> - 1| = %.2e (tol 1e-5), lambda 2,3,4, 20 points, 256x64 nodes", worst)};
}

Outcome dichotomy() {
    bool ok = true;
    std::string detail = "SU(1,1):";
    auto r11 = root_datum(SU11);
    FockSpace f11(r11);
    for (int lam = 0; lam <= 4; ++lam) {
        L2Result r = gn_l2_norm_reduced(WhittakerKernel(f11, KRep::character(SU11, -lam), CVector::Ones(1)));
        ok = ok && ((lam > 1) == (r.status == L2Status::Finite));
        detail += " " + std::to_string(lam) + "=" + to_string(r.status);
    }
    auto r21 = root_datum(SU21);
    const std::vector<double> rho = rho_constants(*r21).rho;
    ok = ok && rho == std::vector<double>{2.0};
    detail += "; SU(2,1) rho=" + fmt("%g", rho.at(0)) + ":";
    FockSpace f21(r21, 8);
    for (int m = 0; m <= 5; ++m) {
        KRep pi = KRep::character(SU21, -m);
        const double mu = classify(pi, *r21).mu.at(0);
        L2Result r = gn_l2_norm_reduced(WhittakerKernel(f21, pi, CVector::Ones(1)));
        ok = ok && ((mu > rho[0]) == (r.status == L2Status::Finite));
        detail += " " + std::to_string(m) + "=" + to_string(r.status);
    }
    return {ok, detail};
}

Outcome full_vs_reduced() {
    auto rd = root_datum(SU11);
    FockSpace f(rd);
    std::vector<double> ratios;
    for (int lam : {2, 3, 4}) {
        WhittakerKernel wk(f, KRep::character(SU11, -lam), CVector::Ones(1));
        L2Result full = gn_l2_norm_full(wk, CVector::Ones(1)), red = gn_l2_norm_reduced(wk);
        if (full.status != L2Status::Finite || red.status != L2Status::Finite) return {false, "a norm was not finite"};
        ratios.push_back(full.value / red.value);
    }
    double spread = 0.0;
    for (double r : ratios) spread = std::max(spread, std::abs(r / ratios[0] - 1.0));
    return {spread <= 0.02, fmt("ratio %.6f, max relative spread %.2e (tol 0.02)", ratios[0], spread)};
}

Outcome n_equivariance() {
    auto rd = root_datum(SU21);
    FockSpace f(rd, 12);
    Rng rng(9);
    std::normal_distribution<double> nd(0.0, 1.0);
    WhittakerKernel wk(f, KRep::character(SU21, -3), random_vector(rng, 1));
    // Compared on degrees <= D - 4, where the truncated translations are exact to rounding.
    const int end = f.indices().degree_begin(9);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        CMatrix x = random_group(rng, SU21, 0.8);
        CMatrix z = f.element(0.3 * random_vector(rng, f.vars()));
        CMatrix v = 0.3 * nd(rng) * rd->nil.basis_one[0];
        CVector xi = random_vector(rng, 1);
        FockVector lhs = wk.t_lkt_eval(xi, x * mat_exp(z + v));
        FockVector rhs = fock_act_n(f, -z, -v, wk.t_lkt_eval(xi, x));
        worst = std::max(worst, (lhs.coeffs.head(end) - rhs.coeffs.head(end)).norm() / rhs.coeffs.head(end).norm());
    }
    return {worst <= 1e-8, fmt("max rel err %.2e (tol 1e-8), 200 (x, n), D=12", worst)};
}

Outcome multiplicity() {
    auto rd = root_datum(SU21);
    FockSpace f(rd, 10);
    bool ok = true;
    std::string detail;
    for (KRep pi : {KRep::character(SU21, -3), KRep(SU21, -4, 1)}) {
        RankResult r = section_rank(f, pi);
        ok = ok && r.rank == pi.dim() && r.gap >= 1e6;
        detail += pi.name() + ": rank " + std::to_string(r.rank) + " (dim " + std::to_string(pi.dim()) + "), gap " + fmt("%.1e", r.gap) + "; ";
    }
    detail.resize(detail.size() - 2);
    return {ok, detail};
}

Outcome whittaker_vector() {
    Rng rng(13);
    double at_origin = 0.0, dual = 0.0, cr = 0.0;
    for (BlockSpec s : {SU11, SU21}) {
        auto rd = root_datum(s);
        FockSpace f(rd, 16);
        for (KRep pi : {KRep::character(s, -3), KRep(s, -4, 1)}) {
            WhittakerKernel wk(f, pi, random_vector(rng, pi.dim()));
            for (int i = 0; i < 5; ++i) {
                CVector xi = random_vector(rng, pi.dim());
                FockVector pi_o = wk.whittaker_function(CMatrix::Zero(s.p, s.q), xi);
                FockVector b = wk.a_eta_star(xi), d = wk.a_eta_star_dual(xi);
                at_origin = std::max(at_origin, (pi_o - b).norm() / std::max(1.0, b.norm()));
                // Independent route through <xi, pi(n_z^-) eta>.
                dual = std::max(dual, (pi_o - d).norm() / std::max(1.0, d.norm()));
            }
        }
    }
    // 10 x 10 polar grid on the disk.
    auto rd = root_datum(SU11);
    FockSpace f(rd, 16);
    WhittakerKernel wk(f, KRep::character(SU11, -3), CVector::Ones(1));
    for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b) {
            CMatrix z(1, 1);
            z(0, 0) = std::polar(0.05 + 0.05 * a, 2.0 * M_PI * b / 10.0);
            cr = std::max(cr, antiholomorphy_residual(wk, z, CVector::Ones(1)).ratio());
        }
    return {at_origin <= 1e-12 && dual <= 1e-12 && cr <= 1e-6,
            fmt("|Pi(o) - A_eta*| %.2e, dual route %.2e (tol 1e-12), ", at_origin, dual) + fmt("Cauchy-Riemann %.2e (tol 1e-6)", cr)};
}

std::string run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + WKL_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    pclose(p);
    return out;
}

Outcome determinism() {
    const std::string a = run_cli("verify --suite all --seed 7");
    const std::string b = run_cli("verify --suite all --seed 7");
    const bool ok = !a.empty() && a == b;
    return {ok, "verify --suite all --seed 7 twice: " + std::to_string(a.size()) + " bytes, " + (ok ? "identical" : "different")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"SL(2)/SU(1,1) closed-form factorization", closed_form_sl2},
        {"cocycle and kernel identities", cocycle_kernel},
        {"P+ K_C N_C uniqueness on SU(2,2)", uniqueness},
        {"Moore tables", moore},
        {"Fock adjoint identity", fock_adjoint},
        {"disk reproducing property", reproducing},
        {"convergence dichotomy", dichotomy},
        {"full vs reduced L2 norm", full_vs_reduced},
        {"N-equivariance of the section", n_equivariance},
        {"multiplicity = dim V_pi", multiplicity},
        {"Whittaker vector consistency", whittaker_vector},
        {"determinism of cli verify", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2zu  %-42s %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(), sec);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
