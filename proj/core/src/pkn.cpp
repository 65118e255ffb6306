#include "wkl/pkn.hpp"

#include <cmath>

namespace wkl {

const char* to_string(PknSign s) { return s == PknSign::Plus ? "plus" : "minus"; }

const char* to_string(Gauge g) {
    switch (g) {
        case Gauge::MinusGauge: return "MinusGauge";
        case Gauge::PlusGauge: return "PlusGauge";
        case Gauge::Free: return "Free";
    }
    return "?";
}

const char* to_string(PknMethod m) {
    switch (m) {
        case PknMethod::Identity: return "identity";
        case PknMethod::TorusClosedForm: return "torus_closed_form";
        case PknMethod::SL2ClosedForm: return "sl2_closed_form";
        case PknMethod::Newton: return "newton";
        case PknMethod::Continuation: return "continuation";
        case PknMethod::Restart: return "newton_restart";
        case PknMethod::Mirror: return "mirror";
        case PknMethod::Regauged: return "regauged";
    }
    return "?";
}

CMatrix exp_nc(const CMatrix& x) { return mat_exp_nilpotent(x, static_cast<int>(x.rows()) + 1); }

CMatrix PKNTriple::p_factor(const BlockSpec& s) const {
    return sign == PknSign::Plus ? exp_pplus(zplus, s) : exp_pminus(zplus, s);
}

CMatrix PKNTriple::reassemble(const BlockSpec& s) const { return p_factor(s) * k * n; }

namespace {

double reassembly_error(const PKNTriple& t, const CMatrix& g, const BlockSpec& s) {
    return (t.reassemble(s) - g).norm() / std::max(1.0, g.norm());
}

CMatrix unknowns_to_log(const CVector& theta, const RootDatum& rd) {
    const int d = rd.half_dim();
    return rd.nc_element(CVector::Zero(d), theta.head(d), theta.tail(rd.one_dim()));
}

using XMatrix = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;

// g exp(-x) with x nilpotent, accumulated in extended precision to limit cancellation.
CMatrix times_exp_neg(const CMatrix& g, const CMatrix& x) {
    const auto n = x.rows();
    XMatrix xl = (-x).cast<std::complex<long double>>();
    XMatrix e = XMatrix::Identity(n, n), term = XMatrix::Identity(n, n);
    for (Eigen::Index k = 1; k <= n; ++k) {
        term = (term * xl / static_cast<long double>(k)).eval();
        e += term;
    }
    XMatrix m = g.cast<std::complex<long double>>() * e;
    return m.cast<Complex>();
}

CVector residual_vec(const CMatrix& g, const CVector& theta, const RootDatum& rd) {
    CMatrix m = times_exp_neg(g, unknowns_to_log(theta, rd));
    CMatrix c = block_c(m, rd.spec);
    return Eigen::Map<const CVector>(c.data(), c.size());
}

struct NewtonOut {
    bool converged = false;
    CVector theta;
};

NewtonOut newton(const CMatrix& g, CVector theta, const RootDatum& rd, const PknOptions& opt) {
    const double scale = std::max(1.0, g.norm());
    CVector r = residual_vec(g, theta, rd);
    double rn = r.norm();
    const auto m = theta.size();
    for (int it = 0; it < opt.max_iter && rn > opt.tol * scale; ++it) {
        CMatrix jac(r.size(), m);
        for (Eigen::Index l = 0; l < m; ++l) {
            CVector tp = theta, tm = theta;
            tp(l) += opt.fd_step;
            tm(l) -= opt.fd_step;
            jac.col(l) = (residual_vec(g, tp, rd) - residual_vec(g, tm, rd)) / (2.0 * opt.fd_step);
        }
        Eigen::FullPivLU<CMatrix> lu(jac);
        if (!lu.isInvertible()) break;
        CVector step = lu.solve(r);
        double lambda = 1.0;
        bool improved = false;
        for (int h = 0; h < 30; ++h) {
            CVector cand = theta - lambda * step;
            CVector rc = residual_vec(g, cand, rd);
            if (rc.allFinite() && rc.norm() < rn) {
                theta = cand;
                r = rc;
                rn = rc.norm();
                improved = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!improved) break;
    }
    NewtonOut out;
    out.theta = theta;
    out.converged = rn <= 1e3 * opt.tol * scale;
    return out;
}

PKNTriple assemble_from_theta(const CMatrix& g, const CVector& theta, const RootDatum& rd, PknMethod method) {
    const BlockSpec& s = rd.spec;
    const int d = rd.half_dim();
    PKNTriple t;
    CMatrix logn = unknowns_to_log(theta, rd);
    t.n = exp_nc(logn);
    t.log_n.plus = CVector::Zero(d);
    t.log_n.minus = theta.head(d);
    t.log_n.center = theta.tail(rd.one_dim());
    HCTriple hc = hc_factorize(times_exp_neg(g, logn), s);
    t.zplus = hc.zplus;
    t.k = hc.k;
    t.sign = PknSign::Plus;
    t.gauge = Gauge::MinusGauge;
    t.method = method;
    t.residual = reassembly_error(t, g, s);
    return t;
}

PKNTriple identity_triple(const RootDatum& rd) {
    const BlockSpec& s = rd.spec;
    PKNTriple t;
    t.zplus = CMatrix::Zero(s.p, s.q);
    t.k = CMatrix::Identity(s.size(), s.size());
    t.n = CMatrix::Identity(s.size(), s.size());
    t.log_n.plus = CVector::Zero(rd.half_dim());
    t.log_n.minus = CVector::Zero(rd.half_dim());
    t.log_n.center = CVector::Zero(rd.one_dim());
    t.method = PknMethod::Identity;
    return t;
}

PKNTriple factorize_plus(const CMatrix& g, const RootDatum& rd, const PknOptions& opt) {
    const BlockSpec& s = rd.spec;
    const int n = s.size();
    if ((g - CMatrix::Identity(n, n)).norm() == 0.0) return identity_triple(rd);

    if (opt.allow_closed_forms) {
        if (s.p == 1 && s.q == 1) return sl2_pkn_closed_form(g, rd);
        std::vector<double> t;
        if (torus_coordinates(g, rd, t)) return torus_pkn_closed_form(t, rd);
    }

    const int m = rd.half_dim() + rd.one_dim();
    NewtonOut direct = newton(g, CVector::Zero(m), rd, opt);
    if (direct.converged) return assemble_from_theta(g, direct.theta, rd, PknMethod::Newton);

    if (is_in_su(g, s)) {
        // Polar path g(s) = k exp(sY) from k in K, whose factorization is trivial.
        CMatrix y = 0.5 * mat_log_hpd(g.adjoint() * g);
        CMatrix k0 = g * mat_exp(-y);
        CVector theta = CVector::Zero(m);
        double at = 0.0, h = 0.125;
        bool ok = true;
        while (at < 1.0 && ok) {
            double next = std::min(1.0, at + h);
            CMatrix gs = k0 * mat_exp(next * y);
            NewtonOut step = newton(gs, theta, rd, opt);
            if (step.converged) {
                theta = step.theta;
                at = next;
                h = std::min(0.25, h * 1.5);
            } else {
                h *= 0.5;
                if (h < 1e-4) ok = false;
            }
        }
        if (ok) return assemble_from_theta(g, theta, rd, PknMethod::Continuation);
    }

    Rng rng(0x5eed);
    std::normal_distribution<double> nd(0.0, 1.0);
    for (int rs = 0; rs < opt.restarts; ++rs) {
        CVector theta0(m);
        for (int i = 0; i < m; ++i) theta0(i) = Complex(nd(rng), nd(rng)) * (0.5 + rs * 0.5);
        NewtonOut out = newton(g, theta0, rd, opt);
        if (out.converged) return assemble_from_theta(g, out.theta, rd, PknMethod::Restart);
    }
    throw Error(ErrorKind::Inconclusive, "pkn_factorize: Newton did not converge and no certificate of failure exists");
}

}  // namespace

bool torus_coordinates(const CMatrix& g, const RootDatum& rd, std::vector<double>& t) {
    const BlockSpec& s = rd.spec;
    if (g.rows() != s.size() || g.cols() != s.size()) return false;
    t.assign(static_cast<std::size_t>(rd.rank), 0.0);
    CMatrix h = CMatrix::Zero(s.size(), s.size());
    for (int j = 0; j < rd.rank; ++j) {
        Complex sh = g(j, s.p + j);
        if (std::abs(sh.imag()) > 1e-14 * std::max(1.0, std::abs(sh))) return false;
        t[static_cast<std::size_t>(j)] = std::asinh(sh.real());
        h += t[static_cast<std::size_t>(j)] * rd.x[static_cast<std::size_t>(j)];
    }
    return (mat_exp(h) - g).norm() <= 1e-13 * std::max(1.0, g.norm());
}

PKNTriple torus_pkn_closed_form(const std::vector<double>& t, const RootDatum& rd) {
    if (static_cast<int>(t.size()) != rd.rank)
        throw Error(ErrorKind::InvalidArgument, "torus_pkn_closed_form: wrong number of coordinates");
    const BlockSpec& s = rd.spec;
    const int n = s.size();
    PKNTriple out = identity_triple(rd);
    CMatrix hsum = CMatrix::Zero(n, n), nlog = CMatrix::Zero(n, n);
    for (int j = 0; j < rd.rank; ++j) {
        double tj = t[static_cast<std::size_t>(j)];
        double u = -std::expm1(-2.0 * tj);  // 1 - e^{-2t}
        const auto& tr = rd.triples[static_cast<std::size_t>(j)];
        hsum += tj * tr.h;
        Complex w = u / (2.0 * I_UNIT);
        nlog += w * I_UNIT * (tr.h - tr.e + tr.f);
        out.zplus(j, j) = u;
        out.log_n.center(j) = w;
    }
    out.k = mat_exp(-hsum);
    out.n = exp_nc(nlog);
    out.method = PknMethod::TorusClosedForm;
    out.residual = reassembly_error(out, mat_exp([&] {
        CMatrix hx = CMatrix::Zero(n, n);
        for (int j = 0; j < rd.rank; ++j) hx += t[static_cast<std::size_t>(j)] * rd.x[static_cast<std::size_t>(j)];
        return hx;
    }()), s);
    return out;
}

PKNTriple sl2_pkn_closed_form(const CMatrix& g, const RootDatum& rd) {
    const BlockSpec& s = rd.spec;
    if (s.p != 1 || s.q != 1 || g.rows() != 2 || g.cols() != 2)
        throw Error(ErrorKind::InvalidArgument, "sl2_pkn_closed_form: needs a 2x2 element");
    Complex a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
    Complex cd = c + d;
    if (std::abs(cd) <= 1e-14 * std::max(1.0, g.norm()))
        throw Error(ErrorKind::NotInCell, "pkn_factorize: c + d = 0, element outside P+ K_C N_C");
    Complex kappa = 1.0 / cd;
    Complex w = -I_UNIT * c * kappa;
    PKNTriple t = identity_triple(rd);
    t.zplus(0, 0) = ((a + b) * cd - 1.0) * kappa * kappa;
    t.k = block_diag(make_matrix({{kappa}}), make_matrix({{cd}}));
    t.n = exp_nc(w * rd.E);
    t.log_n.center(0) = w;
    t.method = PknMethod::SL2ClosedForm;
    t.residual = reassembly_error(t, g, s);
    return t;
}

PKNTriple pkn_factorize(const CMatrix& g, const RootDatum& rd, PknSign sign, const PknOptions& opt) {
    require_square(g, "pkn_factorize");
    require_finite(g, "pkn_factorize");
    if (g.rows() != rd.spec.size())
        throw Error(ErrorKind::InvalidArgument, "pkn_factorize: size does not match the root datum");
    if (sign == PknSign::Plus) return factorize_plus(g, rd, opt);
    PKNTriple mirrored = sigma_mirror(factorize_plus(sigma_group(g, rd.spec), rd, opt), rd);
    mirrored.residual = reassembly_error(mirrored, g, rd.spec);
    return mirrored;
}

PKNTriple pkn_factorize(const GroupElement& g, const RootDatum& rd, PknSign sign, const PknOptions& opt) {
    if (!(g.spec() == rd.spec))
        throw Error(ErrorKind::InvalidArgument, "pkn_factorize: group spec mismatch");
    return pkn_factorize(g.mat(), rd, sign, opt);
}

PKNTriple sigma_mirror(const PKNTriple& t, const RootDatum& rd) {
    const BlockSpec& s = rd.spec;
    PKNTriple m;
    m.zplus = t.zplus.adjoint();
    m.k = sigma_group(t.k, s);
    m.n = sigma_group(t.n, s);
    m.log_n.plus = t.log_n.minus.conjugate();
    m.log_n.minus = t.log_n.plus.conjugate();
    m.log_n.center = t.log_n.center.conjugate();
    m.log_n.residual = t.log_n.residual;
    m.sign = t.sign == PknSign::Plus ? PknSign::Minus : PknSign::Plus;
    m.gauge = t.gauge == Gauge::MinusGauge ? Gauge::PlusGauge
              : t.gauge == Gauge::PlusGauge ? Gauge::MinusGauge
                                            : Gauge::Free;
    m.method = t.method == PknMethod::Mirror ? t.method : PknMethod::Mirror;
    m.residual = t.residual;
    return m;
}

PKNTriple regauge(const PKNTriple& t, const CVector& a, const RootDatum& rd) {
    if (t.sign != PknSign::Plus)
        throw Error(ErrorKind::InvalidArgument, "regauge: defined for P+ K_C N_C triples");
    const BlockSpec& s = rd.spec;
    const int d = rd.half_dim();
    CMatrix alog = rd.nc_element(a, CVector::Zero(d), CVector::Zero(rd.one_dim()));
    CMatrix h = exp_nc(alog);
    CMatrix hinv = exp_nc(-alog);
    // hinv is block upper triangular: hinv = p_h k_h.
    CMatrix ha = block_a(hinv, s), hb = block_b(hinv, s), hd = block_d(hinv, s);
    CMatrix zb = hb * hd.inverse();
    PKNTriple out = t;
    out.zplus = t.zplus + block_a(t.k, s) * zb * block_d(t.k, s).inverse();
    out.k = t.k * block_diag(ha, hd);
    out.n = h * t.n;
    out.log_n = rd.nc_coords(mat_log_unipotent(out.n));
    out.gauge = Gauge::Free;
    out.method = PknMethod::Regauged;
    return out;
}

bool pkn_membership(const CMatrix& g, int j, const RootDatum& rd) {
    if (j < 1 || j > rd.rank) throw Error(ErrorKind::InvalidArgument, "pkn_membership: index out of range");
    std::vector<double> t;
    if (torus_coordinates(g, rd, t)) {
        PKNTriple tr = torus_pkn_closed_form(t, rd);
        CMatrix logn = mat_log_unipotent(tr.n);
        return (rd.project_nj(logn, j) - logn).norm() <= 1e-12 * std::max(1.0, logn.norm());
    }
    const int n = rd.spec.size();
    CMatrix u = g - CMatrix::Identity(n, n);
    if (nilpotency_order(u, 1e-12) > 0) {
        CMatrix logn = mat_log_unipotent(g);
        bool in_n = (rd.project_nj(logn, rd.rank) - logn).norm() <= 1e-12 * std::max(1.0, logn.norm());
        if (in_n && (rd.project_nj(logn, j) - logn).norm() <= 1e-12 * std::max(1.0, logn.norm())) return true;
    }
    if (j == rd.rank) {
        PKNTriple tr = pkn_factorize(g, rd, PknSign::Plus);
        return tr.residual <= 1e-9;
    }
    throw Error(ErrorKind::Inconclusive, "pkn_membership: no closed-form decision for this element and j < r");
}

}  // namespace wkl
