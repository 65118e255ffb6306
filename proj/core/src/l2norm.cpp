#include "wkl/l2norm.hpp"

#include <cmath>
#include <numbers>

#include "wkl/parallel.hpp"

namespace wkl {

const char* to_string(L2Status s) {
    switch (s) {
        case L2Status::Finite: return "finite";
        case L2Status::Divergent: return "divergent";
        case L2Status::Boundary: return "boundary";
    }
    return "?";
}

double reduced_integrand(const std::vector<double>& t, const std::vector<double>& mu, const RootDatum& rd, double s) {
    if (static_cast<int>(t.size()) != rd.rank || static_cast<int>(mu.size()) != rd.rank)
        throw Error(ErrorKind::InvalidArgument, "reduced_integrand: wrong number of coordinates");
    double e = 0.0;
    for (std::size_t j = 0; j < t.size(); ++j)
        e += 2.0 * s * (1.0 - std::exp(-2.0 * t[j])) + 2.0 * (rd.rho_n[j] - mu[j]) * t[j];
    return std::exp(e) * l_density_w(t, rd);
}

double damping_cutoff(const std::vector<double>& mu, const RootDatum& rd, double s) {
    // Per coordinate: 2s(1 - e^{2T}) + 2|rho_n - mu| T <= log(1e-16), plus the w(a) growth.
    double worst = 0.0;
    for (std::size_t j = 0; j < mu.size(); ++j) worst = std::max(worst, std::abs(rd.rho_n[j] - mu[j]));
    double wgrowth = 0.0;
    for (const auto& root : rd.restricted_table)
        if (is_positive_l_root(root.label)) {
            double c = 0.0;
            for (int v : root.label) c += std::abs(v);
            wgrowth += root.multiplicity * c;
        }
    const double target = 16.0 * std::log(10.0);
    double t = 0.0;
    while (2.0 * s * (std::exp(2.0 * t) - 1.0) - (2.0 * worst + wgrowth) * t < target) t += 0.125;
    return t;
}

namespace {

double partial_rank1(const std::vector<double>& mu, const RootDatum& rd, double s, double lo, double hi) {
    return integrate_interval([&](double t) { return reduced_integrand({t}, mu, rd, s); }, lo, hi, 0.25, 20);
}

double partial_rank2(const std::vector<double>& mu, const RootDatum& rd, double s, double lo, double hi) {
    // Chamber t1 > t2: outer t2 in [lo, hi], inner t1 in [t2, hi].
    auto inner = [&](double t2) {
        return integrate_interval([&](double t1) { return reduced_integrand({t1, t2}, mu, rd, s); }, t2, hi, 0.5, 12);
    };
    return integrate_interval(inner, lo, hi, 0.5, 12);
}

}  // namespace

L2Result reduced_series(const std::vector<double>& mu, const RootDatum& rd, double s, const ReducedOptions& opt) {
    if (rd.rank > 2) throw Error(ErrorKind::Unsupported, "gn_l2_norm_reduced: chambers of rank above 2 are not implemented");
    if (static_cast<int>(mu.size()) != rd.rank) throw Error(ErrorKind::InvalidArgument, "gn_l2_norm_reduced: mu has the wrong length");
    L2Result r;
    r.t_lower = damping_cutoff(mu, rd, s);
    auto partial = [&](double hi) {
        return rd.rank == 1 ? partial_rank1(mu, rd, s, -r.t_lower, hi) : partial_rank2(mu, rd, s, -r.t_lower, hi);
    };
    double prev = partial(opt.t_start);
    r.partials.push_back(prev);
    r.t_upper = opt.t_start;
    int run = 0;
    for (int k = 1; k <= opt.max_doublings; ++k) {
        const double hi = opt.t_start * std::ldexp(1.0, k);
        const double cur = partial(hi);
        r.partials.push_back(cur);
        r.t_upper = hi;
        if (!std::isfinite(cur) || cur >= opt.growth * prev) {
            if (++run >= opt.growth_runs || !std::isfinite(cur)) {
                r.status = L2Status::Divergent;
                r.value = cur;
                r.error = std::numeric_limits<double>::infinity();
                return r;
            }
        } else {
            run = 0;
        }
        const double inc = std::abs(cur - prev);
        prev = cur;
        if (inc <= opt.rel_tol * std::abs(cur)) {
            r.value = cur;
            r.error = inc;
            return r;
        }
    }
    r.value = prev;
    r.error = std::abs(r.partials.back() - r.partials[r.partials.size() - 2]);
    return r;
}

L2Result gn_l2_norm_reduced(const WhittakerKernel& wk, const ReducedOptions& opt) {
    MuExtraction me = extract_mu(wk.rep(), wk.datum());
    L2Result r = reduced_series(me.mu, wk.datum(), wk.fock().scale(), opt);
    const double a = std::pow(wk.a_eta_star(me.vector).norm(), 2);
    r.value *= a;
    r.error *= a;
    for (double& p : r.partials) p *= a;
    return r;
}

std::vector<CMatrix> k_cap_l_grid(const BlockSpec& s, int n) {
    if (s.q != 1 || s.p > 2) throw Error(ErrorKind::Unsupported, "K cap L sampling is implemented for SU(1,1) and SU(2,1)");
    std::vector<CMatrix> out;
    if (s.p == 1) {
        out.push_back(CMatrix::Identity(2, 2));
        out.push_back(-CMatrix::Identity(2, 2));
        return out;
    }
    for (int j = 0; j < n; ++j) {
        const double phi = 2.0 * std::numbers::pi * j / n;
        CMatrix k = CMatrix::Zero(3, 3);
        k(0, 0) = k(2, 2) = std::polar(1.0, phi);
        k(1, 1) = std::polar(1.0, -2.0 * phi);
        out.push_back(k);
    }
    return out;
}

namespace {

struct FullSetup {
    std::vector<double> t_nodes, t_weights;  // weights include a^{2 rho_n} w(a)
    std::vector<CMatrix> ks, ls;
    bool grid = false;
};

FullSetup full_setup(const WhittakerKernel& wk, const std::vector<double>& mu, const FullOptions& opt) {
    const RootDatum& rd = wk.datum();
    const BlockSpec s = rd.spec;
    if (rd.rank != 1 || s.q != 1 || s.p > 2)
        throw Error(ErrorKind::Unsupported, "gn_l2_norm_full: implemented for SU(1,1) and SU(2,1)");
    FullSetup f;
    const double sc = wk.fock().scale();
    const double lo = -damping_cutoff(mu, rd, sc);
    double hi = opt.t_upper;
    if (hi <= 0.0) {
        // e^{2(rho - mu) t} below 1e-14.
        const double gap = mu[0] - rd.rho[0];
        hi = 14.0 * std::log(10.0) / (2.0 * gap);
    }
    const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / opt.t_panel)));
    const double w = (hi - lo) / panels;
    const GaussRule g = gauss_legendre(opt.t_order);
    for (int k = 0; k < panels; ++k)
        for (int i = 0; i < opt.t_order; ++i) {
            const double t = lo + w * (k + 0.5 * (g.nodes[static_cast<std::size_t>(i)] + 1.0));
            f.t_nodes.push_back(t);
            f.t_weights.push_back(0.5 * w * g.weights[static_cast<std::size_t>(i)] * std::exp(2.0 * rd.rho_n[0] * t) *
                                  l_density_w({t}, rd));
        }
    f.ls = k_cap_l_grid(s, opt.l_samples);
    if (s.p == 1) {
        f.grid = true;
        for (int i = 0; i < opt.k_samples; ++i) {
            const double phi = 2.0 * std::numbers::pi * (i + 0.5) / opt.k_samples;
            CMatrix k = CMatrix::Zero(2, 2);
            k(0, 0) = std::polar(1.0, phi);
            k(1, 1) = std::polar(1.0, -phi);
            f.ks.push_back(k);
        }
    } else {
        Rng rng(opt.seed);
        for (int i = 0; i < opt.k_samples; ++i) f.ks.push_back(random_k_compact(rng, s));
    }
    return f;
}

// Per-K-sample integrals of <T1 xi1, T2 xi2>(k a l) over A x (K cap L).
std::vector<Complex> per_k_integrals(const WhittakerKernel& w1, const WhittakerKernel& w2, const CVector& xi1, const CVector& xi2,
                                     const FullSetup& f) {
    const RootDatum& rd = w1.datum();
    const std::size_t nt = f.t_nodes.size(), nl = f.ls.size();
    std::vector<Complex> vals(f.ks.size() * nt * nl);
    parallel_for(vals.size(), [&](std::size_t idx) {
        const std::size_t ki = idx / (nt * nl), ti = (idx / nl) % nt, li = idx % nl;
        const CMatrix x = f.ks[ki] * mat_exp(f.t_nodes[ti] * rd.x[0]) * f.ls[li];
        const FockVector a = w1.t_lkt_eval(xi1, x);
        const FockVector b = &w1 == &w2 && xi1 == xi2 ? a : w2.t_lkt_eval(xi2, x);
        vals[idx] = f.t_weights[ti] * a.inner(b) / static_cast<double>(nl);
    });
    std::vector<Complex> out(f.ks.size());
    for (std::size_t ki = 0; ki < f.ks.size(); ++ki)
        out[ki] = pairwise_sum(std::vector<Complex>(vals.begin() + static_cast<std::ptrdiff_t>(ki * nt * nl),
                                                    vals.begin() + static_cast<std::ptrdiff_t>((ki + 1) * nt * nl)));
    return out;
}

SchurResult summarize(const std::vector<Complex>& per_k, bool grid) {
    SchurResult r;
    const double n = static_cast<double>(per_k.size());
    r.value = pairwise_sum(per_k) / n;
    if (grid) {
        // Trapezoid grid on the circle: compare with the even-index half grid.
        Complex half = 0.0;
        int cnt = 0;
        for (std::size_t i = 0; i < per_k.size(); i += 2, ++cnt) half += per_k[i];
        r.error = std::abs(r.value - half / static_cast<double>(cnt));
    } else {
        double var = 0.0;
        for (const Complex& v : per_k) var += std::norm(v - r.value);
        r.error = n > 1 ? std::sqrt(var / (n - 1.0) / n) : std::numeric_limits<double>::infinity();
    }
    return r;
}

L2Status gate(const DSParams& p) {
    if (p.discrete) return L2Status::Finite;
    for (DSStatus st : p.status)
        if (st == DSStatus::Below) return L2Status::Divergent;
    return L2Status::Boundary;
}

}  // namespace

L2Result gn_l2_norm_full(const WhittakerKernel& wk, const CVector& xi, const FullOptions& opt) {
    L2Result r;
    DSParams p = classify(wk.rep(), wk.datum());
    r.status = gate(p);
    if (r.status != L2Status::Finite) return r;
    FullSetup f = full_setup(wk, p.mu, opt);
    SchurResult s = summarize(per_k_integrals(wk, wk, xi, xi, f), f.grid);
    r.value = s.value.real();
    r.error = s.error;
    r.t_lower = -f.t_nodes.front();
    r.t_upper = f.t_nodes.back();
    return r;
}

SchurResult schur_orthogonality(const WhittakerKernel& w1, const WhittakerKernel& w2, const CVector& xi1, const CVector& xi2,
                                const FullOptions& opt) {
    if (w1.rep().name() != w2.rep().name() || !(w1.rep().spec() == w2.rep().spec()))
        throw Error(ErrorKind::InvalidArgument, "schur_orthogonality: kernels for different representations");
    DSParams p = classify(w1.rep(), w1.datum());
    if (gate(p) != L2Status::Finite)
        throw Error(ErrorKind::Divergent, "schur_orthogonality: parameters outside the discrete range");
    FullSetup f = full_setup(w1, p.mu, opt);
    return summarize(per_k_integrals(w1, w2, xi1, xi2, f), f.grid);
}

std::vector<IntegrandSample> sample_reduced_integrand(const std::vector<double>& mu, const RootDatum& rd, double s, double t_min,
                                                      double t_max, int n) {
    if (rd.rank != 1) throw Error(ErrorKind::Unsupported, "sample_integrand: rank-one groups only");
    if (n < 2 || !(t_max > t_min)) throw Error(ErrorKind::InvalidArgument, "sample_integrand: need n >= 2 and t_max > t_min");
    const double lo = -damping_cutoff(mu, rd, s);
    std::vector<IntegrandSample> out;
    double acc = 0.0, prev = std::min(lo, t_min);
    for (int i = 0; i < n; ++i) {
        const double t = t_min + (t_max - t_min) * i / (n - 1);
        acc += partial_rank1(mu, rd, s, prev, t);
        prev = t;
        out.push_back({t, reduced_integrand({t}, mu, rd, s), acc});
    }
    return out;
}

}  // namespace wkl
