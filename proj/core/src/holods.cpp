#include "wkl/holods.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "wkl/hermgroup.hpp"

namespace wkl {

CMatrix jpi(const KRep& pi, const CMatrix& g, const CMatrix& z) {
    return pi.inverse_at(universal_cocycle(g, z, pi.spec()));
}

CMatrix kpi(const KRep& pi, const CMatrix& z, const CMatrix& w) {
    return pi.inverse_at(universal_kernel(z, w, pi.spec()));
}

HoloFunction HoloFunction::constant(const CVector& xi) {
    return HoloFunction{static_cast<int>(xi.size()), [xi](const CMatrix&) { return xi; }};
}

HoloFunction HoloFunction::kernel_section(const KRep& pi, const CMatrix& w, const CVector& xi) {
    return HoloFunction{pi.dim(), [pi, w, xi](const CMatrix& z) -> CVector { return kpi(pi, z, w) * xi; }};
}

HoloFunction upi_act(const KRep& pi, const CMatrix& g, const HoloFunction& f) {
    const BlockSpec s = pi.spec();
    const CMatrix ginv = g.inverse();
    return HoloFunction{f.dim, [pi, s, ginv, f](const CMatrix& z) -> CVector {
                            return jpi(pi, ginv, z) * f(mobius(ginv, z, s));
                        }};
}

MuExtraction extract_mu(const KRep& pi, const RootDatum& rd) {
    const int r = rd.rank;
    const int d = pi.dim();
    auto torus = [&](const std::vector<double>& t) {
        CMatrix h = CMatrix::Zero(rd.spec.size(), rd.spec.size());
        for (int j = 0; j < r; ++j) h += t[static_cast<std::size_t>(j)] * rd.triples[static_cast<std::size_t>(j)].h;
        return pi(mat_exp(h));
    };
    std::vector<double> generic(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) generic[static_cast<std::size_t>(j)] = 0.3 * (1.0 + 0.37 * j);
    Eigen::ComplexEigenSolver<CMatrix> es(torus(generic));
    if (es.info() != Eigen::Success) throw Error(ErrorKind::InvalidArgument, "extract_mu: eigen-solve failed");

    const double t1 = 0.25, t2 = 0.5;
    MuExtraction best;
    bool have = false;
    for (int c = 0; c < d; ++c) {
        CVector v = es.eigenvectors().col(c).normalized();
        std::vector<double> mu(static_cast<std::size_t>(r));
        double fit = 0.0;
        bool joint = true;
        for (int j = 0; j < r; ++j) {
            std::vector<double> e(static_cast<std::size_t>(r), 0.0);
            e[static_cast<std::size_t>(j)] = t1;
            CVector a = torus(e) * v;
            e[static_cast<std::size_t>(j)] = t2;
            CVector b = torus(e) * v;
            Complex la = v.dot(a), lb = v.dot(b);
            if ((a - la * v).norm() > 1e-8 * a.norm() || (b - lb * v).norm() > 1e-8 * b.norm()) joint = false;
            double m1 = -std::log(std::abs(la)) / t1, m2 = -std::log(std::abs(lb)) / t2;
            mu[static_cast<std::size_t>(j)] = m1;
            fit = std::max(fit, std::abs(m1 - m2));
        }
        if (!joint) throw Error(ErrorKind::InvalidArgument, "extract_mu: no joint eigenvector of the torus");
        // Highest weight: lexicographically smallest mu.
        if (!have || mu < best.mu) {
            best.mu = mu;
            best.vector = v;
            best.fit_error = fit;
            have = true;
        }
    }
    for (auto& m : best.mu) {
        double rm = std::round(m);
        if (std::abs(m - rm) < 1e-9) m = rm;
    }
    return best;
}

const char* to_string(DSStatus s) {
    switch (s) {
        case DSStatus::Below: return "below";
        case DSStatus::Boundary: return "boundary";
        case DSStatus::Above: return "above";
    }
    return "?";
}

DSParams classify(const KRep& pi, const RootDatum& rd) {
    DSParams p;
    p.spec = rd.spec;
    p.pi_name = pi.name();
    p.mu = extract_mu(pi, rd).mu;
    p.rho = rd.rho;
    p.discrete = true;
    for (std::size_t j = 0; j < p.mu.size(); ++j) {
        double gap = p.mu[j] - p.rho[j];
        DSStatus st = std::abs(gap) <= 1e-9 ? DSStatus::Boundary : (gap > 0 ? DSStatus::Above : DSStatus::Below);
        p.status.push_back(st);
        if (st != DSStatus::Above) p.discrete = false;
    }
    return p;
}

HoloDS::HoloDS(const KRep& pi, std::shared_ptr<const RootDatum> rd, const BallRule& rule)
    : pi_(pi), rd_(std::move(rd)), rule_(rule) {
    rule_.p = rd_->spec.p;
    if (rd_->spec.q != 1)
        throw Error(ErrorKind::Unsupported, "HoloDS: domain quadrature is implemented for the disk and the 2-ball only");
    std::vector<DomainNode> n = rule_.nodes();
    init(n, rule_.coarse().nodes(), n);
}

HoloDS::HoloDS(const KRep& pi, std::shared_ptr<const RootDatum> rd, const SiegelRule& rule) : pi_(pi), rd_(std::move(rd)) {
    if (rd_->spec.q != 1)
        throw Error(ErrorKind::Unsupported, "HoloDS: domain quadrature is implemented for the disk and the 2-ball only");
    rule_.p = rd_->spec.p;
    SiegelRule r = rule;
    r.p = rd_->spec.p;
    // The constants are smooth at the sphere; the polar rule fixes the normalization.
    init(r.nodes(), r.coarse().nodes(), rule_.nodes());
}

void HoloDS::init(std::vector<DomainNode> nodes, std::vector<DomainNode> coarse, const std::vector<DomainNode>& norm_nodes) {
    if (!(pi_.spec() == rd_->spec)) throw Error(ErrorKind::InvalidArgument, "HoloDS: representation and group differ");
    params_ = classify(pi_, *rd_);
    if (params_.discrete) {
        nodes_ = std::move(nodes);
        coarse_ = std::move(coarse);
        HoloFunction c = HoloFunction::constant(extract_mu(pi_, *rd_).vector);
        Complex raw = integrate_nodes(norm_nodes, [&](const CVector& z) { return density(c, c, z); });
        norm_ = 1.0 / raw.real();
    }
}

CMatrix HoloDS::point(const CVector& z) const { return z; }

Complex HoloDS::density(const HoloFunction& f1, const HoloFunction& f2, const CVector& z) const {
    const CMatrix zm = point(z);
    const double r2 = z.squaredNorm();
    // K_pi(z,z)^{-1} = pi(K(z,z)); d*z = (1 - |z|^2)^{-(p+1)} dA on the ball.
    CMatrix kinv = pi_(universal_kernel(zm, zm, rd_->spec));
    CVector a = kinv * f1(zm);
    return f2(zm).dot(a) * std::pow(1.0 - r2, -(rd_->spec.p + 1));
}

DSResult HoloDS::inner(const HoloFunction& f1, const HoloFunction& f2) const {
    if (!params_.discrete)
        throw Error(ErrorKind::Divergent, "ds_inner_product: parameters outside the discrete range; the integral diverges");
    auto g = [&](const CVector& z) { return density(f1, f2, z); };
    DSResult r;
    r.value = norm_ * integrate_nodes(nodes_, g);
    r.error = std::abs(r.value - norm_ * integrate_nodes(coarse_, g));
    return r;
}

std::vector<double> HoloDS::shell_sweep(const HoloFunction& f, int levels) const {
    std::vector<double> out;
    BallRule shell = rule_;
    shell.radial = std::max(16, rule_.radial / 8);
    for (int k = 1; k <= levels; ++k) {
        shell.r_min = k == 1 ? 0.0 : 1.0 - std::ldexp(1.0, -(k - 1));
        shell.r_max = 1.0 - std::ldexp(1.0, -k);
        out.push_back(integrate_nodes(shell.nodes(), [&](const CVector& z) { return density(f, f, z); }).real());
    }
    return out;
}

bool HoloDS::sweep_diverges(const std::vector<double>& shells) {
    // Convergent integrands give shells shrinking at least geometrically
    // (factor <= 1/2 per level); a divergent one keeps them from shrinking.
    if (shells.size() < 4) return false;
    int run = 0;
    for (std::size_t k = 1; k < shells.size(); ++k) {
        run = (shells[k] >= 0.75 * shells[k - 1]) ? run + 1 : 0;
        if (run >= 3) return true;
    }
    return false;
}

}  // namespace wkl
