#include "wkl/whittaker.hpp"

#include <cmath>

#include "wkl/parallel.hpp"

namespace wkl {

WhittakerKernel::WhittakerKernel(const FockSpace& fock, const KRep& pi, const CVector& eta)
    : fock_(fock), pi_(pi), eta_(eta) {
    if (!(pi.spec() == fock.datum().spec)) throw Error(ErrorKind::InvalidArgument, "WhittakerKernel: group mismatch");
    if (eta.size() != pi.dim()) throw Error(ErrorKind::InvalidArgument, "WhittakerKernel: eta has the wrong size");
    const int d = pi.dim();
    for (int i = 0; i < d; ++i) m_cols_.push_back(matrix_coeff_m(fock_, pi_, CVector::Unit(d, i), eta_));

    const BlockSpec s = pi.spec();
    auto value = [&](const CVector& v) -> CVector {
        HCTriple hc = hc_factorize(nz_minus(fock_, v.conjugate()), s);
        return pi_(hc.k) * eta_;
    };
    if (fock_.vars() == 0) {
        v_coeffs_ = value(CVector::Zero(0)).transpose();
    } else {
        const double radius = std::sqrt(std::max(1.0, static_cast<double>(fock_.cap())));
        v_coeffs_ = torus_coefficients(fock_.indices(), d, value, radius);
    }
}

FockVector WhittakerKernel::a_eta_star(const CVector& xi) const {
    if (xi.size() != pi_.dim()) throw Error(ErrorKind::InvalidArgument, "a_eta_star: xi has the wrong size");
    FockVector out = FockVector::zero(fock_);
    for (int i = 0; i < pi_.dim(); ++i) out.coeffs += xi(i) * m_cols_[static_cast<std::size_t>(i)].coeffs;
    return out;
}

FockVector WhittakerKernel::a_eta_star_dual(const CVector& xi) const {
    if (xi.size() != pi_.dim()) throw Error(ErrorKind::InvalidArgument, "a_eta_star: xi has the wrong size");
    FockVector out = FockVector::zero(fock_);
    out.coeffs = v_coeffs_.conjugate() * xi;
    return out;
}

CVector WhittakerKernel::a_eta(const FockVector& zeta) const {
    const MultiIndexSet& set = fock_.indices();
    if (zeta.set.get() != &set) throw Error(ErrorKind::InvalidArgument, "a_eta: Fock vector from another space");
    CVector out = CVector::Zero(pi_.dim());
    for (int i = 0; i < set.size(); ++i) out += zeta.coeffs(i) * set.factorial(i) * v_coeffs_.row(i).transpose();
    return out;
}

FockVector WhittakerKernel::psi_star_from(const PKNTriple& t, const CMatrix& g, const CVector& xi) const {
    if (t.sign != PknSign::Plus) throw Error(ErrorKind::InvalidArgument, "psi_star: needs a P+ K_C N_C factorization");
    const BlockSpec s = pi_.spec();
    // j_pi(g,o)^{-*} = pi(J(g,o))^*.
    CMatrix jstar = pi_(universal_cocycle(g, CMatrix::Zero(s.p, s.q), s)).adjoint();
    CVector v = pi_.inverse_at(t.k) * (jstar * xi);
    return omega_nc(fock_, t.log_n, a_eta_star(v), true);
}

FockVector WhittakerKernel::psi_star(const CMatrix& x, const CMatrix& g, const CVector& xi, const PknOptions& opt) const {
    PKNTriple t = pkn_factorize(CMatrix(g.inverse() * x), datum(), PknSign::Plus, opt);
    return psi_star_from(t, g, xi);
}

FockVector WhittakerKernel::t_lkt_eval(const CVector& xi, const CMatrix& x, const PknOptions& opt) const {
    const int n = pi_.spec().size();
    return psi_star(x, CMatrix::Identity(n, n), xi, opt);
}

FockVector WhittakerKernel::whittaker_function(const CMatrix& z, const CVector& xi) const {
    const BlockSpec s = pi_.spec();
    if (!DomainPoint::contains(z)) throw Error(ErrorKind::InvalidArgument, "whittaker_function: point outside the domain");
    return psi_star(CMatrix::Identity(s.size(), s.size()), domain_section(z, s), xi);
}

FockVector WhittakerKernel::t_apply(const HoloDS& ds, const HoloFunction& f, const CMatrix& x) const {
    if (!ds.params().discrete)
        throw Error(ErrorKind::Divergent, "t_apply: parameters outside the discrete range; the integral diverges");
    const BlockSpec s = pi_.spec();
    const std::vector<DomainNode>& nodes = ds.nodes();
    std::vector<CVector> parts(nodes.size());
    std::vector<double> tails(nodes.size());
    // Nodes are moved to x.z' (d*z is invariant), which keeps the oscillation of
    // Psi(x, .) at the same boundary point of the rule.
    parallel_for(nodes.size(), [&](std::size_t i) {
        const double w = nodes[i].weight * std::pow(1.0 - nodes[i].z.squaredNorm(), -(s.p + 1)) * ds.normalization();
        const CMatrix zm = mobius(x, ds.point(nodes[i].z), s);
        CVector v = pi_(universal_kernel(zm, zm, s)) * f(zm);
        FockVector term = psi_star(x, domain_section(zm, s), v);
        parts[i] = w * term.coeffs;
        tails[i] = w * term.tail;
    });
    FockVector out = FockVector::zero(fock_);
    out.coeffs = pairwise_sum(parts);
    out.tail = pairwise_sum(tails);
    return out;
}

Complex pair_with_section(const WhittakerKernel& wk, const HoloDS& ds, const HoloFunction& f, const PointSection& s) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < s.points.size(); ++i) acc += s.weights[i] * wk.t_apply(ds, f, s.points[i]).inner(s.values[i]);
    return acc;
}

HoloFunction t_adjoint_apply(const WhittakerKernel& wk, const PointSection& s) {
    const KRep pi = wk.rep();
    return HoloFunction{pi.dim(), [wk, s, pi](const CMatrix& z) -> CVector {
                            const int d = pi.dim();
                            const CMatrix g = domain_section(z, pi.spec());
                            CVector out = CVector::Zero(d);
                            // (Psi f)_j = <f, Psi* e_j>.
                            for (std::size_t i = 0; i < s.points.size(); ++i)
                                for (int j = 0; j < d; ++j)
                                    out(j) += s.weights[i] * s.values[i].inner(wk.psi_star(s.points[i], g, CVector::Unit(d, j)));
                            return out;
                        }};
}

CauchyRiemann antiholomorphy_residual(const WhittakerKernel& wk, const CMatrix& z, const CVector& xi, double h) {
    CauchyRiemann cr;
    for (Eigen::Index r = 0; r < z.rows(); ++r)
        for (Eigen::Index c = 0; c < z.cols(); ++c) {
            auto at = [&](Complex step) {
                CMatrix zz = z;
                zz(r, c) += step;
                return wk.whittaker_function(zz, xi).coeffs;
            };
            CVector dx = (at(h) - at(-h)) / (2.0 * h);
            CVector dy = (at(I_UNIT * h) - at(-I_UNIT * h)) / (2.0 * h);
            cr.holomorphic = std::max(cr.holomorphic, (0.5 * (dx - I_UNIT * dy)).norm());
            cr.antiholomorphic = std::max(cr.antiholomorphic, (0.5 * (dx + I_UNIT * dy)).norm());
        }
    return cr;
}

}  // namespace wkl
