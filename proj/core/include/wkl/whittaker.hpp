#pragma once

#include "wkl/fock.hpp"
#include "wkl/holods.hpp"
#include "wkl/pkn.hpp"

namespace wkl {

// The kernel attached to (pi, eta): A_eta, its adjoint, Psi*(x, z) and the
// lowest-K-type sections T_{pi,eta} xi.
class WhittakerKernel {
public:
    WhittakerKernel(const FockSpace& fock, const KRep& pi, const CVector& eta);

    const FockSpace& fock() const { return fock_; }
    const KRep& rep() const { return pi_; }
    const CVector& eta() const { return eta_; }
    const RootDatum& datum() const { return fock_.datum(); }

    // A_eta* xi = m(xi (x) conj eta), through pi(n_z^+)^{-1}.
    FockVector a_eta_star(const CVector& xi) const;
    // The same map through <xi, pi(n_z^-) eta>.
    FockVector a_eta_star_dual(const CVector& xi) const;
    // A_eta zeta = integral of zeta(w) pi(n_w^-) eta e^{-|w|^2} dw, by Gaussian moments.
    CVector a_eta(const FockVector& zeta) const;
    // Coefficients V_b of pi(n_w^-) eta = sum_b V_b conj(w)^b (rows: monomials).
    const CMatrix& antiholomorphic_coefficients() const { return v_coeffs_; }

    // Psi(x, g.o)* xi = omega(n^+(g^{-1}x))^{-1} A_eta* pi(k^+(g^{-1}x))^{-1} j_pi(g,o)^{-*} xi.
    FockVector psi_star(const CMatrix& x, const CMatrix& g, const CVector& xi, const PknOptions& opt = {}) const;
    // Same composite from a given factorization t of g^{-1} x (any gauge).
    FockVector psi_star_from(const PKNTriple& t, const CMatrix& g, const CVector& xi) const;
    // T xi(x) = Psi(x, o)* xi.
    FockVector t_lkt_eval(const CVector& xi, const CMatrix& x, const PknOptions& opt = {}) const;
    // Pi(z) xi = Psi(e, z)* xi with z = g_z . o for the canonical section g_z.
    FockVector whittaker_function(const CMatrix& z, const CVector& xi) const;

    // T F(x) = integral over D of Psi(x,z)* K_pi(z,z)^{-1} F(z) d*z, with the
    // normalization and nodes of ds moved by x.
    FockVector t_apply(const HoloDS& ds, const HoloFunction& f, const CMatrix& x) const;

private:
    FockSpace fock_;
    KRep pi_;
    CVector eta_;
    std::vector<FockVector> m_cols_;
    CMatrix v_coeffs_;
};

// A finitely supported section: point masses at x_i with Fock values f_i and weights w_i.
struct PointSection {
    std::vector<CMatrix> points;
    std::vector<FockVector> values;
    std::vector<double> weights;
};
// sum_i w_i <T F(x_i), f_i>.
Complex pair_with_section(const WhittakerKernel& wk, const HoloDS& ds, const HoloFunction& f, const PointSection& s);
// T* f(z) = sum_i w_i Psi(x_i, z) f_i, as a V_pi-valued function on the domain.
HoloFunction t_adjoint_apply(const WhittakerKernel& wk, const PointSection& s);

// Residual of the holomorphic derivative d/dz of z -> Pi(z) xi (finite differences),
// relative to the size of the antiholomorphic derivative.
struct CauchyRiemann {
    double holomorphic = 0.0;
    double antiholomorphic = 0.0;
    double ratio() const { return holomorphic / std::max(antiholomorphic, 1e-300); }
};
CauchyRiemann antiholomorphy_residual(const WhittakerKernel& wk, const CMatrix& z, const CVector& xi, double h = 1e-5);

}  // namespace wkl
