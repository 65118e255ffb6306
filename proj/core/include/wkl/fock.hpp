#pragma once

#include <memory>

#include "wkl/krep.hpp"
#include "wkl/multiindex.hpp"
#include "wkl/pkn.hpp"

namespace wkl {

// Bargmann-Fock space on n_1/2 truncated at total degree cap. Coordinates are
// w_k = sqrt(s) <z, u_k> with u_k the unit-scale orthonormal complex basis, so
// <z, w>_s = sum_k z_k conj(w_k) and ||w^a||^2 = a!.
class FockSpace {
public:
    explicit FockSpace(std::shared_ptr<const RootDatum> rd, int cap = 12, double scale = 1.0);

    const RootDatum& datum() const { return *rd_; }
    std::shared_ptr<const RootDatum> datum_ptr() const { return rd_; }
    int vars() const { return rd_->half_dim(); }
    int cap() const { return cap_; }
    double scale() const { return scale_; }
    const MultiIndexSet& indices() const { return *set_; }
    std::shared_ptr<const MultiIndexSet> index_ptr() const { return set_; }

    // Coordinates of a real element of n_1/2 (or its complex-linear extension
    // through J: the result is linear in the real coordinates of z).
    CVector coords(const CMatrix& z) const;
    CMatrix element(const CVector& w) const;
    // chi(exp x) = exp(-2is (x|E)), extended complex-linearly to n_1,C.
    Complex central_character(const CMatrix& x) const;
    // <z, w>_s for z, w in n_1/2.
    Complex hermitian(const CMatrix& z, const CMatrix& w) const;

private:
    std::shared_ptr<const RootDatum> rd_;
    int cap_;
    double scale_;
    std::shared_ptr<const MultiIndexSet> set_;
};

struct FockVector {
    std::shared_ptr<const MultiIndexSet> set;
    CVector coeffs;
    // Norm of the discarded part above the degree cap, accumulated over operations.
    double tail = 0.0;

    static FockVector zero(const FockSpace& f);
    static FockVector constant(const FockSpace& f, Complex c);
    static FockVector monomial(const FockSpace& f, const MultiIndex& a, Complex c = 1.0);

    int cap() const { return set->cap(); }
    double norm() const;
    // <this, other> with ||w^a||^2 = a!.
    Complex inner(const FockVector& other) const;
    Complex eval(const CVector& w) const;
    // Norm of the part of degree above k.
    double norm_above(int k) const;
    FockVector operator+(const FockVector& o) const;
    FockVector operator-(const FockVector& o) const;
    FockVector operator*(Complex c) const;
};

// zeta(w - a); exact on polynomials.
FockVector fock_translate(const FockVector& zeta, const CVector& a);
// e^{sum_k b_k w_k} zeta(w), truncated at the cap; the discarded mass up to cap + margin is recorded.
FockVector fock_multiply_exp(const FockVector& zeta, const CVector& b, int margin = 10);
// zeta(M w).
FockVector fock_linear_substitute(const FockVector& zeta, const CMatrix& m);

// omega(exp(z + x)) zeta for z in n_1/2 and x in n_1 (real elements), via the displacement formula.
FockVector fock_act_n(const FockSpace& f, const CMatrix& z, const CMatrix& x, const FockVector& zeta);
// omega(exp X) zeta for X in n_C, via exp(X+ + X- + v) = exp(X+) exp(X-) exp(v - [X+,X-]/2).
FockVector fock_act_nc(const FockSpace& f, const CMatrix& x, const FockVector& zeta);
FockVector omega_nc(const FockSpace& f, const NCCoords& c, const FockVector& zeta, bool inverse = false);
// omega(n_z^+) zeta = zeta(w - z), omega(n_z^-) zeta = e^{<w,z>} zeta; z given by Fock coordinates.
FockVector fock_act_nzplus(const FockSpace& f, const CVector& z, const FockVector& zeta);
FockVector fock_act_nzminus(const FockSpace& f, const CVector& z, const FockVector& zeta);
// n_z^+ = exp((z - iJz)/2) and n_z^- = exp((z + iJz)/2) as matrices, z in Fock coordinates.
CMatrix nz_plus(const FockSpace& f, const CVector& z);
CMatrix nz_minus(const FockSpace& f, const CVector& z);

Complex fock_kernel(const FockSpace& f, const CVector& z, const CVector& w);
// The truncated section K_w = e^{<., w>}.
FockVector fock_kernel_section(const FockSpace& f, const CVector& w);

// Unitary matrix U of Ad(k) on n_1/2 in Fock coordinates; InvalidArgument unless k in K cap L.
CMatrix k_cap_l_action(const FockSpace& f, const CMatrix& k);
bool in_k_cap_l(const CMatrix& k, const RootDatum& rd, double tol = 1e-10);
// tau(k) zeta(w) = zeta(Ad(k)^{-1} w).
FockVector fock_tau(const FockSpace& f, const CMatrix& k, const FockVector& zeta);

// m(xi (x) conj eta)(z) = <pi(n_z^+)^{-1} xi, eta>, with pi evaluated on the K_C part of n_z^+.
FockVector matrix_coeff_m(const FockSpace& f, const KRep& pi, const CVector& xi, const CVector& eta);

}  // namespace wkl
