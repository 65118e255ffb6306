#include "wkl/fock.hpp"

#include <cmath>

namespace wkl {

FockSpace::FockSpace(std::shared_ptr<const RootDatum> rd, int cap, double scale)
    : rd_(std::move(rd)), cap_(cap), scale_(scale) {
    if (!rd_) throw Error(ErrorKind::InvalidArgument, "FockSpace: null root datum");
    if (cap < 0) throw Error(ErrorKind::InvalidArgument, "FockSpace: negative degree cap");
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw Error(ErrorKind::Unsupported, "FockSpace: only positive multiples of the E-character are supported");
    set_ = MultiIndexSet::get(rd_->half_dim(), cap);
}

CVector FockSpace::coords(const CMatrix& z) const {
    const int n = vars();
    CVector w(n);
    const double rs = std::sqrt(scale_);
    for (int k = 0; k < n; ++k) w(k) = rs * rd_->hermitian(z, rd_->nil.complex_basis[static_cast<std::size_t>(k)]);
    return w;
}

CMatrix FockSpace::element(const CVector& w) const {
    const int sz = rd_->spec.size();
    CMatrix z = CMatrix::Zero(sz, sz);
    const double rs = std::sqrt(scale_);
    for (int k = 0; k < vars(); ++k) {
        const CMatrix& u = rd_->nil.complex_basis[static_cast<std::size_t>(k)];
        Complex c = w(k) / rs;
        z += c.real() * u + c.imag() * rd_->apply_j(u);
    }
    return z;
}

Complex FockSpace::central_character(const CMatrix& x) const {
    return std::exp(-2.0 * I_UNIT * scale_ * rd_->pairing(x, rd_->E));
}

Complex FockSpace::hermitian(const CMatrix& z, const CMatrix& w) const { return scale_ * rd_->hermitian(z, w); }

FockVector FockVector::zero(const FockSpace& f) {
    return FockVector{f.index_ptr(), CVector::Zero(f.indices().size()), 0.0};
}

FockVector FockVector::constant(const FockSpace& f, Complex c) {
    FockVector v = zero(f);
    v.coeffs(0) = c;
    return v;
}

FockVector FockVector::monomial(const FockSpace& f, const MultiIndex& a, Complex c) {
    FockVector v = zero(f);
    int i = f.indices().find(a);
    if (i < 0) throw Error(ErrorKind::InvalidArgument, "FockVector: monomial above the degree cap");
    v.coeffs(i) = c;
    return v;
}

double FockVector::norm() const { return std::sqrt(std::max(0.0, inner(*this).real())); }

Complex FockVector::inner(const FockVector& o) const {
    if (set != o.set) throw Error(ErrorKind::InvalidArgument, "FockVector: mismatched index sets");
    Complex acc = 0.0;
    for (int i = 0; i < set->size(); ++i) acc += coeffs(i) * std::conj(o.coeffs(i)) * set->factorial(i);
    return acc;
}

Complex FockVector::eval(const CVector& w) const { return poly_eval(*set, coeffs, w); }

double FockVector::norm_above(int k) const {
    double acc = 0.0;
    for (int i = set->degree_begin(std::min(k + 1, set->cap() + 1)); i < set->size(); ++i)
        acc += std::norm(coeffs(i)) * set->factorial(i);
    return std::sqrt(acc);
}

FockVector FockVector::operator+(const FockVector& o) const {
    if (set != o.set) throw Error(ErrorKind::InvalidArgument, "FockVector: mismatched index sets");
    return FockVector{set, coeffs + o.coeffs, tail + o.tail};
}

FockVector FockVector::operator-(const FockVector& o) const {
    if (set != o.set) throw Error(ErrorKind::InvalidArgument, "FockVector: mismatched index sets");
    return FockVector{set, coeffs - o.coeffs, tail + o.tail};
}

FockVector FockVector::operator*(Complex c) const { return FockVector{set, coeffs * c, tail * std::abs(c)}; }

FockVector fock_translate(const FockVector& zeta, const CVector& a) {
    const int n = zeta.set->vars();
    if (n == 0) return zeta;
    CVector out = poly_affine_substitute(*zeta.set, zeta.coeffs, CMatrix::Identity(n, n), -a);
    return FockVector{zeta.set, out, zeta.tail};
}

FockVector fock_linear_substitute(const FockVector& zeta, const CMatrix& m) {
    const int n = zeta.set->vars();
    if (n == 0) return zeta;
    CVector out = poly_affine_substitute(*zeta.set, zeta.coeffs, m, CVector::Zero(n));
    return FockVector{zeta.set, out, zeta.tail};
}

FockVector fock_multiply_exp(const FockVector& zeta, const CVector& b, int margin) {
    const MultiIndexSet& set = *zeta.set;
    const int n = set.vars();
    if (n == 0) return zeta;
    auto big = MultiIndexSet::get(n, set.cap() + margin);
    // e^{b.w} = sum_a b^a / a! w^a.
    CVector ex(big->size());
    for (int i = 0; i < big->size(); ++i) {
        Complex t = 1.0;
        for (int k = 0; k < n; ++k)
            for (int e = 0; e < big->at(i)[static_cast<std::size_t>(k)]; ++e) t *= b(k);
        ex(i) = t / big->factorial(i);
    }
    CVector z = CVector::Zero(big->size());
    for (int i = 0; i < set.size(); ++i) z(big->find(set.at(i))) = zeta.coeffs(i);
    CVector prod = poly_mul(*big, z, ex);
    FockVector out = FockVector{zeta.set, CVector(set.size()), 0.0};
    double dropped = 0.0;
    for (int i = 0; i < big->size(); ++i) {
        if (big->degree(i) <= set.cap())
            out.coeffs(set.find(big->at(i))) = prod(i);
        else
            dropped += std::norm(prod(i)) * big->factorial(i);
    }
    out.tail = zeta.tail * std::exp(0.5 * b.squaredNorm()) + std::sqrt(dropped);
    return out;
}

FockVector fock_act_nzplus(const FockSpace&, const CVector& z, const FockVector& zeta) { return fock_translate(zeta, z); }

FockVector fock_act_nzminus(const FockSpace&, const CVector& z, const FockVector& zeta) {
    return fock_multiply_exp(zeta, z.conjugate());
}

FockVector fock_act_n(const FockSpace& f, const CMatrix& z, const CMatrix& x, const FockVector& zeta) {
    const RootDatum& rd = f.datum();
    const double zn = std::max(1.0, z.norm());
    if ((rd.project_half(z) - z).norm() > 1e-10 * zn)
        throw Error(ErrorKind::OutsideSubspace, "fock_act_n: z is not in n_1/2");
    if ((rd.project_one(x) - x).norm() > 1e-10 * std::max(1.0, x.norm()))
        throw Error(ErrorKind::OutsideSubspace, "fock_act_n: x is not in n_1");
    CVector a = f.coords(z);
    FockVector out = fock_multiply_exp(fock_translate(zeta, a), a.conjugate());
    return out * (std::exp(-0.5 * a.squaredNorm()) * f.central_character(x));
}

FockVector omega_nc(const FockSpace& f, const NCCoords& c, const FockVector& zeta, bool inverse) {
    const RootDatum& rd = f.datum();
    const double sgn = inverse ? -1.0 : 1.0;
    const int d = rd.half_dim();
    CVector plus = sgn * c.plus, minus = sgn * c.minus, center = sgn * c.center;
    CMatrix xp = rd.nc_element(plus, CVector::Zero(d), CVector::Zero(rd.one_dim()));
    CMatrix xm = rd.nc_element(CVector::Zero(d), minus, CVector::Zero(rd.one_dim()));
    CMatrix v = rd.nc_element(CVector::Zero(d), CVector::Zero(d), center);
    Complex chi = f.central_character(v - 0.5 * commutator(xp, xm));
    const double rs = std::sqrt(f.scale());
    FockVector out = fock_multiply_exp(zeta, rs * minus);
    out = fock_translate(out, rs * plus);
    return out * chi;
}

FockVector fock_act_nc(const FockSpace& f, const CMatrix& x, const FockVector& zeta) {
    NCCoords c = f.datum().nc_coords(x);
    if (c.residual > 1e-9 * std::max(1.0, x.norm()))
        throw Error(ErrorKind::OutsideSubspace, "fock_act_nc: element is not in n_C");
    return omega_nc(f, c, zeta);
}

CMatrix nz_plus(const FockSpace& f, const CVector& z) {
    const RootDatum& rd = f.datum();
    const int d = rd.half_dim();
    return exp_nc(rd.nc_element(z / std::sqrt(f.scale()), CVector::Zero(d), CVector::Zero(rd.one_dim())));
}

CMatrix nz_minus(const FockSpace& f, const CVector& z) {
    const RootDatum& rd = f.datum();
    const int d = rd.half_dim();
    return exp_nc(rd.nc_element(CVector::Zero(d), z.conjugate() / std::sqrt(f.scale()), CVector::Zero(rd.one_dim())));
}

Complex fock_kernel(const FockSpace&, const CVector& z, const CVector& w) { return std::exp(w.dot(z)); }

FockVector fock_kernel_section(const FockSpace& f, const CVector& w) {
    FockVector one = FockVector::constant(f, 1.0);
    return fock_multiply_exp(one, w.conjugate());
}

bool in_k_cap_l(const CMatrix& k, const RootDatum& rd, double tol) {
    const BlockSpec& s = rd.spec;
    if (k.rows() != s.size() || k.cols() != s.size()) return false;
    if (off_block_diag_norm(k, s) > tol) return false;
    const CMatrix id = CMatrix::Identity(s.size(), s.size());
    if ((k.adjoint() * k - id).norm() > tol) return false;
    if (std::abs(k.determinant() - 1.0) > tol) return false;
    return (k * rd.E * k.adjoint() - rd.E).norm() <= tol * std::max(1.0, rd.E.norm());
}

CMatrix k_cap_l_action(const FockSpace& f, const CMatrix& k) {
    const RootDatum& rd = f.datum();
    if (!in_k_cap_l(k, rd, 1e-9)) throw Error(ErrorKind::InvalidArgument, "fock_tau: element is not in K cap L");
    const int n = f.vars();
    CMatrix u(n, n);
    for (int l = 0; l < n; ++l) {
        const CMatrix& ul = rd.nil.complex_basis[static_cast<std::size_t>(l)];
        CMatrix img = k * ul * k.adjoint();
        for (int m = 0; m < n; ++m) u(m, l) = rd.hermitian(img, rd.nil.complex_basis[static_cast<std::size_t>(m)]);
    }
    return u;
}

FockVector fock_tau(const FockSpace& f, const CMatrix& k, const FockVector& zeta) {
    CMatrix u = k_cap_l_action(f, k);
    if (f.vars() == 0) return zeta;
    return fock_linear_substitute(zeta, u.adjoint());
}


FockVector matrix_coeff_m(const FockSpace& f, const KRep& pi, const CVector& xi, const CVector& eta) {
    const BlockSpec& s = f.datum().spec;
    if (xi.size() != pi.dim() || eta.size() != pi.dim())
        throw Error(ErrorKind::InvalidArgument, "matrix_coeff_m: vector size does not match dim V_pi");
    auto value = [&](const CVector& w) {
        HCTriple hc = hc_factorize(nz_plus(f, w), s);
        return eta.dot(pi.inverse_at(hc.k) * xi);
    };
    FockVector out = FockVector::zero(f);
    if (f.vars() == 0) {
        out.coeffs(0) = value(CVector::Zero(0));
        return out;
    }
    const double radius = std::sqrt(std::max(1.0, static_cast<double>(f.cap())));
    out.coeffs = torus_coefficients(f.indices(), 1, [&](const CVector& w) { return CVector::Constant(1, value(w)); }, radius).col(0);
    return out;
}

}  // namespace wkl
