#include "wkl/hermgroup.hpp"

#include <cmath>

namespace wkl {

bool is_in_su(const CMatrix& g, const BlockSpec& s, double tol) {
    if (g.rows() != s.size() || g.cols() != s.size()) return false;
    CMatrix ip = indefinite_form(s);
    double scale = std::max(1.0, g.squaredNorm());
    if ((g.adjoint() * ip * g - ip).norm() > tol * scale) return false;
    return has_unit_det(g, tol * scale);
}

bool has_unit_det(const CMatrix& g, double tol) {
    if (g.rows() != g.cols()) return false;
    return std::abs(g.determinant() - Complex(1.0)) <= tol;
}

GroupElement GroupElement::su(const CMatrix& m, const BlockSpec& s) {
    require_finite(m, "GroupElement::su");
    if (!is_in_su(m, s))
        throw Error(ErrorKind::InvalidArgument, "matrix fails the SU(p,q) membership certificate");
    return GroupElement(m, GroupTag::SU, s);
}

GroupElement GroupElement::complexified(const CMatrix& m, const BlockSpec& s) {
    require_finite(m, "GroupElement::complexified");
    if (m.rows() != s.size() || m.cols() != s.size())
        throw Error(ErrorKind::InvalidArgument, "matrix size does not match block spec");
    if (!has_unit_det(m, TOL_MEMBERSHIP * std::max(1.0, m.squaredNorm())))
        throw Error(ErrorKind::InvalidArgument, "matrix fails the det = 1 certificate");
    return GroupElement(m, GroupTag::ComplexifiedSU, s);
}

GroupElement GroupElement::sl2c(const CMatrix& m) {
    GroupElement g = complexified(m, BlockSpec{1, 1});
    g.tag_ = GroupTag::SL2C;
    return g;
}

GroupElement GroupElement::identity(const BlockSpec& s, GroupTag tag) {
    return GroupElement(CMatrix::Identity(s.size(), s.size()), tag, s);
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
    if (!(spec_ == other.spec_))
        throw Error(ErrorKind::InvalidArgument, "product of elements from different groups");
    GroupTag t = (tag_ == GroupTag::SU && other.tag_ == GroupTag::SU) ? GroupTag::SU : tag_;
    if (t == GroupTag::SU && other.tag_ != GroupTag::SU) t = other.tag_;
    return GroupElement(mat_ * other.mat_, t, spec_);
}

GroupElement GroupElement::inverse() const {
    return GroupElement(mat_.inverse(), tag_, spec_);
}

CMatrix HCTriple::reassemble(const BlockSpec& s) const {
    return exp_pplus(zplus, s) * k * exp_pminus(zminus, s);
}

bool DomainPoint::contains(const CMatrix& z) {
    if (!z.allFinite()) return false;
    const auto q = z.cols();
    CMatrix m = CMatrix::Identity(q, q) - z.adjoint() * z;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() > 0.0;
}

DomainPoint DomainPoint::make(const CMatrix& z) {
    if (!contains(z))
        throw Error(ErrorKind::InvalidArgument, "point outside the bounded domain (I - Z*Z not positive)");
    return DomainPoint(z);
}

DomainPoint DomainPoint::origin(const BlockSpec& s) { return DomainPoint(CMatrix::Zero(s.p, s.q)); }

CMatrix exp_pplus(const CMatrix& z, const BlockSpec& s) {
    CMatrix r = CMatrix::Identity(s.size(), s.size());
    r.topRightCorner(s.p, s.q) = z;
    return r;
}

CMatrix exp_pminus(const CMatrix& y, const BlockSpec& s) {
    CMatrix r = CMatrix::Identity(s.size(), s.size());
    r.bottomLeftCorner(s.q, s.p) = y;
    return r;
}

CMatrix sigma_group(const CMatrix& g, const BlockSpec& s) {
    return indef_adjoint(g, s).inverse();
}

CMatrix theta_group(const CMatrix& g, const BlockSpec& s) {
    CMatrix r = g;
    r.topRightCorner(s.p, s.q) *= -1.0;
    r.bottomLeftCorner(s.q, s.p) *= -1.0;
    return r;
}

CMatrix sigma_alg(const CMatrix& x, const BlockSpec& s) { return -indef_adjoint(x, s); }

CMatrix theta_alg(const CMatrix& x, const BlockSpec& s) { return theta_group(x, s); }

CMatrix k_star(const CMatrix& k, const BlockSpec& s) { return sigma_group(k, s).inverse(); }

CMatrix z0_element(const BlockSpec& s) {
    const double n = s.size();
    CMatrix r = CMatrix::Zero(s.size(), s.size());
    for (int i = 0; i < s.p; ++i) r(i, i) = I_UNIT * (s.q / n);
    for (int i = s.p; i < s.size(); ++i) r(i, i) = -I_UNIT * (s.p / n);
    return r;
}

HCTriple hc_factorize(const CMatrix& g, const BlockSpec& s) {
    require_square(g, "hc_factorize");
    CMatrix a = block_a(g, s), b = block_b(g, s), c = block_c(g, s), d = block_d(g, s);
    Eigen::JacobiSVD<CMatrix> svd(d);
    const auto& sv = svd.singularValues();
    double smax = sv(0), smin = sv(sv.size() - 1);
    if (!(smin > 1e-300) || smax / smin > 1e8)
        throw Error(ErrorKind::NotInDenseCell, "hc_factorize: lower-right block singular");
    Eigen::PartialPivLU<CMatrix> lu(d);
    CMatrix dinv = lu.inverse();
    HCTriple t;
    t.zplus = b * dinv;
    t.zminus = dinv * c;
    t.k = block_diag(a - b * dinv * c, d);
    return t;
}

HCTriple hc_factorize(const GroupElement& g) { return hc_factorize(g.mat(), g.spec()); }

CMatrix mobius(const CMatrix& g, const CMatrix& z, const BlockSpec& s) {
    CMatrix num = block_a(g, s) * z + block_b(g, s);
    CMatrix den = block_c(g, s) * z + block_d(g, s);
    Eigen::FullPivLU<CMatrix> lu(den);
    if (!lu.isInvertible())
        throw Error(ErrorKind::InvalidArgument, "domain_action: CZ + D singular");
    return num * lu.inverse();
}

DomainPoint domain_action(const GroupElement& g, const DomainPoint& z) {
    if (g.tag() != GroupTag::SU && !is_in_su(g.mat(), g.spec()))
        throw Error(ErrorKind::InvalidArgument, "domain_action requires an element of G");
    return DomainPoint::make(mobius(g.mat(), z.z(), g.spec()));
}

CMatrix universal_cocycle(const CMatrix& g, const CMatrix& z, const BlockSpec& s) {
    return hc_factorize(g * exp_pplus(z, s), s).k;
}

GroupElement universal_cocycle(const GroupElement& g, const DomainPoint& z) {
    return GroupElement::complexified(universal_cocycle(g.mat(), z.z(), g.spec()), g.spec());
}

CMatrix universal_kernel(const CMatrix& z, const CMatrix& w, const BlockSpec& s) {
    CMatrix m = CMatrix::Identity(s.size(), s.size());
    m.topRightCorner(s.p, s.q) = z;
    m.bottomLeftCorner(s.q, s.p) = -w.adjoint();
    m.bottomRightCorner(s.q, s.q) = CMatrix::Identity(s.q, s.q) - w.adjoint() * z;
    return hc_factorize(m, s).k;
}

GroupElement universal_kernel(const DomainPoint& z, const DomainPoint& w, const BlockSpec& s) {
    return GroupElement::complexified(universal_kernel(z.z(), w.z(), s), s);
}

static CMatrix inv_sqrt_hpd(const CMatrix& h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    RVector d = es.eigenvalues().array().rsqrt();
    return es.eigenvectors() * d.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix domain_section(const CMatrix& z, const BlockSpec& s) {
    if (!DomainPoint::contains(z))
        throw Error(ErrorKind::InvalidArgument, "domain_section: point outside the domain");
    CMatrix ip = CMatrix::Identity(s.p, s.p), iq = CMatrix::Identity(s.q, s.q);
    CMatrix a = inv_sqrt_hpd(ip - z * z.adjoint());
    CMatrix d = inv_sqrt_hpd(iq - z.adjoint() * z);
    CMatrix g(s.size(), s.size());
    g.topLeftCorner(s.p, s.p) = a;
    g.topRightCorner(s.p, s.q) = z * d;
    g.bottomLeftCorner(s.q, s.p) = z.adjoint() * a;
    g.bottomRightCorner(s.q, s.q) = d;
    return g;
}

static CMatrix gaussian_matrix(Rng& rng, int r, int c) {
    std::normal_distribution<double> nd(0.0, 1.0);
    CMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = Complex(nd(rng), nd(rng));
    return m;
}

CMatrix random_lie_algebra(Rng& rng, const BlockSpec& s, double max_norm) {
    const int n = s.size();
    CMatrix m = gaussian_matrix(rng, n, n);
    CMatrix x = 0.5 * (m + sigma_alg(m, s));
    x -= (x.trace() / static_cast<double>(n)) * CMatrix::Identity(n, n);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    double nrm = x.norm();
    if (nrm > 0.0) x *= max_norm * ud(rng) / nrm;
    return x;
}

CMatrix random_group(Rng& rng, const BlockSpec& s, double max_norm) {
    return mat_exp(random_lie_algebra(rng, s, max_norm));
}

CMatrix random_domain_point(Rng& rng, const BlockSpec& s, double max_radius) {
    CMatrix z = gaussian_matrix(rng, s.p, s.q);
    Eigen::JacobiSVD<CMatrix> svd(z);
    double op = svd.singularValues()(0);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    if (op > 0.0) z *= max_radius * std::sqrt(ud(rng)) / op;
    return z;
}

CMatrix random_k_complex(Rng& rng, const BlockSpec& s, double scale) {
    CMatrix a = gaussian_matrix(rng, s.p, s.p) * scale;
    CMatrix d = gaussian_matrix(rng, s.q, s.q) * scale;
    CMatrix x = block_diag(a, d);
    x -= (x.trace() / static_cast<double>(s.size())) * CMatrix::Identity(s.size(), s.size());
    return mat_exp(x);
}

static CMatrix haar_unitary(Rng& rng, int n) {
    CMatrix z = gaussian_matrix(rng, n, n);
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ();
    CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
        Complex d = r(i, i);
        double ad = std::abs(d);
        if (ad > 0.0) q.col(i) *= d / ad;
    }
    return q;
}

CMatrix random_k_compact(Rng& rng, const BlockSpec& s) {
    CMatrix a = haar_unitary(rng, s.p);
    CMatrix d = haar_unitary(rng, s.q);
    Complex det = a.determinant() * d.determinant();
    d.col(0) *= std::conj(det);
    return block_diag(a, d);
}

}  // namespace wkl
