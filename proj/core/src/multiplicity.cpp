#include "wkl/multiplicity.hpp"

#include <cmath>
#include <limits>

namespace wkl {

RankResult numerical_rank(const Eigen::VectorXd& sv, double rel_tol) {
    RankResult r;
    r.singular_values.assign(sv.data(), sv.data() + sv.size());
    const double top = sv.size() > 0 ? sv(0) : 0.0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > rel_tol * top) r.rank = static_cast<int>(i) + 1;
    if (r.rank == 0) {
        r.gap = 0.0;
    } else if (r.rank < sv.size()) {
        const double next = sv(r.rank);
        r.gap = next > 0.0 ? sv(r.rank - 1) / next : std::numeric_limits<double>::infinity();
    } else {
        r.gap = std::numeric_limits<double>::infinity();
    }
    return r;
}

RankResult section_rank(const FockSpace& f, const KRep& pi, int samples, int extra, std::uint64_t seed) {
    const BlockSpec s = pi.spec();
    const int d = pi.dim();
    Rng rng(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<CVector> etas;
    for (int i = 0; i < d; ++i) etas.push_back(CVector::Unit(d, i));
    for (int i = 0; i < extra; ++i) {
        CVector v(d);
        for (int j = 0; j < d; ++j) v(j) = Complex(nd(rng), nd(rng));
        etas.push_back(v);
    }
    std::vector<CMatrix> xs;
    for (int i = 0; i < samples; ++i) xs.push_back(random_group(rng, s, 1.0));

    const Eigen::Index len = f.indices().size();
    CMatrix m(static_cast<Eigen::Index>(samples) * d * len, static_cast<Eigen::Index>(etas.size()));
    for (std::size_t c = 0; c < etas.size(); ++c) {
        WhittakerKernel wk(f, pi, etas[c]);
        Eigen::Index row = 0;
        for (const CMatrix& x : xs)
            for (int j = 0; j < d; ++j) {
                m.col(static_cast<Eigen::Index>(c)).segment(row, len) = wk.t_lkt_eval(CVector::Unit(d, j), x).coeffs.conjugate();
                row += len;
            }
    }
    Eigen::JacobiSVD<CMatrix> svd(m);
    return numerical_rank(svd.singularValues());
}

CMatrix intertwiner_constraints(const FockSpace& f, const KRep& pi, int degree) {
    const RootDatum& rd = f.datum();
    const int nv = f.vars(), d = pi.dim();
    if (degree < 1 || degree > f.cap()) throw Error(ErrorKind::InvalidArgument, "intertwiner_constraints: degree out of range");
    const MultiIndexSet& set = f.indices();
    const int unknowns = set.degree_begin(degree + 1);
    const int sources = set.degree_begin(degree);
    std::vector<CMatrix> dpi;
    for (int k = 0; k < nv; ++k) {
        const CMatrix& y = rd.nil.yminus[static_cast<std::size_t>(k)];
        dpi.push_back(pi.differential(block_diag(block_a(y, rd.spec), block_d(y, rd.spec))));
    }
    CMatrix c = CMatrix::Zero(static_cast<Eigen::Index>(sources) * nv * d, static_cast<Eigen::Index>(unknowns) * d);
    const double rs = std::sqrt(f.scale());
    Eigen::Index row = 0;
    for (int a = 0; a < sources; ++a)
        for (int k = 0; k < nv; ++k) {
            MultiIndex up = set.at(a);
            up[static_cast<std::size_t>(k)] += 1;
            const int b = set.find(up);
            c.block(row, static_cast<Eigen::Index>(b) * d, d, d) += rs * CMatrix::Identity(d, d);
            c.block(row, static_cast<Eigen::Index>(a) * d, d, d) -= dpi[static_cast<std::size_t>(k)];
            row += d;
        }
    return c;
}

RankResult constraint_nullity(const FockSpace& f, const KRep& pi, int degree) {
    CMatrix c = intertwiner_constraints(f, pi, degree);
    const Eigen::Index n = c.cols();
    Eigen::JacobiSVD<CMatrix> svd(c, Eigen::ComputeFullV);
    Eigen::VectorXd sv = Eigen::VectorXd::Zero(n);
    sv.head(svd.singularValues().size()) = svd.singularValues();
    RankResult rk = numerical_rank(sv);
    // Report the nullity; the gap separates the smallest nonzero singular value from zero.
    RankResult r;
    r.rank = static_cast<int>(n) - rk.rank;
    r.singular_values = rk.singular_values;
    r.gap = rk.gap;
    return r;
}

CVector intertwiner_unknowns(const WhittakerKernel& wk, int degree) {
    const FockSpace& f = wk.fock();
    const int d = wk.rep().dim();
    const int unknowns = f.indices().degree_begin(degree + 1);
    CVector out(static_cast<Eigen::Index>(unknowns) * d);
    for (int a = 0; a < unknowns; ++a)
        out.segment(static_cast<Eigen::Index>(a) * d, d) = wk.a_eta(FockVector::monomial(f, f.indices().at(a)));
    return out;
}

}  // namespace wkl
