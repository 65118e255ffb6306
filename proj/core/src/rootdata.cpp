#include "wkl/rootdata.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace wkl {

namespace {

CMatrix unit(int n, int a, int b) {
    CMatrix m = CMatrix::Zero(n, n);
    m(a, b) = 1.0;
    return m;
}

RootLabel unit_label(int r, int j, int value) {
    RootLabel l(static_cast<std::size_t>(r), 0);
    l[static_cast<std::size_t>(j)] = value;
    return l;
}

bool is_zero_label(const RootLabel& l) {
    return std::all_of(l.begin(), l.end(), [](int c) { return c == 0; });
}

// Real Gram-Schmidt for (.|.); drops dependent candidates.
std::vector<CMatrix> orthonormalize(const RootDatum& rd, const std::vector<CMatrix>& cands, double tol = 1e-9) {
    std::vector<CMatrix> out;
    for (const auto& c : cands) {
        CMatrix v = c;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : out) v -= rd.real_pairing(v, u) * u;
        double n2 = rd.real_pairing(v, v);
        if (n2 > tol * tol) out.push_back(v / std::sqrt(n2));
    }
    return out;
}

}  // namespace

int label_sum(const RootLabel& l) {
    int s = 0;
    for (int c : l) s += c;
    return s;
}

bool is_positive_l_root(const RootLabel& l) {
    if (label_sum(l) != 0) return false;
    for (int c : l) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    return false;
}

bool in_lie_algebra(const CMatrix& x, const BlockSpec& s, double tol) {
    if (x.rows() != s.size() || x.cols() != s.size()) return false;
    double scale = std::max(1.0, x.norm());
    if ((sigma_alg(x, s) - x).norm() > tol * scale) return false;
    return std::abs(x.trace()) <= tol * scale;
}

Complex RootDatum::pairing(const CMatrix& a, const CMatrix& b) const {
    return form_gamma * (a * theta_alg(b, spec)).trace();
}

CMatrix RootDatum::project_mask(const CMatrix& m, const std::function<bool(const RootLabel&)>& keep) const {
    const int n = spec.size();
    CMatrix t = v_.adjoint() * m * v_;
    RootLabel l(static_cast<std::size_t>(rank));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int j = 0; j < rank; ++j)
                l[static_cast<std::size_t>(j)] = weights_[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] -
                                                 weights_[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
            if (!keep(l)) t(a, b) = 0.0;
        }
    return v_ * t * v_.adjoint();
}

CMatrix RootDatum::project(const CMatrix& m, const RootLabel& label) const {
    return project_mask(m, [&](const RootLabel& l) { return l == label; });
}

CMatrix RootDatum::project_if(const CMatrix& m, bool (*keep)(const RootLabel&)) const {
    return project_mask(m, keep);
}

CMatrix RootDatum::project_half(const CMatrix& m) const {
    return project_mask(m, [](const RootLabel& l) { return label_sum(l) == 1; });
}

CMatrix RootDatum::project_one(const CMatrix& m) const {
    return project_mask(m, [](const RootLabel& l) { return label_sum(l) == 2; });
}

CMatrix RootDatum::project_nj(const CMatrix& m, int j) const {
    return project_mask(m, [j](const RootLabel& l) {
        int s = 0;
        for (int i = 0; i < j; ++i) s += l[static_cast<std::size_t>(i)];
        return s > 0;
    });
}

CMatrix RootDatum::apply_j(const CMatrix& z) const {
    return -commutator(E, theta_alg(z, spec)) / j_beta;
}

Complex RootDatum::hermitian(const CMatrix& z, const CMatrix& w) const {
    return 2.0 * (pairing(z, w) - I_UNIT * pairing(apply_j(z), w));
}

NCCoords RootDatum::nc_coords(const CMatrix& m) const {
    const int d = half_dim(), o = one_dim();
    Eigen::Map<const CVector> vec(m.data(), m.size());
    CVector c = nc_pinv_ * vec;
    NCCoords out;
    out.plus = c.head(d);
    out.minus = c.segment(d, d);
    out.center = c.tail(o);
    CMatrix back = nc_element(out.plus, out.minus, out.center);
    out.residual = (back - m).norm() / std::max(1.0, m.norm());
    return out;
}

CMatrix RootDatum::nc_element(const CVector& plus, const CVector& minus, const CVector& center) const {
    const int n = spec.size();
    CMatrix m = CMatrix::Zero(n, n);
    for (int k = 0; k < half_dim(); ++k) {
        m += plus(k) * nil.yplus[static_cast<std::size_t>(k)];
        m += minus(k) * nil.yminus[static_cast<std::size_t>(k)];
    }
    for (int l = 0; l < one_dim(); ++l) m += center(l) * nil.basis_one[static_cast<std::size_t>(l)];
    return m;
}

RootDatum build_root_datum(const BlockSpec& spec) {
    if (spec.p < 1 || spec.q < 1 || spec.p < spec.q)
        throw Error(ErrorKind::Unsupported, "build_root_datum: need p >= q >= 1");
    RootDatum rd;
    rd.spec = spec;
    const int p = spec.p, q = spec.q, n = spec.size(), r = q;
    rd.rank = r;

    for (int j = 0; j < r; ++j) {
        SL2Triple t;
        t.index = j + 1;
        t.e = unit(n, j, p + j);
        t.f = unit(n, p + j, j);
        t.h = unit(n, j, j) - unit(n, p + j, p + j);
        rd.triples.push_back(t);
        rd.x.push_back(t.e + t.f);
    }

    rd.cayley = CMatrix::Identity(n, n);
    for (const auto& t : rd.triples) rd.cayley = rd.cayley * mat_exp(-(M_PI / 4.0) * (t.e - t.f));

    rd.E = CMatrix::Zero(n, n);
    for (const auto& t : rd.triples) rd.E += I_UNIT * (t.h - t.e + t.f);
    rd.F = theta_alg(rd.E, spec);
    rd.form_gamma = static_cast<double>(r) / (rd.E * rd.F).trace().real();

    // Common eigenbasis of the commuting real symmetric x_j.
    RMatrix combo = RMatrix::Zero(n, n);
    for (int j = 0; j < r; ++j) combo += (1.0 + 0.6180339887 * j / r) * rd.x[static_cast<std::size_t>(j)].real();
    Eigen::SelfAdjointEigenSolver<RMatrix> es(combo);
    RMatrix v = es.eigenvectors();
    rd.v_ = v.cast<Complex>();
    rd.weights_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(r), 0));
    for (int a = 0; a < n; ++a)
        for (int j = 0; j < r; ++j) {
            double w = v.col(a).dot(rd.x[static_cast<std::size_t>(j)].real() * v.col(a));
            int snapped = static_cast<int>(std::lround(w));
            if (std::abs(w - snapped) > 1e-6)
                throw Error(ErrorKind::InvalidArgument, "build_root_datum: eigenvalue off the integer grid");
            rd.weights_[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] = snapped;
        }

    std::map<RootLabel, int> counts;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            RootLabel l(static_cast<std::size_t>(r));
            for (int j = 0; j < r; ++j)
                l[static_cast<std::size_t>(j)] = rd.weights_[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] -
                                                 rd.weights_[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
            counts[l] += 1;
        }
    for (const auto& [label, c] : counts) {
        if (is_zero_label(label)) {
            rd.centralizer_dim = c - 1;
            continue;
        }
        rd.restricted_table.push_back({label, c});
    }

    RhoConstants rc = rho_constants(rd);
    rd.rho_n = rc.rho_n;
    rd.rho_l = rc.rho_l;
    rd.rho = rc.rho;

    // Real spanning set of g.
    std::vector<CMatrix> span;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            CMatrix m = unit(n, a, b);
            span.push_back(0.5 * (m + sigma_alg(m, spec)));
            CMatrix im = I_UNIT * m;
            span.push_back(0.5 * (im + sigma_alg(im, spec)));
        }
    for (auto& m : span) m -= (m.trace() / static_cast<double>(n)) * CMatrix::Identity(n, n);

    // n_1/2 = sum_j g^{lambda_j/2}; J and the complex basis per block.
    rd.j_beta = 1.0;
    bool beta_set = false;
    for (int j = 0; j < r; ++j) {
        RootLabel lab = unit_label(r, j, 1);
        std::vector<CMatrix> proj;
        for (const auto& m : span) proj.push_back(rd.project(m, lab));
        std::vector<CMatrix> real_basis = orthonormalize(rd, proj);
        if (real_basis.empty()) continue;
        if (!beta_set) {
            const CMatrix& b0 = real_basis.front();
            CMatrix jr = commutator(rd.E, theta_alg(b0, spec));
            CMatrix jr2 = commutator(rd.E, theta_alg(jr, spec));
            double beta2 = -rd.real_pairing(jr2, b0) / rd.real_pairing(b0, b0);
            rd.j_beta = std::sqrt(beta2);
            // Orientation: (z - iJz)/2 must have no p^- component.
            CMatrix yp = 0.5 * (b0 - I_UNIT * rd.apply_j(b0));
            if (block_c(yp, spec).norm() > 1e-8) rd.j_beta = -rd.j_beta;
            beta_set = true;
        }
        std::vector<CMatrix> ubasis;
        for (const auto& cand : real_basis) {
            CMatrix w = cand;
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& u : ubasis) {
                    Complex c = rd.hermitian(w, u);
                    w -= c.real() * u + c.imag() * rd.apply_j(u);
                }
            double n2 = rd.hermitian(w, w).real();
            if (n2 > 1e-16) ubasis.push_back(w / std::sqrt(n2));
        }
        for (const auto& u : ubasis) {
            rd.nil.complex_basis.push_back(u);
            rd.nil.complex_block.push_back(j + 1);
            rd.nil.basis_half.push_back(u);
            rd.nil.basis_half.push_back(rd.apply_j(u));
            rd.nil.yplus.push_back(0.5 * (u - I_UNIT * rd.apply_j(u)));
            rd.nil.yminus.push_back(0.5 * (u + I_UNIT * rd.apply_j(u)));
        }
    }
    const int hd = static_cast<int>(rd.nil.basis_half.size());
    rd.nil.jmat = RMatrix::Zero(hd, hd);
    for (int b = 0; b < hd; ++b) {
        CMatrix jb = rd.apply_j(rd.nil.basis_half[static_cast<std::size_t>(b)]);
        for (int a = 0; a < hd; ++a) {
            const CMatrix& ba = rd.nil.basis_half[static_cast<std::size_t>(a)];
            rd.nil.jmat(a, b) = rd.real_pairing(jb, ba) / rd.real_pairing(ba, ba);
        }
    }

    const int cd = rd.half_dim();
    rd.nil.hermitian_form = CMatrix::Zero(cd, cd);
    for (int a = 0; a < cd; ++a)
        for (int b = 0; b < cd; ++b)
            rd.nil.hermitian_form(a, b) = rd.hermitian(rd.nil.complex_basis[static_cast<std::size_t>(a)],
                                                       rd.nil.complex_basis[static_cast<std::size_t>(b)]);

    // n_1: E_j directions first, then the mixed root spaces.
    std::vector<CMatrix> one_cands;
    for (int j = 0; j < r; ++j) {
        const auto& t = rd.triples[static_cast<std::size_t>(j)];
        one_cands.push_back(I_UNIT * (t.h - t.e + t.f));
    }
    for (const auto& m : span) one_cands.push_back(rd.project_one(m));
    rd.nil.basis_one = orthonormalize(rd, one_cands);

    const int d = rd.half_dim(), o = rd.one_dim();
    CMatrix bvec(n * n, 2 * d + o);
    for (int k = 0; k < d; ++k) {
        bvec.col(k) = Eigen::Map<const CVector>(rd.nil.yplus[static_cast<std::size_t>(k)].data(), n * n);
        bvec.col(d + k) = Eigen::Map<const CVector>(rd.nil.yminus[static_cast<std::size_t>(k)].data(), n * n);
    }
    for (int l = 0; l < o; ++l)
        bvec.col(2 * d + l) = Eigen::Map<const CVector>(rd.nil.basis_one[static_cast<std::size_t>(l)].data(), n * n);
    rd.nc_pinv_ = bvec.completeOrthogonalDecomposition().pseudoInverse();
    return rd;
}

std::shared_ptr<const RootDatum> root_datum(const BlockSpec& spec) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const RootDatum>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(spec.p, spec.q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto rd = std::make_shared<const RootDatum>(build_root_datum(spec));
    cache.emplace(key, rd);
    return rd;
}

std::map<RootLabel, CMatrix> restricted_decompose(const CMatrix& x, const RootDatum& rd) {
    if (!in_lie_algebra(x, rd.spec))
        throw Error(ErrorKind::OutsideSubspace, "restricted_decompose: X is not in g");
    std::map<RootLabel, CMatrix> out;
    out[RootLabel(static_cast<std::size_t>(rd.rank), 0)] = rd.project(x, RootLabel(static_cast<std::size_t>(rd.rank), 0));
    for (const auto& root : rd.restricted_table) out[root.label] = rd.project(x, root.label);
    return out;
}

CMatrix complex_structure_apply(const CMatrix& z, const RootDatum& rd) {
    CMatrix ph = rd.project_half(z);
    if ((ph - z).norm() > 1e-10 * std::max(1.0, z.norm()))
        throw Error(ErrorKind::OutsideSubspace, "complex_structure_apply: z has components outside n_1/2");
    return rd.apply_j(z);
}

RhoConstants rho_constants(const RootDatum& rd) {
    RhoConstants rc;
    const auto r = static_cast<std::size_t>(rd.rank);
    rc.rho_n.assign(r, 0.0);
    rc.rho_l.assign(r, 0.0);
    rc.rho.assign(r, 0.0);
    for (const auto& root : rd.restricted_table) {
        bool in_n = label_sum(root.label) > 0;
        bool in_l_pos = is_positive_l_root(root.label);
        for (std::size_t j = 0; j < r; ++j) {
            double c = 0.5 * root.multiplicity * root.label[j];
            if (in_n) rc.rho_n[j] += c;
            if (in_l_pos) rc.rho_l[j] += c;
        }
    }
    for (std::size_t j = 0; j < r; ++j) rc.rho[j] = rc.rho_n[j] + rc.rho_l[j];
    return rc;
}

double l_density_w(const std::vector<double>& t, const RootDatum& rd) {
    if (static_cast<int>(t.size()) != rd.rank)
        throw Error(ErrorKind::InvalidArgument, "l_density_w: wrong number of torus coordinates");
    double w = 1.0;
    for (const auto& root : rd.restricted_table) {
        if (!is_positive_l_root(root.label)) continue;
        double a = 0.0;
        for (std::size_t j = 0; j < t.size(); ++j) a += root.label[j] * t[j];
        w *= std::pow(std::sinh(a), root.multiplicity);
    }
    return w;
}

}  // namespace wkl
