#include "wkl/matcore.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace wkl {

const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NotInDenseCell: return "NotInDenseCell";
        case ErrorKind::NotInCell: return "NotInCell";
        case ErrorKind::Inconclusive: return "Inconclusive";
        case ErrorKind::NotUnipotent: return "NotUnipotent";
        case ErrorKind::OutsideSubspace: return "OutsideSubspace";
        case ErrorKind::Divergent: return "Divergent";
        case ErrorKind::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

CMatrix make_matrix(int rows, int cols, const std::vector<Complex>& entries) {
    if (rows <= 0 || cols <= 0)
        throw Error(ErrorKind::InvalidArgument, "matrix dimensions must be positive");
    if (static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) != entries.size())
        throw Error(ErrorKind::InvalidArgument, "entry count does not match rows*cols");
    CMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = entries[static_cast<std::size_t>(i * cols + j)];
    require_finite(m, "make_matrix");
    return m;
}

CMatrix make_matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    std::vector<Complex> flat;
    int cols = -1;
    for (const auto& r : rows) {
        if (cols >= 0 && static_cast<int>(r.size()) != cols)
            throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
        cols = static_cast<int>(r.size());
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return make_matrix(static_cast<int>(rows.size()), cols, flat);
}

void require_finite(const CMatrix& m, const char* what) {
    if (!m.allFinite())
        throw Error(ErrorKind::InvalidArgument, std::string(what) + ": non-finite entry");
}

void require_square(const CMatrix& m, const char* what) {
    if (m.rows() != m.cols())
        throw Error(ErrorKind::InvalidArgument, std::string(what) + ": matrix not square");
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

double rel_diff(const CMatrix& a, const CMatrix& b) {
    double scale = std::max(1.0, a.norm());
    return (a - b).norm() / scale;
}

int nilpotency_order(const CMatrix& x, double tol) {
    require_square(x, "nilpotency_order");
    const int n = static_cast<int>(x.rows());
    const double s = std::max(1.0, x.norm());
    CMatrix p = x;
    double sk = s;
    for (int k = 1; k <= n; ++k) {
        if (p.norm() <= tol * sk) return k;
        p = p * x;
        sk *= s;
    }
    return 0;
}

CMatrix mat_exp_nilpotent(const CMatrix& x, int order) {
    require_square(x, "mat_exp_nilpotent");
    const auto n = x.rows();
    CMatrix result = CMatrix::Identity(n, n);
    CMatrix term = CMatrix::Identity(n, n);
    for (int k = 1; k < order; ++k) {
        term = term * x / static_cast<double>(k);
        result += term;
    }
    return result;
}

CMatrix mat_exp(const CMatrix& x) {
    require_square(x, "mat_exp");
    require_finite(x, "mat_exp");
    int order = nilpotency_order(x);
    if (order > 0) return mat_exp_nilpotent(x, order);
    CMatrix r = x.exp();
    return r;
}

CMatrix mat_log_unipotent(const CMatrix& u) {
    require_square(u, "mat_log_unipotent");
    require_finite(u, "mat_log_unipotent");
    const auto n = u.rows();
    CMatrix nm = u - CMatrix::Identity(n, n);
    const double s = std::max(1.0, nm.norm());
    CMatrix p = CMatrix::Identity(n, n);
    for (int k = 0; k < n; ++k) p = p * nm;
    if (p.norm() > TOL_SPECTRUM * std::pow(s, static_cast<double>(n)))
        throw Error(ErrorKind::NotUnipotent, "mat_log_unipotent: spectrum not clustered at 1");
    CMatrix result = CMatrix::Zero(n, n);
    CMatrix power = nm;
    for (int k = 1; k < n; ++k) {
        double sign = (k % 2 == 1) ? 1.0 : -1.0;
        result += sign * power / static_cast<double>(k);
        power = power * nm;
    }
    return result;
}

CMatrix mat_log_hpd(const CMatrix& h) {
    require_square(h, "mat_log_hpd");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    const RVector& ev = es.eigenvalues();
    if (ev.minCoeff() <= 0.0)
        throw Error(ErrorKind::InvalidArgument, "mat_log_hpd: matrix not positive definite");
    RVector lg = ev.array().log();
    return es.eigenvectors() * lg.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix indefinite_form(const BlockSpec& s) {
    CMatrix m = CMatrix::Identity(s.size(), s.size());
    for (int i = s.p; i < s.size(); ++i) m(i, i) = -1.0;
    return m;
}

CMatrix indef_adjoint(const CMatrix& x, const BlockSpec& s) {
    require_square(x, "indef_adjoint");
    if (x.rows() != s.size())
        throw Error(ErrorKind::InvalidArgument, "indef_adjoint: size does not match block spec");
    CMatrix r = x.adjoint();
    r.topRightCorner(s.p, s.q) *= -1.0;
    r.bottomLeftCorner(s.q, s.p) *= -1.0;
    return r;
}

static void check_blocks(const CMatrix& g, const BlockSpec& s) {
    if (g.rows() != s.size() || g.cols() != s.size())
        throw Error(ErrorKind::InvalidArgument, "block extraction: size does not match block spec");
}

CMatrix block_a(const CMatrix& g, const BlockSpec& s) { check_blocks(g, s); return g.topLeftCorner(s.p, s.p); }
CMatrix block_b(const CMatrix& g, const BlockSpec& s) { check_blocks(g, s); return g.topRightCorner(s.p, s.q); }
CMatrix block_c(const CMatrix& g, const BlockSpec& s) { check_blocks(g, s); return g.bottomLeftCorner(s.q, s.p); }
CMatrix block_d(const CMatrix& g, const BlockSpec& s) { check_blocks(g, s); return g.bottomRightCorner(s.q, s.q); }

CMatrix block_diag(const CMatrix& a, const CMatrix& d) {
    const auto p = a.rows(), q = d.rows();
    CMatrix r = CMatrix::Zero(p + q, p + q);
    r.topLeftCorner(p, p) = a;
    r.bottomRightCorner(q, q) = d;
    return r;
}

CMatrix upper_block(const CMatrix& b, const BlockSpec& s) {
    CMatrix r = CMatrix::Zero(s.size(), s.size());
    r.topRightCorner(s.p, s.q) = b;
    return r;
}

CMatrix lower_block(const CMatrix& c, const BlockSpec& s) {
    CMatrix r = CMatrix::Zero(s.size(), s.size());
    r.bottomLeftCorner(s.q, s.p) = c;
    return r;
}

double off_block_diag_norm(const CMatrix& g, const BlockSpec& s) {
    return std::hypot(block_b(g, s).norm(), block_c(g, s).norm());
}

}  // namespace wkl
