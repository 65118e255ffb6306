#pragma once
// Brute-force reference computations used only by the tests.

#include <cmath>
#include <map>
#include <vector>

#include "wkl/rootdata.hpp"

namespace oracle {

using wkl::CMatrix;
using wkl::Complex;

// Real basis of su(p,q) as a list of matrices.
inline std::vector<CMatrix> su_basis(const wkl::BlockSpec& s) {
    const int n = s.size();
    std::vector<CMatrix> out;
    auto push_indep = [&](CMatrix m) {
        // Real Gram-Schmidt for the Frobenius real inner product.
        for (const auto& b : out) m -= (b.conjugate().cwiseProduct(m)).sum().real() * b;
        double nr = m.norm();
        if (nr > 1e-9) out.push_back(m / nr);
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            CMatrix e = CMatrix::Zero(n, n);
            e(a, b) = 1.0;
            for (Complex c : {Complex(1, 0), Complex(0, 1)}) {
                CMatrix m = 0.5 * (c * e + wkl::sigma_alg(c * e, s));
                m -= (m.trace() / static_cast<double>(n)) * CMatrix::Identity(n, n);
                push_indep(m);
            }
        }
    return out;
}

// Matrix of ad(h) on the real basis (h real semisimple in a).
inline wkl::RMatrix ad_matrix(const CMatrix& h, const std::vector<CMatrix>& basis) {
    const int m = static_cast<int>(basis.size());
    wkl::RMatrix out(m, m);
    for (int b = 0; b < m; ++b) {
        CMatrix img = wkl::commutator(h, basis[static_cast<std::size_t>(b)]);
        for (int a = 0; a < m; ++a)
            out(a, b) = (basis[static_cast<std::size_t>(a)].conjugate().cwiseProduct(img)).sum().real();
    }
    return out;
}

// Joint eigenvalue multiset of ad(x_1..x_r) on g, keyed by integer label.
inline std::map<std::vector<int>, int> ad_spectrum(const wkl::RootDatum& rd) {
    auto basis = su_basis(rd.spec);
    CMatrix h = CMatrix::Zero(rd.spec.size(), rd.spec.size());
    std::vector<double> w;
    for (int j = 0; j < rd.rank; ++j) {
        double wj = std::pow(10.0, j);
        w.push_back(wj);
        h += wj * rd.x[static_cast<std::size_t>(j)];
    }
    wkl::RMatrix ad = ad_matrix(h, basis);
    Eigen::EigenSolver<wkl::RMatrix> es(ad);
    std::map<std::vector<int>, int> out;
    for (int i = 0; i < ad.rows(); ++i) {
        double ev = es.eigenvalues()(i).real();
        // Decode ev = sum_j c_j 10^j with c_j in [-2,2].
        std::vector<int> lab(static_cast<std::size_t>(rd.rank));
        double rest = ev;
        for (int j = rd.rank - 1; j >= 0; --j) {
            int c = static_cast<int>(std::lround(rest / w[static_cast<std::size_t>(j)]));
            lab[static_cast<std::size_t>(j)] = c;
            rest -= c * w[static_cast<std::size_t>(j)];
        }
        out[lab] += 1;
    }
    return out;
}

// Moore's table for SU(p,q), p >= q: roots lambda_i (mult 1), (lambda_i +- lambda_j)/2
// (mult 2), and lambda_i/2 (mult 2(p-q)) when p > q. Labels in units of lambda/2.
inline std::map<std::vector<int>, int> moore_table(const wkl::BlockSpec& s) {
    const int r = s.q;
    std::map<std::vector<int>, int> t;
    auto lab = [r](std::initializer_list<std::pair<int, int>> entries) {
        std::vector<int> l(static_cast<std::size_t>(r), 0);
        for (auto [j, c] : entries) l[static_cast<std::size_t>(j)] = c;
        return l;
    };
    for (int i = 0; i < r; ++i) {
        t[lab({{i, 2}})] = 1;
        t[lab({{i, -2}})] = 1;
        if (s.p > s.q) {
            t[lab({{i, 1}})] = 2 * (s.p - s.q);
            t[lab({{i, -1}})] = 2 * (s.p - s.q);
        }
        for (int j = i + 1; j < r; ++j)
            for (int a : {1, -1})
                for (int b : {1, -1}) t[lab({{i, a}, {j, b}})] = 2;
    }
    return t;
}

}  // namespace oracle
