#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "wkl/hermgroup.hpp"

namespace wkl {

struct SL2Triple {
    CMatrix h, e, f;
    int index = 0;
};

// label[j] = alpha(x_j), i.e. the coefficients of alpha in units of lambda_j / 2.
using RootLabel = std::vector<int>;

struct RestrictedRoot {
    RootLabel label;
    int multiplicity = 0;
};

struct NilradicalBasis {
    std::vector<CMatrix> basis_half;     // real basis u_1, J u_1, u_2, J u_2, ...
    std::vector<CMatrix> basis_one;      // real basis of n_1, orthonormal for (.|.)
    RMatrix jmat;                        // J in basis_half coordinates
    CMatrix hermitian_form;              // Gram matrix of <.,.> on complex_basis
    std::vector<CMatrix> complex_basis;  // u_k, orthonormal for <.,.>
    std::vector<int> complex_block;      // j with u_k in g^{lambda_j / 2}
    std::vector<CMatrix> yplus;          // (u_k - i J u_k) / 2, in k_C + p^+
    std::vector<CMatrix> yminus;         // (u_k + i J u_k) / 2, in k_C + p^-
};

// Coordinates of an element of n_C on {yplus_k} u {yminus_k} u basis_one.
struct NCCoords {
    CVector plus;
    CVector minus;
    CVector center;
    double residual = 0.0;
};

class RootDatum {
public:
    BlockSpec spec;
    int rank = 0;
    std::vector<SL2Triple> triples;
    std::vector<CMatrix> x;
    CMatrix cayley;
    CMatrix E, F;
    double form_gamma = 0.0;   // (X|Y) = gamma tr(X theta Y)
    double j_beta = 0.0;       // ad(E) theta = -beta J on n_1/2
    std::vector<RestrictedRoot> restricted_table;
    int centralizer_dim = 0;   // dim of m + a
    std::vector<double> rho_n, rho_l, rho;
    NilradicalBasis nil;

    int half_dim() const { return static_cast<int>(nil.complex_basis.size()); }
    int one_dim() const { return static_cast<int>(nil.basis_one.size()); }
    bool tube_type() const { return half_dim() == 0; }

    // Complex-bilinear extension of the normalized form.
    Complex pairing(const CMatrix& a, const CMatrix& b) const;
    double real_pairing(const CMatrix& a, const CMatrix& b) const { return pairing(a, b).real(); }

    CMatrix project(const CMatrix& m, const RootLabel& label) const;
    CMatrix project_if(const CMatrix& m, bool (*keep)(const RootLabel&)) const;
    CMatrix project_half(const CMatrix& m) const;
    CMatrix project_one(const CMatrix& m) const;
    CMatrix project_nj(const CMatrix& m, int j) const;  // j is 1-based

    // J extended complex-linearly; no subspace check.
    CMatrix apply_j(const CMatrix& z) const;
    // <z,w> = 2[(z|w) - i(Jz|w)] at central-character scale 1.
    Complex hermitian(const CMatrix& z, const CMatrix& w) const;

    NCCoords nc_coords(const CMatrix& m) const;
    CMatrix nc_element(const CVector& plus, const CVector& minus, const CVector& center) const;

    std::vector<int> weights_of(int basis_index) const { return weights_[static_cast<std::size_t>(basis_index)]; }

private:
    friend RootDatum build_root_datum(const BlockSpec& spec);
    CMatrix v_;  // common orthogonal eigenbasis of the x_j
    std::vector<std::vector<int>> weights_;
    CMatrix nc_pinv_;  // pseudo-inverse of the vectorized n_C basis
    CMatrix project_mask(const CMatrix& m, const std::function<bool(const RootLabel&)>& keep) const;
};

RootDatum build_root_datum(const BlockSpec& spec);
// Process-wide cache; the returned datum is immutable.
std::shared_ptr<const RootDatum> root_datum(const BlockSpec& spec);

std::map<RootLabel, CMatrix> restricted_decompose(const CMatrix& x, const RootDatum& rd);
CMatrix complex_structure_apply(const CMatrix& z, const RootDatum& rd);

struct RhoConstants {
    std::vector<double> rho_n, rho_l, rho;
};
RhoConstants rho_constants(const RootDatum& rd);

// Product of sinh(alpha(H))^mult over positive roots of l, H = sum t_j x_j.
double l_density_w(const std::vector<double>& t, const RootDatum& rd);

int label_sum(const RootLabel& l);
bool is_positive_l_root(const RootLabel& l);
bool in_lie_algebra(const CMatrix& x, const BlockSpec& s, double tol = 1e-10);

}  // namespace wkl
