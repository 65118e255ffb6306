#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

#include "wkl/error.hpp"

namespace wkl {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double TOL_FACTOR = 1e-10;
inline constexpr double TOL_SPECTRUM = 1e-8;
inline constexpr Complex I_UNIT{0.0, 1.0};

struct BlockSpec {
    int p = 1;
    int q = 1;
    int size() const { return p + q; }
    bool operator==(const BlockSpec&) const = default;
};

// Row-major entries; rejects non-finite values.
CMatrix make_matrix(int rows, int cols, const std::vector<Complex>& entries);
CMatrix make_matrix(std::initializer_list<std::initializer_list<Complex>> rows);
void require_finite(const CMatrix& m, const char* what);
void require_square(const CMatrix& m, const char* what);

CMatrix commutator(const CMatrix& a, const CMatrix& b);
double rel_diff(const CMatrix& a, const CMatrix& b);

// Returns the smallest m with X^m = 0 (relative to ||X||^m), or 0 if none <= n.
int nilpotency_order(const CMatrix& x, double tol = 1e-13);
CMatrix mat_exp(const CMatrix& x);
// Terminating series; caller asserts x^order = 0.
CMatrix mat_exp_nilpotent(const CMatrix& x, int order);
CMatrix mat_log_unipotent(const CMatrix& u);
// Principal logarithm of a Hermitian positive definite matrix.
CMatrix mat_log_hpd(const CMatrix& h);

CMatrix indefinite_form(const BlockSpec& s);
CMatrix indef_adjoint(const CMatrix& x, const BlockSpec& s);

CMatrix block_a(const CMatrix& g, const BlockSpec& s);
CMatrix block_b(const CMatrix& g, const BlockSpec& s);
CMatrix block_c(const CMatrix& g, const BlockSpec& s);
CMatrix block_d(const CMatrix& g, const BlockSpec& s);
CMatrix block_diag(const CMatrix& a, const CMatrix& d);
CMatrix upper_block(const CMatrix& b, const BlockSpec& s);  // [[0,B],[0,0]]
CMatrix lower_block(const CMatrix& c, const BlockSpec& s);  // [[0,0],[C,0]]
double off_block_diag_norm(const CMatrix& g, const BlockSpec& s);

}  // namespace wkl
