#pragma once

#include <cstdint>
#include <vector>

#include "wkl/whittaker.hpp"

namespace wkl {

struct RankResult {
    int rank = 0;
    std::vector<double> singular_values;  // descending
    double gap = 0.0;                     // sigma_{rank-1} / sigma_rank (infinite if nothing follows)
};

// Numerical rank of the singular values with threshold rel_tol * sigma_max.
RankResult numerical_rank(const Eigen::VectorXd& sv, double rel_tol = 1e-9);

// Rank of eta -> (T_{pi,eta} xi_j(x_s))_{j,s} over dim V_pi + extra random etas
// and `samples` random group elements. The map is antilinear in eta, so the
// columns are conjugated before the SVD.
RankResult section_rank(const FockSpace& f, const KRep& pi, int samples = 6, int extra = 2, std::uint64_t seed = 7);

// Rows: sqrt(s) A(w_k w^a) - d pi(Y^-_k on k_C) A(w^a) for |a| < degree;
// unknowns: A(w^a) in V_pi for |a| <= degree.
CMatrix intertwiner_constraints(const FockSpace& f, const KRep& pi, int degree);
// Dimension of the solution space of the constraints, i.e. an upper bound for
// the number of independent N_C-intertwiners F -> V_pi seen up to that degree.
RankResult constraint_nullity(const FockSpace& f, const KRep& pi, int degree = 4);
// The unknown vector (A(w^a))_a of the moment map A_eta, for checking it against the constraints.
CVector intertwiner_unknowns(const WhittakerKernel& wk, int degree);

}  // namespace wkl
