#pragma once

#include <cstdint>
#include <vector>

#include "wkl/whittaker.hpp"

namespace wkl {

enum class L2Status { Finite, Divergent, Boundary };
const char* to_string(L2Status s);

struct L2Result {
    L2Status status = L2Status::Finite;
    double value = 0.0;
    double error = 0.0;
    double t_lower = 0.0;  // integration starts at -t_lower
    double t_upper = 0.0;  // last partial integral ends here
    std::vector<double> partials;
};

struct ReducedOptions {
    double t_start = 2.0;
    int max_doublings = 12;
    double rel_tol = 1e-12;
    double growth = 1.5;  // partial-integral ratio per doubling that counts as growth
    int growth_runs = 3;
};

// prod_j exp(2s(1 - e^{-2t_j}) + 2(rho_n_j - mu_j) t_j) * w(t) for H = sum t_j x_j.
double reduced_integrand(const std::vector<double>& t, const std::vector<double>& mu, const RootDatum& rd, double s);
// Lower cutoff: the integrand on t_j <= -T0 is below 1e-16 of its value at 0.
double damping_cutoff(const std::vector<double>& mu, const RootDatum& rd, double s);
// Integral of the reduced integrand over the chamber t_1 > ... > t_r (rank 1 or 2),
// with partial integrals over [-T0, T] for T = t_start 2^k.
L2Result reduced_series(const std::vector<double>& mu, const RootDatum& rd, double s, const ReducedOptions& opt = {});
// ||A_eta* xi||^2 times the reduced series for the highest weight vector xi.
L2Result gn_l2_norm_reduced(const WhittakerKernel& wk, const ReducedOptions& opt = {});

struct FullOptions {
    int k_samples = 16;     // grid on SU(1,1), Haar samples otherwise
    int l_samples = 4;      // grid on K cap L (SU(1,1): {I, -I})
    double t_panel = 0.5;
    int t_order = 10;
    double t_upper = 0.0;   // 0: chosen from the decay of the reduced integrand
    std::uint64_t seed = 7;
};

// Sample points of K cap L for the rank-one groups SU(1,1) and SU(2,1).
std::vector<CMatrix> k_cap_l_grid(const BlockSpec& s, int n);

// ||T xi||^2 over K x A x (K cap L) with density a^{2 rho_n} w(a).
L2Result gn_l2_norm_full(const WhittakerKernel& wk, const CVector& xi, const FullOptions& opt = {});

struct SchurResult {
    Complex value = 0.0;
    double error = 0.0;
};
// <T_{eta1} xi1, T_{eta2} xi2> over the same samples; Divergent outside the discrete range.
SchurResult schur_orthogonality(const WhittakerKernel& w1, const WhittakerKernel& w2, const CVector& xi1, const CVector& xi2,
                                const FullOptions& opt = {});

struct IntegrandSample {
    double t = 0.0;
    double integrand = 0.0;
    double partial = 0.0;  // integral from -T0 to t
};
// Rank-one reduced integrand on a uniform grid of n points in [t_min, t_max].
std::vector<IntegrandSample> sample_reduced_integrand(const std::vector<double>& mu, const RootDatum& rd, double s, double t_min,
                                                      double t_max, int n);

}  // namespace wkl
