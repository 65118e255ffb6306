#pragma once

#include <functional>
#include <vector>

#include "wkl/matcore.hpp"

namespace wkl {

struct GaussRule {
    std::vector<double> nodes, weights;
};
// n-point Gauss-Legendre rule on [a, b].
GaussRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

// Node set for integrals over the unit ball of C^p (p = 1: the disk) against
// Lebesgue measure dA (unnormalized).
struct DomainNode {
    CVector z;
    double weight;
};

struct BallRule {
    int p = 1;
    int radial = 256;
    int angular = 64;
    // Radial nodes are placed on the shell r_min <= |z| <= r_max.
    double r_min = 0.0;
    double r_max = 1.0;
    std::vector<DomainNode> nodes() const;
    // The same rule at half resolution, used for error estimates.
    BallRule coarse() const;
};

// Node set for the same integrals in Siegel coordinates about the boundary point e_1:
// w = u + i(v + |zeta|^2), z_1 = (w - i)/(w + i), z' = 2i zeta/(w + i), with u on a
// uniform grid in [-u_max, u_max], v = e^b and |zeta| = sinh(c). Functions with a
// bounded oscillation e^{isu} near e_1 are smooth in these coordinates.
struct SiegelRule {
    int p = 1;
    double u_max = 96.0;
    double u_step = 0.125;
    double b_min = -14.0;
    double b_max = 6.0;
    double b_step = 0.125;
    double c_max = 3.0;
    double c_step = 0.125;
    int angular = 32;  // zeta phase nodes (p = 2)
    std::vector<DomainNode> nodes() const;
    SiegelRule coarse() const;
};

struct QuadResult {
    Complex value = 0.0;
    double error = 0.0;
};

// Integral of f over the ball with an error estimate from the coarse rule.
// Nodes are evaluated in parallel and summed pairwise in node order.
QuadResult integrate_ball(const BallRule& rule, const std::function<Complex(const CVector&)>& f);
Complex integrate_nodes(const std::vector<DomainNode>& nodes, const std::function<Complex(const CVector&)>& f);

// Composite Gauss-Legendre on [a, b] with panels of width <= h.
double integrate_interval(const std::function<double(double)>& f, double a, double b, double h = 0.5, int order = 20);

}  // namespace wkl
