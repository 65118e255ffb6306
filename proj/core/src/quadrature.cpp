#include "wkl/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "wkl/parallel.hpp"

namespace wkl {

GaussRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "gauss_legendre: need at least one node");
    GaussRule r;
    r.nodes.resize(static_cast<std::size_t>(n));
    r.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[static_cast<std::size_t>(i)] = -x;
        r.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        r.weights[static_cast<std::size_t>(i)] = w;
        r.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (int i = 0; i < n; ++i) {
        r.nodes[static_cast<std::size_t>(i)] = mid + half * r.nodes[static_cast<std::size_t>(i)];
        r.weights[static_cast<std::size_t>(i)] *= half;
    }
    return r;
}

std::vector<DomainNode> BallRule::nodes() const {
    if (radial < 1 || angular < 1 || !(r_min >= 0.0 && r_min < r_max)) throw Error(ErrorKind::InvalidArgument, "BallRule: empty rule");
    std::vector<DomainNode> out;
    const GaussRule gr = gauss_legendre(radial, r_min, r_max);
    const double dth = 2.0 * std::numbers::pi / angular;
    if (p == 1) {
        for (int i = 0; i < radial; ++i)
            for (int j = 0; j < angular; ++j) {
                double r = gr.nodes[static_cast<std::size_t>(i)];
                CVector z(1);
                z(0) = std::polar(r, (j + 0.5) * dth);
                out.push_back({z, gr.weights[static_cast<std::size_t>(i)] * r * dth});
            }
        return out;
    }
    if (p == 2) {
        // z = r (sqrt(1-u) e^{ia}, sqrt(u) e^{ib}); dA = (r^3 / 2) dr du da db.
        const int nu = std::max(2, angular / 4);
        const int na = std::max(4, angular / 2);
        const GaussRule gu = gauss_legendre(nu, 0.0, 1.0);
        const double da = 2.0 * std::numbers::pi / na;
        for (int i = 0; i < radial; ++i) {
            double r = gr.nodes[static_cast<std::size_t>(i)];
            for (int k = 0; k < nu; ++k) {
                double u = gu.nodes[static_cast<std::size_t>(k)];
                for (int a = 0; a < na; ++a)
                    for (int b = 0; b < na; ++b) {
                        CVector z(2);
                        z(0) = std::polar(r * std::sqrt(1.0 - u), (a + 0.5) * da);
                        z(1) = std::polar(r * std::sqrt(u), (b + 0.25) * da);
                        double w = gr.weights[static_cast<std::size_t>(i)] * gu.weights[static_cast<std::size_t>(k)] * da * da *
                                   0.5 * r * r * r;
                        out.push_back({z, w});
                    }
            }
        }
        return out;
    }
    throw Error(ErrorKind::Unsupported, "BallRule: only the disk and the 2-ball are implemented");
}

BallRule BallRule::coarse() const {
    BallRule c = *this;
    c.radial = std::max(1, radial / 2);
    c.angular = std::max(1, angular / 2);
    return c;
}

std::vector<DomainNode> SiegelRule::nodes() const {
    if (!(u_step > 0.0 && b_step > 0.0 && c_step > 0.0) || u_max <= 0.0 || b_min >= b_max)
        throw Error(ErrorKind::InvalidArgument, "SiegelRule: empty rule");
    if (p != 1 && p != 2) throw Error(ErrorKind::Unsupported, "SiegelRule: only the disk and the 2-ball are implemented");
    const int nu = static_cast<int>(std::round(u_max / u_step));
    const int nb = static_cast<int>(std::round((b_max - b_min) / b_step));
    const int nc = p == 2 ? static_cast<int>(std::round(c_max / c_step)) : 1;
    const int nphi = p == 2 ? std::max(1, angular) : 1;
    const double dphi = 2.0 * std::numbers::pi / nphi;
    std::vector<DomainNode> out;
    for (int iu = -nu; iu <= nu; ++iu) {
        const double u = iu * u_step;
        for (int ib = 0; ib <= nb; ++ib) {
            const double v = std::exp(b_min + ib * b_step);
            const double dv = v * b_step * ((ib == 0 || ib == nb) ? 0.5 : 1.0);
            for (int ic = 0; ic < nc; ++ic)
                for (int k = 0; k < nphi; ++k) {
                    double rho = 0.0, dz = 1.0;
                    if (p == 2) {
                        const double c = (ic + 0.5) * c_step;
                        rho = std::sinh(c);
                        dz = rho * std::cosh(c) * c_step * dphi;
                    }
                    const Complex w(u, v + rho * rho);
                    const Complex wi = w + Complex(0.0, 1.0);
                    // 1 - |z|^2 = 4v / |w + i|^2; nodes closer to the sphere than this carry no weight.
                    if (4.0 * v / std::norm(wi) < 1e-13) continue;
                    CVector z(p);
                    z(0) = (w - Complex(0.0, 1.0)) / wi;
                    if (p == 2) z(1) = 2.0 * Complex(0.0, 1.0) * std::polar(rho, (k + 0.5) * dphi) / wi;
                    // dA(z) = 4^p |w + i|^{-2(p+1)} du dv dA(zeta).
                    const double jac = std::pow(4.0, p) * std::pow(std::norm(wi), -(p + 1));
                    out.push_back({z, jac * u_step * dv * dz});
                }
        }
    }
    return out;
}

SiegelRule SiegelRule::coarse() const {
    SiegelRule c = *this;
    c.u_step *= 2.0;
    c.b_step *= 2.0;
    c.c_step *= 2.0;
    c.angular = std::max(1, angular / 2);
    return c;
}

Complex integrate_nodes(const std::vector<DomainNode>& nodes, const std::function<Complex(const CVector&)>& f) {
    std::vector<Complex> vals(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t i) { vals[i] = nodes[i].weight * f(nodes[i].z); });
    return pairwise_sum(vals);
}

QuadResult integrate_ball(const BallRule& rule, const std::function<Complex(const CVector&)>& f) {
    QuadResult r;
    r.value = integrate_nodes(rule.nodes(), f);
    r.error = std::abs(r.value - integrate_nodes(rule.coarse().nodes(), f));
    return r;
}

double integrate_interval(const std::function<double(double)>& f, double a, double b, double h, int order) {
    if (b <= a) return 0.0;
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / h)));
    const GaussRule g = gauss_legendre(order);
    const double w = (b - a) / panels;
    std::vector<double> parts(static_cast<std::size_t>(panels));
    for (int k = 0; k < panels; ++k) {
        double lo = a + k * w, acc = 0.0;
        for (int i = 0; i < order; ++i)
            acc += g.weights[static_cast<std::size_t>(i)] * f(lo + 0.5 * w * (g.nodes[static_cast<std::size_t>(i)] + 1.0));
        parts[static_cast<std::size_t>(k)] = 0.5 * w * acc;
    }
    return pairwise_sum(parts);
}

}  // namespace wkl
