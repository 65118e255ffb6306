#pragma once

#include <functional>
#include <memory>
#include <string>

#include "wkl/krep.hpp"
#include "wkl/quadrature.hpp"
#include "wkl/rootdata.hpp"

namespace wkl {

// j_pi(g, Z) = pi(J(g, Z))^{-1}.
CMatrix jpi(const KRep& pi, const CMatrix& g, const CMatrix& z);
// K_pi(Z, W) = pi(K(Z, W))^{-1}.
CMatrix kpi(const KRep& pi, const CMatrix& z, const CMatrix& w);

// A V_pi-valued function on the domain (points are p x q matrices).
struct HoloFunction {
    int dim = 1;
    std::function<CVector(const CMatrix&)> eval;
    CVector operator()(const CMatrix& z) const { return eval(z); }

    static HoloFunction constant(const CVector& xi);
    // z -> K_pi(z, W) xi.
    static HoloFunction kernel_section(const KRep& pi, const CMatrix& w, const CVector& xi);
};

// U_pi(g) F(z) = j_pi(g^{-1}, z) F(g^{-1} z).
HoloFunction upi_act(const KRep& pi, const CMatrix& g, const HoloFunction& f);

// Restricted weights: exp(sum t_j h_j) xi = prod e^{-mu_j t_j} xi on the highest weight vector.
struct MuExtraction {
    std::vector<double> mu;
    CVector vector;
    double fit_error = 0.0;  // |log-ratio at t minus log-ratio at 2t / 2|
};
MuExtraction extract_mu(const KRep& pi, const RootDatum& rd);

enum class DSStatus { Below, Boundary, Above };
const char* to_string(DSStatus s);

struct DSParams {
    BlockSpec spec;
    std::string pi_name;
    std::vector<double> mu, rho;
    std::vector<DSStatus> status;
    bool discrete = false;
};
DSParams classify(const KRep& pi, const RootDatum& rd);

struct DSResult {
    Complex value = 0.0;
    double error = 0.0;
};

// Holomorphic discrete series on a rank-one domain (the disk or the 2-ball),
// with the inner product computed by quadrature against d*z and normalized so
// that the constants have norm |xi|^2.
class HoloDS {
public:
    HoloDS(const KRep& pi, std::shared_ptr<const RootDatum> rd, const BallRule& rule = {});
    HoloDS(const KRep& pi, std::shared_ptr<const RootDatum> rd, const SiegelRule& rule);

    const KRep& rep() const { return pi_; }
    const RootDatum& datum() const { return *rd_; }
    const DSParams& params() const { return params_; }
    const BallRule& rule() const { return rule_; }
    const std::vector<DomainNode>& nodes() const { return nodes_; }
    double normalization() const { return norm_; }

    CMatrix point(const CVector& z) const;
    // <K_pi(z,z)^{-1} F1(z), F2(z)> times the invariant density, without normalization.
    Complex density(const HoloFunction& f1, const HoloFunction& f2, const CVector& z) const;
    // Divergent when the parameters are not in the discrete range.
    DSResult inner(const HoloFunction& f1, const HoloFunction& f2) const;
    // Unnormalized integrals of |F|^2 over shells 1 - 2^{-k+1} <= |z| <= 1 - 2^{-k},
    // k = 1..levels; they stop shrinking when the integral diverges.
    std::vector<double> shell_sweep(const HoloFunction& f, int levels = 10) const;
    static bool sweep_diverges(const std::vector<double>& shells);

private:
    void init(std::vector<DomainNode> nodes, std::vector<DomainNode> coarse, const std::vector<DomainNode>& norm_nodes);
    KRep pi_;
    std::shared_ptr<const RootDatum> rd_;
    BallRule rule_;
    DSParams params_;
    double norm_ = 1.0;
    std::vector<DomainNode> nodes_, coarse_;
};

}  // namespace wkl
