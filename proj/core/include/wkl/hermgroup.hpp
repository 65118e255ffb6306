#pragma once

#include <cstdint>
#include <random>

#include "wkl/matcore.hpp"

namespace wkl {

enum class GroupTag { SU, SL2C, ComplexifiedSU };

inline constexpr double TOL_MEMBERSHIP = 1e-9;

bool is_in_su(const CMatrix& g, const BlockSpec& s, double tol = TOL_MEMBERSHIP);
bool has_unit_det(const CMatrix& g, double tol = TOL_MEMBERSHIP);

class GroupElement {
public:
    static GroupElement su(const CMatrix& m, const BlockSpec& s);
    static GroupElement complexified(const CMatrix& m, const BlockSpec& s);
    static GroupElement sl2c(const CMatrix& m);
    static GroupElement identity(const BlockSpec& s, GroupTag tag = GroupTag::SU);

    const CMatrix& mat() const { return mat_; }
    GroupTag tag() const { return tag_; }
    const BlockSpec& spec() const { return spec_; }

    GroupElement operator*(const GroupElement& other) const;
    GroupElement inverse() const;

private:
    GroupElement(CMatrix m, GroupTag tag, BlockSpec s) : mat_(std::move(m)), tag_(tag), spec_(s) {}
    CMatrix mat_;
    GroupTag tag_;
    BlockSpec spec_;
};

struct HCTriple {
    CMatrix zplus;   // p x q
    CMatrix k;       // block diagonal
    CMatrix zminus;  // q x p
    CMatrix reassemble(const BlockSpec& s) const;
};

class DomainPoint {
public:
    static DomainPoint make(const CMatrix& z);
    static DomainPoint origin(const BlockSpec& s);
    const CMatrix& z() const { return z_; }
    static bool contains(const CMatrix& z);

private:
    explicit DomainPoint(CMatrix z) : z_(std::move(z)) {}
    CMatrix z_;
};

CMatrix exp_pplus(const CMatrix& z, const BlockSpec& s);   // [[I,Z],[0,I]]
CMatrix exp_pminus(const CMatrix& y, const BlockSpec& s);  // [[I,0],[Y,I]]

CMatrix sigma_group(const CMatrix& g, const BlockSpec& s);
CMatrix theta_group(const CMatrix& g, const BlockSpec& s);
CMatrix sigma_alg(const CMatrix& x, const BlockSpec& s);
CMatrix theta_alg(const CMatrix& x, const BlockSpec& s);
// k* = sigma(k)^{-1}
CMatrix k_star(const CMatrix& k, const BlockSpec& s);
CMatrix z0_element(const BlockSpec& s);

HCTriple hc_factorize(const CMatrix& g, const BlockSpec& s);
HCTriple hc_factorize(const GroupElement& g);

CMatrix mobius(const CMatrix& g, const CMatrix& z, const BlockSpec& s);
DomainPoint domain_action(const GroupElement& g, const DomainPoint& z);

// J(g,Z) = k_C(g exp Z), returned as the block-diagonal K_C matrix.
CMatrix universal_cocycle(const CMatrix& g, const CMatrix& z, const BlockSpec& s);
GroupElement universal_cocycle(const GroupElement& g, const DomainPoint& z);
// K(Z,W) = k_C(exp(-sigma(W)) exp(Z)) = diag(I - Z W*, I - W* Z)^... see source.
CMatrix universal_kernel(const CMatrix& z, const CMatrix& w, const BlockSpec& s);
GroupElement universal_kernel(const DomainPoint& z, const DomainPoint& w, const BlockSpec& s);

// Canonical g_Z in G with g_Z . o = Z (positive Hermitian polar part).
CMatrix domain_section(const CMatrix& z, const BlockSpec& s);

using Rng = std::mt19937_64;
CMatrix random_lie_algebra(Rng& rng, const BlockSpec& s, double max_norm);
CMatrix random_group(Rng& rng, const BlockSpec& s, double max_norm);
CMatrix random_domain_point(Rng& rng, const BlockSpec& s, double max_radius);
CMatrix random_k_complex(Rng& rng, const BlockSpec& s, double scale);
CMatrix random_k_compact(Rng& rng, const BlockSpec& s);

}  // namespace wkl
