#pragma once

#include <string>

#include "wkl/multiindex.hpp"

namespace wkl {

// Holomorphic representation of K_C = S(GL(p) x GL(q)) given by
// det(k_A)^m tensor Sym^k(k_A). Sym^k acts on homogeneous polynomials in p
// variables; the basis x^a / sqrt(a!) is orthonormal and makes pi|_K unitary.
class KRep {
public:
    KRep(const BlockSpec& spec, int m, int sym_degree);
    static KRep character(const BlockSpec& spec, int m) { return KRep(spec, m, 0); }
    static KRep trivial(const BlockSpec& spec) { return KRep(spec, 0, 0); }
    // "trivial", "char:M", "sym:M:K", "sym1:M".
    static KRep parse(const std::string& text, const BlockSpec& spec);

    const BlockSpec& spec() const { return spec_; }
    int char_power() const { return m_; }
    int sym_degree() const { return k_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    bool is_character() const { return k_ == 0; }
    std::string name() const;
    const MultiIndex& basis_index(int i) const { return basis_[static_cast<std::size_t>(i)]; }

    // pi(k) for k block diagonal in K_C.
    CMatrix operator()(const CMatrix& k) const;
    CMatrix inverse_at(const CMatrix& k) const;
    // d pi(X) for X block diagonal in k_C (central differences with one Richardson step).
    CMatrix differential(const CMatrix& x) const;
    // Basis vector x_1^k, the highest weight vector for the standard ordering.
    CVector highest_vector() const;

private:
    BlockSpec spec_;
    int m_, k_;
    std::vector<MultiIndex> basis_;
    std::shared_ptr<const MultiIndexSet> set_;
};

}  // namespace wkl
