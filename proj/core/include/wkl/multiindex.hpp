#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "wkl/matcore.hpp"

namespace wkl {

using MultiIndex = std::vector<int>;

double multi_factorial(const MultiIndex& a);
int total_degree(const MultiIndex& a);
// All indices of total degree exactly k, (k,0,..,0) first, descending lexicographic.
std::vector<MultiIndex> exact_degree_indices(int n, int k);

// Multi-indices in n variables of total degree <= cap, graded, each degree block
// in descending lexicographic order. Immutable once built.
class MultiIndexSet {
public:
    static std::shared_ptr<const MultiIndexSet> get(int n, int cap);

    int vars() const { return n_; }
    int cap() const { return cap_; }
    int size() const { return static_cast<int>(list_.size()); }
    const MultiIndex& at(int i) const { return list_[static_cast<std::size_t>(i)]; }
    int degree(int i) const { return degree_[static_cast<std::size_t>(i)]; }
    double factorial(int i) const { return fact_[static_cast<std::size_t>(i)]; }
    // First position of degree k (k may be cap + 1 for the end).
    int degree_begin(int k) const { return begin_[static_cast<std::size_t>(k)]; }
    // -1 when absent or above the cap.
    int find(const MultiIndex& a) const;
    // Position of at(i) + at(j), or -1 above the cap.
    int sum_index(int i, int j) const;

private:
    MultiIndexSet(int n, int cap);
    std::uint64_t key(const MultiIndex& a) const;
    int n_, cap_;
    std::vector<MultiIndex> list_;
    std::vector<int> degree_;
    std::vector<double> fact_;
    std::vector<int> begin_;
    std::unordered_map<std::uint64_t, int> lookup_;
    mutable std::once_flag table_once_;
    mutable std::vector<int> sum_table_;
};

// Dense polynomial coefficients over a MultiIndexSet.
CVector poly_mul(const MultiIndexSet& set, const CVector& a, const CVector& b);
// Coefficients of l(w) = sum_k c_k w_k.
CVector poly_linear(const MultiIndexSet& set, const CVector& c);
// zeta(M w + b) for zeta of degree <= cap; exact within the cap.
CVector poly_affine_substitute(const MultiIndexSet& set, const CVector& zeta, const CMatrix& m, const CVector& b);
Complex poly_eval(const MultiIndexSet& set, const CVector& zeta, const CVector& w);
// Coefficients (rows: monomials, columns: components) of a vector-valued
// polynomial of total degree <= cap, from samples on the torus of the given
// radius with cap + 1 points per variable, which is alias-free for that degree.
// A radius near sqrt(cap) balances roundoff against the weights sqrt(a!).
CMatrix torus_coefficients(const MultiIndexSet& set, int dim, const std::function<CVector(const CVector&)>& g,
                           double radius = 1.0);

}  // namespace wkl
