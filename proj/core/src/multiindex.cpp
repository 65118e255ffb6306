#include "wkl/multiindex.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace wkl {

double multi_factorial(const MultiIndex& a) {
    double f = 1.0;
    for (int v : a)
        for (int k = 2; k <= v; ++k) f *= k;
    return f;
}

int total_degree(const MultiIndex& a) {
    int d = 0;
    for (int v : a) d += v;
    return d;
}

namespace {
void fill_exact(int n, int k, int pos, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (pos == n - 1) {
        cur[static_cast<std::size_t>(pos)] = k;
        out.push_back(cur);
        return;
    }
    for (int v = k; v >= 0; --v) {
        cur[static_cast<std::size_t>(pos)] = v;
        fill_exact(n, k - v, pos + 1, cur, out);
    }
}
}  // namespace

std::vector<MultiIndex> exact_degree_indices(int n, int k) {
    std::vector<MultiIndex> out;
    if (n == 0) {
        if (k == 0) out.emplace_back();
        return out;
    }
    MultiIndex cur(static_cast<std::size_t>(n), 0);
    fill_exact(n, k, 0, cur, out);
    return out;
}

MultiIndexSet::MultiIndexSet(int n, int cap) : n_(n), cap_(cap) {
    if (n < 0 || cap < 0) throw Error(ErrorKind::InvalidArgument, "MultiIndexSet: negative size");
    for (int k = 0; k <= cap; ++k) {
        begin_.push_back(static_cast<int>(list_.size()));
        for (auto& a : exact_degree_indices(n, k)) {
            lookup_.emplace(key(a), static_cast<int>(list_.size()));
            degree_.push_back(k);
            fact_.push_back(multi_factorial(a));
            list_.push_back(std::move(a));
        }
        if (n == 0) break;
    }
    while (static_cast<int>(begin_.size()) <= cap + 1) begin_.push_back(static_cast<int>(list_.size()));
}

std::shared_ptr<const MultiIndexSet> MultiIndexSet::get(int n, int cap) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const MultiIndexSet>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, cap}];
    if (!slot) slot.reset(new MultiIndexSet(n, cap));
    return slot;
}

std::uint64_t MultiIndexSet::key(const MultiIndex& a) const {
    std::uint64_t k = 0;
    for (int v : a) k = k * static_cast<std::uint64_t>(cap_ + 2) + static_cast<std::uint64_t>(v);
    return k;
}

int MultiIndexSet::find(const MultiIndex& a) const {
    if (static_cast<int>(a.size()) != n_) return -1;
    int d = 0;
    for (int v : a) {
        if (v < 0) return -1;
        d += v;
    }
    if (d > cap_) return -1;
    auto it = lookup_.find(key(a));
    return it == lookup_.end() ? -1 : it->second;
}

int MultiIndexSet::sum_index(int i, int j) const {
    std::call_once(table_once_, [this] {
        const int s = size();
        sum_table_.assign(static_cast<std::size_t>(s) * static_cast<std::size_t>(s), -1);
        MultiIndex c(static_cast<std::size_t>(n_));
        for (int a = 0; a < s; ++a)
            for (int b = 0; b < s; ++b) {
                if (degree(a) + degree(b) > cap_) continue;
                for (int v = 0; v < n_; ++v) c[static_cast<std::size_t>(v)] = at(a)[static_cast<std::size_t>(v)] + at(b)[static_cast<std::size_t>(v)];
                sum_table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(s) + static_cast<std::size_t>(b)] = find(c);
            }
    });
    return sum_table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(size()) + static_cast<std::size_t>(j)];
}

CVector poly_mul(const MultiIndexSet& set, const CVector& a, const CVector& b) {
    const int s = set.size();
    CVector out = CVector::Zero(s);
    for (int i = 0; i < s; ++i) {
        if (a(i) == 0.0) continue;
        for (int j = 0; j < s && set.degree(i) + set.degree(j) <= set.cap(); ++j) {
            if (b(j) == 0.0) continue;
            out(set.sum_index(i, j)) += a(i) * b(j);
        }
    }
    return out;
}

CVector poly_linear(const MultiIndexSet& set, const CVector& c) {
    CVector out = CVector::Zero(set.size());
    if (set.cap() < 1) return out;
    for (int k = 0; k < set.vars(); ++k) {
        MultiIndex e(static_cast<std::size_t>(set.vars()), 0);
        e[static_cast<std::size_t>(k)] = 1;
        out(set.find(e)) = c(k);
    }
    return out;
}

CVector poly_affine_substitute(const MultiIndexSet& set, const CVector& zeta, const CMatrix& m, const CVector& b) {
    const int n = set.vars();
    const int s = set.size();
    // Linear forms (M w + b)_k as polynomials.
    std::vector<CVector> forms;
    for (int k = 0; k < n; ++k) {
        CVector f = poly_linear(set, m.row(k).transpose());
        f(0) += b(k);
        forms.push_back(std::move(f));
    }
    // powers[k][e] = form_k^e.
    std::vector<std::vector<CVector>> powers(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        CVector one = CVector::Zero(s);
        one(0) = 1.0;
        powers[static_cast<std::size_t>(k)].push_back(one);
        for (int e = 1; e <= set.cap(); ++e)
            powers[static_cast<std::size_t>(k)].push_back(poly_mul(set, powers[static_cast<std::size_t>(k)].back(), forms[static_cast<std::size_t>(k)]));
    }
    CVector out = CVector::Zero(s);
    for (int i = 0; i < s; ++i) {
        if (zeta(i) == 0.0) continue;
        CVector term = CVector::Zero(s);
        term(0) = 1.0;
        for (int k = 0; k < n; ++k) {
            int e = set.at(i)[static_cast<std::size_t>(k)];
            if (e > 0) term = poly_mul(set, term, powers[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)]);
        }
        out += zeta(i) * term;
    }
    return out;
}

namespace {
Complex ipow(Complex x, int e) {
    Complex r = 1.0;
    for (int k = 0; k < e; ++k) r *= x;
    return r;
}
}  // namespace

Complex poly_eval(const MultiIndexSet& set, const CVector& zeta, const CVector& w) {
    Complex acc = 0.0;
    for (int i = 0; i < set.size(); ++i) {
        if (zeta(i) == 0.0) continue;
        Complex mono = 1.0;
        for (int k = 0; k < set.vars(); ++k) mono *= ipow(w(k), set.at(i)[static_cast<std::size_t>(k)]);
        acc += zeta(i) * mono;
    }
    return acc;
}

CMatrix torus_coefficients(const MultiIndexSet& set, int dim, const std::function<CVector(const CVector&)>& g, double radius) {
    const int n = set.vars();
    const int npts = set.cap() + 1;
    std::size_t total = 1;
    for (int k = 0; k < n; ++k) total *= static_cast<std::size_t>(npts);
    CVector roots(npts);
    for (int j = 0; j < npts; ++j) roots(j) = std::polar(1.0, 2.0 * std::numbers::pi * j / npts);
    CMatrix out = CMatrix::Zero(set.size(), dim);
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    CVector w(n);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (int k = 0; k < n; ++k) {
            idx[static_cast<std::size_t>(k)] = static_cast<int>(rem % static_cast<std::size_t>(npts));
            rem /= static_cast<std::size_t>(npts);
            w(k) = radius * roots(idx[static_cast<std::size_t>(k)]);
        }
        CVector val = g(w);
        for (int i = 0; i < set.size(); ++i) {
            int phase = 0;
            for (int k = 0; k < n; ++k) phase += set.at(i)[static_cast<std::size_t>(k)] * idx[static_cast<std::size_t>(k)];
            out.row(i) += std::conj(roots(phase % npts)) * val.transpose();
        }
    }
    for (int i = 0; i < set.size(); ++i) out.row(i) /= std::pow(radius, set.degree(i)) * static_cast<double>(total);
    return out;
}

}  // namespace wkl
