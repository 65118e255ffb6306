#include "wkl/krep.hpp"

#include <cmath>
#include <sstream>

namespace wkl {

KRep::KRep(const BlockSpec& spec, int m, int sym_degree) : spec_(spec), m_(m), k_(sym_degree) {
    if (sym_degree < 0) throw Error(ErrorKind::InvalidArgument, "KRep: negative symmetric degree");
    basis_ = exact_degree_indices(spec.p, sym_degree);
    set_ = MultiIndexSet::get(spec.p, sym_degree);
}

KRep KRep::parse(const std::string& text, const BlockSpec& spec) {
    auto fail = [&] { return Error(ErrorKind::InvalidArgument, "KRep: cannot parse '" + text + "'"); };
    if (text == "trivial") return trivial(spec);
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw fail();
        }
        if (used != s.size()) throw fail();
        return v;
    };
    if (parts.size() == 2 && parts[0] == "char") return character(spec, to_int(parts[1]));
    if (parts.size() == 2 && parts[0] == "sym1") return KRep(spec, to_int(parts[1]), 1);
    if (parts.size() == 3 && parts[0] == "sym") return KRep(spec, to_int(parts[1]), to_int(parts[2]));
    throw fail();
}

std::string KRep::name() const {
    if (k_ == 0) return "char:" + std::to_string(m_);
    return "sym:" + std::to_string(m_) + ":" + std::to_string(k_);
}

namespace {
Complex int_power(Complex x, int e) {
    if (e < 0) return 1.0 / int_power(x, -e);
    Complex r = 1.0;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}
}  // namespace

CMatrix KRep::operator()(const CMatrix& k) const {
    if (k.rows() != spec_.size() || k.cols() != spec_.size())
        throw Error(ErrorKind::InvalidArgument, "KRep: matrix size does not match the block structure");
    const CMatrix a = block_a(k, spec_);
    const Complex scale = int_power(a.determinant(), m_);
    const int d = dim();
    if (k_ == 0) return CMatrix::Constant(1, 1, scale);
    // Sym^1 is the defining action in the basis x_1, ..., x_p.
    if (k_ == 1) return scale * a;
    const MultiIndexSet* set = set_.get();
    // images[i] = polynomial of the linear form A x_i.
    std::vector<CVector> images;
    for (int i = 0; i < spec_.p; ++i) images.push_back(poly_linear(*set, a.col(i)));
    CMatrix out(d, d);
    for (int col = 0; col < d; ++col) {
        const MultiIndex& al = basis_[static_cast<std::size_t>(col)];
        CVector poly = CVector::Zero(set->size());
        poly(0) = 1.0;
        for (int i = 0; i < spec_.p; ++i)
            for (int e = 0; e < al[static_cast<std::size_t>(i)]; ++e) poly = poly_mul(*set, poly, images[static_cast<std::size_t>(i)]);
        const double fa = multi_factorial(al);
        for (int row = 0; row < d; ++row) {
            const MultiIndex& be = basis_[static_cast<std::size_t>(row)];
            out(row, col) = poly(set->find(be)) * std::sqrt(multi_factorial(be) / fa);
        }
    }
    return scale * out;
}

CMatrix KRep::inverse_at(const CMatrix& k) const { return (*this)(k.inverse()); }

CMatrix KRep::differential(const CMatrix& x) const {
    auto central = [&](double h) { return CMatrix(((*this)(mat_exp(h * x)) - (*this)(mat_exp(-h * x))) / (2.0 * h)); };
    const double h = 1e-3 / std::max(1.0, x.norm());
    return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

CVector KRep::highest_vector() const {
    CVector v = CVector::Zero(dim());
    v(0) = 1.0;
    return v;
}

}  // namespace wkl
