#pragma once

#include <vector>

#include "wkl/rootdata.hpp"

namespace wkl {

enum class PknSign { Plus, Minus };
// MinusGauge: log n has no n^+_1/2 component. PlusGauge: no n^-_1/2 component
// (what sigma_mirror produces from a MinusGauge triple).
enum class Gauge { MinusGauge, PlusGauge, Free };
enum class PknMethod { Identity, TorusClosedForm, SL2ClosedForm, Newton, Continuation, Restart, Mirror, Regauged };

const char* to_string(PknSign s);
const char* to_string(Gauge g);
const char* to_string(PknMethod m);

struct PKNTriple {
    CMatrix zplus;  // Plus: p x q block of p^+; Minus: q x p block of p^-
    CMatrix k;      // block diagonal, in K_C
    CMatrix n;      // in N_C
    NCCoords log_n; // coordinates of log n
    PknSign sign = PknSign::Plus;
    Gauge gauge = Gauge::MinusGauge;
    PknMethod method = PknMethod::Newton;
    double residual = 0.0;

    CMatrix p_factor(const BlockSpec& s) const;
    CMatrix reassemble(const BlockSpec& s) const;
};

struct PknOptions {
    int max_iter = 60;
    int restarts = 8;
    double fd_step = 1e-6;
    double tol = 1e-13;
    bool allow_closed_forms = true;
};

PKNTriple pkn_factorize(const CMatrix& g, const RootDatum& rd, PknSign sign = PknSign::Plus,
                        const PknOptions& opt = {});
PKNTriple pkn_factorize(const GroupElement& g, const RootDatum& rd, PknSign sign = PknSign::Plus,
                        const PknOptions& opt = {});

PKNTriple torus_pkn_closed_form(const std::vector<double>& t, const RootDatum& rd);
// Valid on SL(2,C) in the SU(1,1) realization; NotInCell iff c + d = 0.
PKNTriple sl2_pkn_closed_form(const CMatrix& g, const RootDatum& rd);

// Detects g = exp(sum t_j x_j); returns false otherwise.
bool torus_coordinates(const CMatrix& g, const RootDatum& rd, std::vector<double>& t);

bool pkn_membership(const CMatrix& g, int j, const RootDatum& rd);

PKNTriple sigma_mirror(const PKNTriple& t, const RootDatum& rd);

// Right-shifts the k-side by h = exp(sum a_k yplus_k) in K_C P^+ cap N_C: n -> h n.
PKNTriple regauge(const PKNTriple& t, const CVector& a, const RootDatum& rd);

CMatrix exp_nc(const CMatrix& x);

}  // namespace wkl
