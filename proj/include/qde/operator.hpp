#pragma once

#include <string>
#include <vector>

#include "qde/fock.hpp"
#include "qde/matrix.hpp"

namespace qde {

// Entry (rho, sigma) is the coefficient of |rho> in (operator)|sigma>.
struct OperatorMatrix {
    int n = 0;
    std::vector<Partition> basis;
    Matrix<RatFunc> m;

    OperatorMatrix() = default;
    explicit OperatorMatrix(int energy);
    int dim() const { return int(basis.size()); }
    RatFunc& operator()(int i, int j) { return m(i, j); }
    const RatFunc& operator()(int i, int j) const { return m(i, j); }
    FockVector apply(const FockVector& v) const;
    OperatorMatrix substitute(Var v, const RatFunc& value) const;
    OperatorMatrix substitute(Var v, const Rational& value) const;
    bool operator==(const OperatorMatrix& o) const { return n == o.n && m == o.m; }
};

// A_k(q) = ((-q)^k + 1)/((-q)^k - 1)
RatFunc A_factor(int k);

OperatorMatrix build_M(int n);
OperatorMatrix build_MD(int n);
OperatorMatrix build_M0(int n);    // M_D at q = 0
OperatorMatrix build_Mq0(int n);   // M at q = 0 (no energy subtraction)
OperatorMatrix build_CS(int n, const RatFunc& theta);
// Diagonal q-dependent part of M_D: M_D = M0 + sum_{m>=1} D_m q^m.
std::vector<RatFunc> MD_diagonal_coefficient(int n, int m);

struct MDCSReport {
    bool ok = false;
    RatFunc shift;         // LHS - RHS = shift * identity
    std::string failure;
};
// M(0) = -t1^{l+1} Delta_CS|_{theta=-t2/t1} t1^{-l}
MDCSReport check_MDCS(int n);

CheckReport check_skew(const OperatorMatrix& M);
CheckReport check_skew(int n);
CheckReport check_inversion(int n);

// zeta = -exp(2 pi i r) with r = j/d in lowest terms, 2 <= d <= n.
struct RootPoint {
    Rational r;
    int order() const { return int(r.get_den().get_si()); }
};
struct SingularPoints {
    bool zero = true, infinity = true;
    std::vector<RootPoint> roots;
};
SingularPoints singular_points(int n);
// (t1+t2) sum_{k: (-zeta)^k = 1} alpha_{-k} alpha_k; throws NotASingularRoot.
OperatorMatrix residue_at_root(int n, const RootPoint& zeta);
// Residue of q^{-1} M_D at zeta computed in Q(zeta); must be rational and diagonal.
OperatorMatrix residue_exact(int n, const RootPoint& zeta);
// Residue of q^{-1} M_D dq at infinity: -M_D(q = infinity).
OperatorMatrix residue_at_infinity(int n);
CheckReport check_residues(int n);      // residue_exact == residue_at_root for every root
CheckReport check_residue_sum(int n);   // Fuchsian sum over 0, roots, infinity vanishes
// det(M0 + c(lambda)) == 0 for every lambda, evaluated exactly.
CheckReport check_M0_spectrum(int n);

} // namespace qde
