#pragma once

#include <optional>
#include <vector>

#include "qde/dpoly.hpp"
#include "qde/fock.hpp"
#include "qde/operator.hpp"

namespace qde {

// M_D(q) = M0 + sum_{m >= 1} q^m D_m with D_m diagonal.
struct MDTaylor {
    OperatorMatrix M0;
    std::vector<std::vector<RatFunc>> D; // D[m], m = 0..N; D[0] unused
};
MDTaylor md_taylor(int n, int N);

// Y^lambda(q) q^{-c(lambda)} = sum_k u_k q^{k - c(lambda)} with u_0 = J^lambda.
// Coefficients are stored fraction-free: u_k = w_k / Delta_k with
// Delta_k = prod_{j <= k} det(j - c(lambda) - M_D(0)).
class SeriesSolution {
public:
    Partition lambda;
    RatFunc exponent;                      // -c(lambda)
    std::optional<int> level;              // t2 = level - t1 when set
    std::vector<std::vector<DPoly>> w;     // w[k][i], i in the order of partitions(n)
    std::vector<std::vector<Linear>> dets; // dets[k]: linear factors of det at step k (k >= 1)

    int order() const { return int(w.size()) - 1; }
    int energy() const { return lambda.size(); }
    FockVector coefficient(int k) const;   // u_k, reduced
    bool vanishes(int k) const;
    // Delta_k / Delta_j as a product of linear factors.
    DPoly delta_ratio(int k, int j) const;
};

SeriesSolution frobenius(const Partition& lambda, int N);
// Exact in t1 with t2 = level - t1; throws ResonanceAtSpecializedParameters on an
// identically vanishing determinant.
SeriesSolution frobenius_level(const Partition& lambda, int level, int N);
// u_0..u_N at rational (t1, t2), columns in the order of partitions(n).
std::vector<std::vector<Rational>> frobenius_point(const Partition& lambda, int N, const Rational& t1,
                                                   const Rational& t2);

struct ResidualReport {
    bool ok = true;
    int verified = -1;      // highest order verified
    int first_failure = -1;
    std::string failure;
};
// Substitutes the truncated series into q dPsi/dq = M_D Psi with M_D cleared of denominators.
ResidualReport check_ode_residual(const SeriesSolution& s);

// sum_{a+b=k} <u_a^lambda, u_b^mu> == delta_{lambda mu} ||J^lambda||^2 delta_{k0}, k = 0..N.
ResidualReport check_orthogonality(const Partition& lambda, const Partition& mu, int N);
ResidualReport check_orthogonality(const SeriesSolution& a, const SeriesSolution& b);

// Y^lambda(t2, t1) == Y^{lambda'}(t1, t2) order by order.
CheckReport check_series_symmetry(const SeriesSolution& a, const SeriesSolution& a_transposed);

struct LevelReport {
    bool terminated = false;
    int degree = -1; // last nonzero order when terminated
    int order = 0;
};
LevelReport check_polynomial_level(const Partition& lambda, int level, int N);

} // namespace qde
