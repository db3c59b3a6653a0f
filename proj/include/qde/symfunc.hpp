#pragma once

#include <vector>

#include "qde/fock.hpp"
#include "qde/matrix.hpp"

namespace qde {

// All vectors are in |mu> coordinates, where p_mu = z(mu)|mu>.

struct JackVector {
    Partition lambda;
    FockVector vector;
};

// Eigenvector of M_D(0) with eigenvalue -c(lambda); coefficient of |1^n> is n!(t1 t2)^n.
JackVector jack(const Partition& lambda);
RatFunc jack_norm(const Partition& lambda); // product of tangent weights

CheckReport check_jack_eigen(const Partition& lambda);
CheckReport check_jack_norm(const Partition& lambda);    // inner_herm(J, J) == jack_norm
CheckReport check_jack_symmetry(const Partition& lambda); // J^lambda(t2, t1) == J^{lambda'}(t1, t2)
CheckReport check_jack_orthogonality(int n);
// Coefficient of |mu> is (t1 t2)^{l(mu)} times a form of degree |lambda| - l(mu).
CheckReport degree_structure_check(const Partition& lambda);

// Symmetric group character chi^lambda at cycle type nu (Murnaghan-Nakayama).
Integer character(const Partition& lambda, const Partition& nu);
FockVector schur(const Partition& lambda);

// Row nu, column lambda: coefficient of m_lambda in p_nu.  Basis order of partitions(n).
Matrix<Rational> power_to_monomial(int n);
// Inverse transition: row lambda, column nu: coefficient of p_nu in m_lambda.
Matrix<Rational> monomial_to_power(int n);
FockVector monomial(const Partition& mu);
// Coefficients of v in the monomial basis, in the order of partitions(n).
std::vector<RatFunc> monomial_coefficients(const FockVector& v);

// Macdonald parameters (Q, T) are carried by the variables (T1, T2),
// which is Haiman's identification (q, t) = (T1, T2).
struct MacdonaldVector {
    Partition lambda;
    FockVector vector;
    std::vector<RatFunc> mono; // monomial-basis coefficients
};

// <p_lambda, p_mu>_{Q,T} = delta z(lambda) prod (1 - Q^{lambda_i})/(1 - T^{lambda_i})
RatFunc macdonald_inner(const FockVector& v, const FockVector& w);
MacdonaldVector macdonald_P(const Partition& lambda);
CheckReport check_macdonald_triangular(const Partition& lambda);
CheckReport check_macdonald_orthogonality(int n);
CheckReport check_schur_limit(int n); // P(Q = T) == s

// Upsilon|mu> = prod (1 - T2^{-mu_i})^{-1} |mu>
FockVector upsilon(const FockVector& v, bool invert = false);
FockVector haiman_H(const Partition& lambda);
// Columns H^lambda in the order of partitions(n).
Matrix<RatFunc> haiman_matrix(int n);
// det of the H matrix at a rational point (T1, T2); nonzero there implies nonzero identically.
Rational haiman_det_at(int n, const Rational& T1, const Rational& T2);

// J_lambda at alpha = -t1/t2: jack(lambda) with |mu> divided by t2^n t1^{l(mu)}.
FockVector classical_jack(const Partition& lambda);
// Monic Jack P^{(alpha)}_lambda, monomial coefficients.
std::vector<RatFunc> monic_jack_monomial(const Partition& lambda);

} // namespace qde
