#pragma once

#include <string>
#include <vector>

#include "qde/fock.hpp"
#include "qde/nummatrix.hpp"

namespace qde {

struct Params {
    Rational t1, t2;
    Params shifted(long a, long b) const { return {t1 - a, t2 - b}; } // (t1 - a, t2 - b)
    Params swapped() const { return {t2, t1}; }
};

struct NumericConfig {
    mpfr_prec_t prec = 256;
    int series_order = 30;
    int taylor_order = 0; // 0: chosen from the tolerance, within 16..32
    double tol_bits = 0;  // transport tolerance 2^-tol_bits; 0 means prec / 2
    double tolerance_bits() const { return tol_bits > 0 ? tol_bits : double(prec) / 2; }
};

// Finite singular points of the energy-n equation: 0 and the roots zeta.
std::vector<Complex> finite_singularities(int n, mpfr_prec_t prec);

// Polygonal path in the q-plane.
struct PathSpec {
    std::vector<Complex> points;
    double clearance = 1e-3;

    static PathSpec segment(const Complex& a, const Complex& b) { return {{a, b}}; }
    PathSpec reversed() const;
    PathSpec then(const PathSpec& o) const; // o must start where this ends
    // Throws SingularityTooClose if a segment passes within clearance of a singular point.
    void validate(int n) const;
    // Change of log q along the path.
    Complex log_change() const;
};

// q d/dq Psi = M_D(q) Psi with numeric t, evaluated through exact rational entries.
class NumericQDE {
public:
    NumericQDE(int n, const Params& t, mpfr_prec_t prec);
    int energy() const { return n_; }
    int dim() const { return d_; }
    NumMatrix M_D(const Complex& q) const;
    // Taylor coefficients of M_D(q)/q at q = c + h, orders 0..K.
    std::vector<NumMatrix> taylor(const Complex& c, int K) const;
    // Taylor coefficients of tr M_D(q)/q.
    std::vector<Complex> trace_taylor(const Complex& c, int K) const;
    const std::vector<Complex>& singularities() const { return sing_; }
    Real distance_to_singularity(const Complex& q) const;

private:
    struct Entry {
        std::vector<Complex> num, den; // coefficients in q, den already multiplied by q
        bool zero = true;
    };
    int n_, d_;
    mpfr_prec_t prec_;
    std::vector<Entry> e_;
    std::vector<Complex> sing_;
    const Entry& at(int i, int j) const { return e_[size_t(i) * d_ + j]; }
};

struct TransportResult {
    NumMatrix value;
    Complex log_det_change; // integral of tr M_D dq/q along the path
    int steps = 0;
};

// Analytic continuation of the solution with the given value at the path start.
TransportResult transport(const NumericQDE& qde, const PathSpec& path, const NumMatrix& initial,
                          const NumericConfig& cfg);
NumMatrix transport(int n, const Params& t, const PathSpec& path, const NumMatrix& initial,
                    const NumericConfig& cfg);

// Phi(q_end) with Phi(-1) = 1; the default path is the straight segment from -1.
NumMatrix fundamental_Phi(int n, const Params& t, const Complex& q_end, const NumericConfig& cfg);
TransportResult fundamental_Phi(int n, const Params& t, const PathSpec& path, const NumericConfig& cfg);

// Columns Y^lambda(q0) in the order of partitions(n).  The Frobenius series is summed
// at a small negative q_s and transported along q_s -> waypoints -> q0.
NumMatrix Y_at(int n, const Params& t, const Complex& q0, const NumericConfig& cfg,
               const std::vector<Complex>& waypoints = {});
// Y(q) and q dY/dq from the truncated series directly; |q| must be small.
NumMatrix Y_series(int n, const Params& t, const Complex& q, const NumericConfig& cfg, NumMatrix* q_dY = nullptr);
// The q_s used by Y_at (a negative rational).
Rational series_matching_point(int n, const Params& t, const NumericConfig& cfg);

// Which value of log q is used in q^{-c} at q = -1.
enum class LogBranch {
    principal, // log(-1) = +i pi
    real_axis  // q^{-c} taken as (-q)^{-c}, equal to 1 at q = -1
};

NumMatrix gw_gluing(int n, const Params& t, mpfr_prec_t prec);
NumMatrix gamma_op(int n, const Params& t, mpfr_prec_t prec);
// Indexed by lambda; q^{-c} = exp(-c log_q).
NumMatrix dt_gluing(int n, const Params& t, const Complex& log_q, mpfr_prec_t prec);
NumMatrix dt_gluing_at_minus_one(int n, const Params& t, LogBranch branch, mpfr_prec_t prec);

// Loop based at -1 around a finite singular point, or around infinity when
// `infinity` is set.  Positively oriented about the enclosed point.
PathSpec loop_path(int n, const Complex& zeta, mpfr_prec_t prec);
PathSpec loop_at_infinity(mpfr_prec_t prec);
// Generators around every finite singular point, sorted so that their product
// (first loop applied first) is the loop enclosing all of them.
std::vector<Complex> generator_order(int n, mpfr_prec_t prec);

// Propagator of the loop acting on the fiber at q = -1.
NumMatrix monodromy(int n, const Params& t, const PathSpec& loop, const NumericConfig& cfg);
NumMatrix monodromy(int n, const Params& t, const Complex& zeta, const NumericConfig& cfg);
// Gamma^{-1} P Gamma, invariant under t_i -> t_i + 1.
NumMatrix gamma_conjugate(int n, const Params& t, const NumMatrix& P);

struct Intertwiner {
    NumMatrix gw, dt;
    Real difference; // relative max-entry difference
};
Intertwiner intertwiner_S(long a, long b, int n, const Params& t, const Complex& q0, const NumericConfig& cfg);
NumMatrix intertwiner_DT(long a, long b, int n, const Params& t, const Complex& q0, const NumericConfig& cfg);

struct LaurentFit {
    int low = 0, high = 0;                 // window of exponents
    std::vector<NumMatrix> coefficients;   // coefficients[k - low]
    Real residual;                         // relative
};
// Samples S(a, b) on |q| = radius and fits powers q^low..q^high.
LaurentFit laurent_fit(long a, long b, int n, const Params& t, int degree, const NumericConfig& cfg,
                       int samples = 64, const Rational& radius = Rational(1, 2));

// H^lambda at T_i = exp(2 pi i t_i), columns in the order of partitions(n).
NumMatrix haiman_numeric(int n, const Params& t, mpfr_prec_t prec);
// O(a) = H diag(exp(-2 pi i a c(lambda))) H^{-1}
NumMatrix O_line(int n, const Params& t, const Rational& a, mpfr_prec_t prec);

struct ConnectReport {
    NumMatrix lhs, rhs;
    Real error; // relative max-entry error
};
ConnectReport verify_connect(int n, const Params& t, const NumericConfig& cfg,
                             LogBranch branch = LogBranch::real_axis);

enum class Context { Tmonodr, semisimple, connect, resonance };
struct Genericity {
    bool ok = true;
    std::string description;
};
Genericity genericity(int n, const Params& t, Context context);

struct TpolynomReport {
    Real periodicity; // max over generators of |A(t1+1, t2) - A(t1, t2)|, relative
    Real unitarity;   // max over generators of |A^* K A - K|, relative
    std::vector<NumMatrix> generators; // A = Gamma^{-1} P Gamma at (t1, t2)
};
TpolynomReport verify_Tpolynom(int n, const Params& t, const NumericConfig& cfg);
// Max relative commutator norm among the generators at the given parameters.
Real commutator_defect(int n, const Params& t, const NumericConfig& cfg);

struct TmonodrReport {
    Real error; // max over generators of |P(t1, t2 - 1) - S^{-1} P(t) S|, relative
};
TmonodrReport verify_Tmonodr(int n, const Params& t, const NumericConfig& cfg); // throws ExcludedParameter

struct ScatteringReport {
    NumMatrix involution;  // (-1)^{l} in the H basis
    Real off_pattern;      // entries off lambda -> lambda', relative to the largest entry
    Real residual;         // (-1)^l Y(1/q) q^c as a solution, relative
};
ScatteringReport scattering(int n, const Params& t, const NumericConfig& cfg);

// Hermitian Gram diagonal <<mu|mu>> at T_i = exp(2 pi i t_i).
std::vector<Complex> herm_gram(int n, const Params& t, mpfr_prec_t prec);

Complex evaluate(const RatFunc& f, const std::vector<std::pair<Var, Complex>>& point, mpfr_prec_t prec);

} // namespace qde
