#pragma once

#include <map>
#include <string>
#include <vector>

#include "qde/partition.hpp"

namespace qde {

// Homogeneous element of the Fock space: sum of c_mu |mu>, all |mu| = energy.
class FockVector {
public:
    using Map = std::map<Partition, RatFunc, BasisOrder>;

    explicit FockVector(int energy = 0) : n_(energy) {}
    static FockVector basis(const Partition& mu);
    static FockVector vacuum() { return basis(Partition()); }
    // Column in the order of partitions(n).
    static FockVector from_column(int n, const std::vector<RatFunc>& col);

    int energy() const { return n_; }
    const Map& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    RatFunc coefficient(const Partition& mu) const;
    void set(const Partition& mu, const RatFunc& c);
    void add(const Partition& mu, const RatFunc& c);
    std::vector<RatFunc> column() const;

    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    FockVector& operator*=(const RatFunc& a);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const RatFunc& a, FockVector v) { return v *= a; }
    bool operator==(const FockVector& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const FockVector& o) const { return !(*this == o); }

    FockVector map_coefficients(RatFunc (*f)(const RatFunc&)) const;
    std::string str() const;

private:
    int n_;
    Map c_;
    void check(const Partition& mu) const;
};

// alpha_{-m}|mu> = m (m_m(mu)+1) |mu + m>,  alpha_k|mu> = |mu - k> if k is a part.
FockVector apply_alpha(int k, const FockVector& v);
FockVector power_sum(const Partition& mu); // p_mu = z(mu)|mu>
int energy(const FockVector& v);

// t_i -> -t_i (q is fixed)
RatFunc bar(const RatFunc& f);
// T_i -> 1/T_i
RatFunc bar_T(const RatFunc& f);

RatFunc inner_herm(const FockVector& v, const FockVector& w);
// Result on the doubled lattice: variable T_i in the result stands for T_i^{1/2}.
// With inputs_doubled the coefficients of v and w are already on that lattice.
RatFunc inner_KT(const FockVector& v, const FockVector& w, bool inputs_doubled = false);
RatFunc double_lattice(const RatFunc& f);                 // T_i -> T_i^2
bool undouble_lattice(const RatFunc& f, RatFunc& out);    // inverse when all exponents even

struct CheckReport {
    bool ok = true;
    std::string failure;
};

// (alpha_k)^* = (t1 t2)^{sgn k} alpha_{-k}, on all basis pairs up to energy n.
CheckReport adjoint_check(int k, int n);

} // namespace qde
