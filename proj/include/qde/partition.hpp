#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qde/ratfunc.hpp"

namespace qde {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts); // must be weakly decreasing and positive
    static Partition parse(const std::string& s); // "2,1"; "-" or "" for empty

    const std::vector<int>& parts() const { return p_; }
    int size() const { return size_; }
    int length() const { return int(p_.size()); }
    int operator[](int i) const { return p_[i]; }
    int multiplicity(int k) const;
    bool contains_part(int k) const { return multiplicity(k) > 0; }

    Partition add_part(int k) const;
    Partition remove_part(int k) const; // requires contains_part(k)
    Partition transpose() const;

    std::string str() const;

    bool operator==(const Partition& o) const { return p_ == o.p_; }
    bool operator!=(const Partition& o) const { return p_ != o.p_; }

private:
    std::vector<int> p_;
    int size_ = 0;
};

// Basis order: decreasing lexicographic, so (3) before (2,1) before (1,1,1).
struct BasisOrder {
    bool operator()(const Partition& a, const Partition& b) const { return a.parts() > b.parts(); }
};

std::vector<Partition> partitions(int n);
long partition_count(int n);
int index_of(const std::vector<Partition>& basis, const Partition& mu);

Integer zee(const Partition& mu);
std::pair<int, int> arm_leg(const Partition& lambda, int i, int j); // 1-based box
RatFunc content_sum(const Partition& lambda);
Rational content_sum(const Partition& lambda, const Rational& t1, const Rational& t2);
std::vector<RatFunc> tangent_weights(const Partition& lambda);
Integer hook_product(const Partition& lambda);
int nstat(const Partition& lambda);
int f2(const Partition& lambda);

enum class Dominance { leq, greater, incomparable };
// leq: lambda is dominated by (or equal to) mu; greater: mu strictly below lambda.
Dominance dominance(const Partition& lambda, const Partition& mu);
bool dominated_strictly(const Partition& lambda, const Partition& mu);
bool content_order_lt(const Partition& lambda, const Partition& mu);

} // namespace qde
