#include "qde/dpoly.hpp"

#include <algorithm>
#include <tuple>

#include "qde/error.hpp"

namespace qde {

Poly Linear::to_poly() const {
    return Poly(Rational(a)) + Poly(Rational(b1)) * Poly::variable(Var::t1) +
           Poly(Rational(b2)) * Poly::variable(Var::t2);
}

Linear Linear::primitive(Integer& scale) const {
    if (is_constant()) {
        scale = a;
        return Linear{1, 0, 0};
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), b1.get_mpz_t(), b2.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if ((b1 != 0 ? sgn(b1) : sgn(b2)) < 0) g = -g;
    scale = g;
    return Linear{a / g, b1 / g, b2 / g};
}

bool Linear::operator<(const Linear& o) const {
    return std::tie(a, b1, b2) < std::tie(o.a, o.b1, o.b2);
}

DPoly::DPoly(long c) : DPoly(Integer(c)) {}

DPoly::DPoly(const Integer& c) {
    if (c != 0) {
        d1_ = d2_ = 0;
        c_ = {c};
    }
}

DPoly::DPoly(const Linear& l) {
    reshape(l.b1 != 0 ? 1 : 0, l.b2 != 0 ? 1 : 0);
    ref(0, 0) = l.a;
    if (l.b1 != 0) ref(1, 0) = l.b1;
    if (l.b2 != 0) ref(0, 1) = l.b2;
    trim();
}

DPoly DPoly::from_poly(const Poly& p) {
    DPoly r;
    if (p.is_zero()) return r;
    unsigned allowed = (1u << int(Var::t1)) | (1u << int(Var::t2));
    if (p.variables() & ~allowed) throw Error("dense polynomial in t1, t2 expected, got " + p.str());
    r.reshape(p.degree(Var::t1), p.degree(Var::t2));
    for (const auto& [m, c] : p.terms()) {
        if (c.get_den() != 1) throw Error("integer coefficients expected in " + p.str());
        r.ref(m.exponent(Var::t1), m.exponent(Var::t2)) = c.get_num();
    }
    return r;
}

Poly DPoly::to_poly() const {
    std::vector<Poly::Term> terms;
    for (int i = 0; i <= d1_; ++i)
        for (int j = 0; j <= d2_; ++j) {
            const Integer& x = ref(i, j);
            if (x == 0) continue;
            std::array<int, kNumVars> e{};
            e[int(Var::t1)] = i;
            e[int(Var::t2)] = j;
            terms.emplace_back(Monomial(e), Rational(x));
        }
    return Poly::from_terms(std::move(terms));
}

Integer DPoly::at(int i, int j) const {
    if (i < 0 || j < 0 || i > d1_ || j > d2_) return 0;
    return ref(i, j);
}

size_t DPoly::terms() const {
    size_t n = 0;
    for (const auto& x : c_)
        if (x != 0) ++n;
    return n;
}

void DPoly::reshape(int d1, int d2) {
    if (d1 == d1_ && d2 == d2_) return;
    std::vector<Integer> c(size_t(d1 + 1) * (d2 + 1));
    for (int i = 0; i <= std::min(d1, d1_); ++i)
        for (int j = 0; j <= std::min(d2, d2_); ++j) c[size_t(i) * (d2 + 1) + j].swap(ref(i, j));
    c_.swap(c);
    d1_ = d1;
    d2_ = d2;
}

void DPoly::trim() {
    int n1 = -1, n2 = -1;
    for (int i = 0; i <= d1_; ++i)
        for (int j = 0; j <= d2_; ++j)
            if (ref(i, j) != 0) {
                n1 = std::max(n1, i);
                n2 = std::max(n2, j);
            }
    if (n1 < 0) {
        d1_ = d2_ = -1;
        c_.clear();
        return;
    }
    reshape(n1, n2);
}

DPoly& DPoly::operator+=(const DPoly& o) {
    if (o.is_zero()) return *this;
    reshape(std::max(d1_, o.d1_), std::max(d2_, o.d2_));
    for (int i = 0; i <= o.d1_; ++i)
        for (int j = 0; j <= o.d2_; ++j)
            if (o.ref(i, j) != 0) ref(i, j) += o.ref(i, j);
    trim();
    return *this;
}

DPoly& DPoly::operator-=(const DPoly& o) {
    if (o.is_zero()) return *this;
    reshape(std::max(d1_, o.d1_), std::max(d2_, o.d2_));
    for (int i = 0; i <= o.d1_; ++i)
        for (int j = 0; j <= o.d2_; ++j)
            if (o.ref(i, j) != 0) ref(i, j) -= o.ref(i, j);
    trim();
    return *this;
}

DPoly& DPoly::operator*=(const Integer& s) {
    if (s == 0) return *this = DPoly();
    for (auto& x : c_)
        if (x != 0) x *= s;
    return *this;
}

DPoly DPoly::operator-() const {
    DPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

namespace {

size_t max_bits(const std::vector<Integer>& c) {
    size_t m = 0;
    for (const auto& x : c)
        if (x != 0) m = std::max(m, mpz_sizeinbase(x.get_mpz_t(), 2));
    return m;
}

// Coefficients placed in slots of `limbs` limbs at slot index i * stride + j.
Integer pack(const std::vector<Integer>& c, int d1, int d2, int stride, size_t limbs, size_t slots) {
    std::vector<mp_limb_t> pos(slots * limbs, 0), neg(slots * limbs, 0);
    bool any_neg = false;
    for (int i = 0; i <= d1; ++i)
        for (int j = 0; j <= d2; ++j) {
            const Integer& x = c[size_t(i) * (d2 + 1) + j];
            int s = sgn(x);
            if (s == 0) continue;
            std::vector<mp_limb_t>& dst = s > 0 ? pos : neg;
            any_neg |= s < 0;
            size_t at = (size_t(i) * stride + j) * limbs;
            size_t n = mpz_size(x.get_mpz_t());
            for (size_t k = 0; k < n; ++k) dst[at + k] = mpz_getlimbn(x.get_mpz_t(), k);
        }
    Integer r, m;
    mpz_import(r.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0, 0, pos.data());
    if (any_neg) {
        mpz_import(m.get_mpz_t(), neg.size(), -1, sizeof(mp_limb_t), 0, 0, neg.data());
        r -= m;
    }
    return r;
}

} // namespace

void DPoly::add_product(const DPoly& a, const DPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    const size_t ta = a.terms(), tb = b.terms();
    if (std::min(ta, tb) > 48) {
        // Kronecker substitution t1 -> X^stride, t2 -> X with X = 2^(64 limbs).
        const int D1 = a.d1_ + b.d1_, D2 = a.d2_ + b.d2_;
        const int stride = D2 + 1;
        size_t bits = max_bits(a.c_) + max_bits(b.c_) + mpz_sizeinbase(Integer(std::min(ta, tb)).get_mpz_t(), 2) + 2;
        size_t limbs = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
        size_t slots = size_t(D1 + 1) * stride;
        Integer pa = pack(a.c_, a.d1_, a.d2_, stride, limbs, slots);
        Integer pb = pack(b.c_, b.d1_, b.d2_, stride, limbs, slots);
        Integer prod = pa * pb;
        const bool negative = sgn(prod) < 0;
        if (negative) prod = -prod;
        reshape(std::max(d1_, D1), std::max(d2_, D2));
        std::vector<mp_limb_t> digits(slots * limbs + 1, 0);
        size_t n = mpz_size(prod.get_mpz_t());
        for (size_t k = 0; k < n && k < digits.size(); ++k) digits[k] = mpz_getlimbn(prod.get_mpz_t(), k);
        Integer v, full;
        mpz_setbit(full.get_mpz_t(), limbs * GMP_NUMB_BITS);
        Integer half = full / 2;
        int carry = 0;
        for (size_t s = 0; s < slots; ++s) {
            mpz_import(v.get_mpz_t(), limbs, -1, sizeof(mp_limb_t), 0, 0, &digits[s * limbs]);
            if (carry) v += 1;
            carry = 0;
            if (v >= half) {
                v -= full;
                carry = 1;
            }
            if (v == 0) continue;
            int i = int(s / stride), j = int(s % stride);
            if (negative) ref(i, j) -= v;
            else ref(i, j) += v;
        }
        trim();
        return;
    }
    reshape(std::max(d1_, a.d1_ + b.d1_), std::max(d2_, a.d2_ + b.d2_));
    const DPoly& small = a.terms() <= b.terms() ? a : b;
    const DPoly& big = &small == &a ? b : a;
    for (int i = 0; i <= small.d1_; ++i)
        for (int j = 0; j <= small.d2_; ++j) {
            const Integer& s = small.ref(i, j);
            if (s == 0) continue;
            for (int k = 0; k <= big.d1_; ++k) {
                const Integer* row = &big.ref(k, 0);
                Integer* out = &ref(i + k, j);
                for (int l = 0; l <= big.d2_; ++l)
                    if (row[l] != 0) mpz_addmul(out[l].get_mpz_t(), s.get_mpz_t(), row[l].get_mpz_t());
            }
        }
    trim();
}

DPoly operator*(const DPoly& a, const DPoly& b) {
    DPoly r;
    r.add_product(a, b);
    return r;
}

DPoly& DPoly::mul_linear(const Linear& l) {
    if (is_zero()) return *this;
    if (l.is_constant()) return *this *= l.a;
    DPoly src = std::move(*this);
    *this = DPoly();
    reshape(src.d1_ + (l.b1 != 0), src.d2_ + (l.b2 != 0));
    for (int i = 0; i <= src.d1_; ++i)
        for (int j = 0; j <= src.d2_; ++j) {
            const Integer& x = src.ref(i, j);
            if (x == 0) continue;
            if (l.a != 0) mpz_addmul(ref(i, j).get_mpz_t(), x.get_mpz_t(), l.a.get_mpz_t());
            if (l.b1 != 0) mpz_addmul(ref(i + 1, j).get_mpz_t(), x.get_mpz_t(), l.b1.get_mpz_t());
            if (l.b2 != 0) mpz_addmul(ref(i, j + 1).get_mpz_t(), x.get_mpz_t(), l.b2.get_mpz_t());
        }
    trim();
    return *this;
}

bool DPoly::divide_linear(const Linear& l, DPoly& quotient) const {
    if (is_zero()) {
        quotient = DPoly();
        return true;
    }
    if (l.is_constant()) {
        if (l.a == 0) throw ZeroDenominator("division by zero");
        for (const auto& x : c_)
            if (!mpz_divisible_p(x.get_mpz_t(), l.a.get_mpz_t())) return false;
        quotient = *this;
        quotient.divide_exact(l.a);
        return true;
    }
    // Peel off the leading variable: b2 != 0 divides along t2, else along t1.
    const bool along2 = l.b2 != 0;
    const Integer& lead = along2 ? l.b2 : l.b1;
    DPoly rem = *this;
    DPoly q;
    if (along2) {
        if (d2_ < 1) return false;
        q.reshape(d1_, d2_ - 1);
    } else {
        if (d1_ < 1) return false;
        q.reshape(d1_ - 1, d2_);
    }
    Integer t;
    // Process monomials from the top degree in the leading variable downwards.
    if (along2) {
        for (int j = d2_; j >= 1; --j)
            for (int i = d1_; i >= 0; --i) {
                Integer& r = rem.ref(i, j);
                if (r == 0) continue;
                if (!mpz_divisible_p(r.get_mpz_t(), lead.get_mpz_t())) return false;
                mpz_divexact(t.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t());
                q.ref(i, j - 1) = t;
                r = 0;
                if (l.a != 0) mpz_submul(rem.ref(i, j - 1).get_mpz_t(), t.get_mpz_t(), l.a.get_mpz_t());
                if (l.b1 != 0) {
                    if (i + 1 > d1_) return false;
                    mpz_submul(rem.ref(i + 1, j - 1).get_mpz_t(), t.get_mpz_t(), l.b1.get_mpz_t());
                }
            }
        for (int i = 0; i <= d1_; ++i)
            if (rem.ref(i, 0) != 0) return false;
    } else {
        for (int i = d1_; i >= 1; --i)
            for (int j = d2_; j >= 0; --j) {
                Integer& r = rem.ref(i, j);
                if (r == 0) continue;
                if (!mpz_divisible_p(r.get_mpz_t(), lead.get_mpz_t())) return false;
                mpz_divexact(t.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t());
                q.ref(i - 1, j) = t;
                r = 0;
                if (l.a != 0) mpz_submul(rem.ref(i - 1, j).get_mpz_t(), t.get_mpz_t(), l.a.get_mpz_t());
            }
        for (int j = 0; j <= d2_; ++j)
            if (rem.ref(0, j) != 0) return false;
    }
    q.trim();
    quotient = std::move(q);
    return true;
}

void DPoly::divide_exact(const Integer& s) {
    for (auto& x : c_)
        if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.get_mpz_t());
}

DPoly DPoly::bar() const {
    DPoly r = *this;
    for (int i = 0; i <= d1_; ++i)
        for (int j = 0; j <= d2_; ++j)
            if ((i + j) % 2) r.ref(i, j) = -r.ref(i, j);
    return r;
}

DPoly DPoly::swap_vars() const {
    DPoly r;
    if (is_zero()) return r;
    r.reshape(d2_, d1_);
    for (int i = 0; i <= d1_; ++i)
        for (int j = 0; j <= d2_; ++j) r.ref(j, i) = ref(i, j);
    return r;
}

Integer DPoly::evaluate(const Integer& t1, const Integer& t2) const {
    Integer s = 0;
    for (int i = d1_; i >= 0; --i) {
        Integer row = 0;
        for (int j = d2_; j >= 0; --j) row = row * t2 + ref(i, j);
        s = s * t1 + row;
    }
    return s;
}

Rational DPoly::evaluate(const Rational& t1, const Rational& t2) const {
    Rational s = 0;
    for (int i = d1_; i >= 0; --i) {
        Rational row = 0;
        for (int j = d2_; j >= 0; --j) row = row * t2 + Rational(ref(i, j));
        s = s * t1 + row;
    }
    return s;
}

bool DPoly::operator==(const DPoly& o) const {
    return d1_ == o.d1_ && d2_ == o.d2_ && c_ == o.c_;
}

} // namespace qde
