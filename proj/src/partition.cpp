#include "qde/partition.hpp"

#include <algorithm>
#include <sstream>

#include "qde/error.hpp"

namespace qde {

Partition::Partition(std::vector<int> parts) : p_(std::move(parts)) {
    for (size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] <= 0) throw Error("partition parts must be positive");
        if (i && p_[i] > p_[i - 1]) throw Error("partition parts must be weakly decreasing");
        size_ += p_[i];
    }
}

Partition Partition::parse(const std::string& s) {
    if (s.empty() || s == "-" || s == "()") return Partition();
    std::string body = s;
    if (body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    std::vector<int> parts;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            while (used < item.size() && item[used] == ' ') ++used;
            if (used != item.size()) throw ParseError("bad partition: " + s);
            parts.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("bad partition: " + s);
        }
    }
    std::sort(parts.rbegin(), parts.rend());
    try {
        return Partition(parts);
    } catch (const Error&) {
        throw ParseError("bad partition: " + s);
    }
}

int Partition::multiplicity(int k) const { return int(std::count(p_.begin(), p_.end(), k)); }

Partition Partition::add_part(int k) const {
    std::vector<int> v = p_;
    v.insert(std::upper_bound(v.begin(), v.end(), k, std::greater<int>()), k);
    return Partition(std::move(v));
}

Partition Partition::remove_part(int k) const {
    std::vector<int> v = p_;
    auto it = std::find(v.begin(), v.end(), k);
    if (it == v.end()) throw Error("part not present");
    v.erase(it);
    return Partition(std::move(v));
}

Partition Partition::transpose() const {
    std::vector<int> t;
    if (!p_.empty())
        for (int j = 1; j <= p_[0]; ++j) {
            int c = 0;
            for (int x : p_)
                if (x >= j) ++c;
            t.push_back(c);
        }
    return Partition(std::move(t));
}

std::string Partition::str() const {
    if (p_.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < p_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p_[i]);
    }
    return s;
}

namespace {

void gen(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen(n - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    gen(n, n, cur, out);
    return out;
}

long partition_count(int n) {
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = k; m <= n; ++m) p[m] += p[m - k];
    return n < 0 ? 0 : p[n];
}

int index_of(const std::vector<Partition>& basis, const Partition& mu) {
    auto it = std::lower_bound(basis.begin(), basis.end(), mu, BasisOrder());
    if (it == basis.end() || *it != mu) return -1;
    return int(it - basis.begin());
}

Integer zee(const Partition& mu) {
    Integer z = 1;
    const auto& p = mu.parts();
    size_t i = 0;
    while (i < p.size()) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), j - i);
        z *= f;
        for (size_t k = i; k < j; ++k) z *= p[k];
        i = j;
    }
    return z;
}

std::pair<int, int> arm_leg(const Partition& lambda, int i, int j) {
    if (i < 1 || i > lambda.length() || j < 1 || j > lambda[i - 1])
        throw BoxOutsideDiagram("box (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside " + lambda.str());
    Partition t = lambda.transpose();
    return {lambda[i - 1] - j, t[j - 1] - i};
}

RatFunc content_sum(const Partition& lambda) {
    int a = 0, b = 0;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i - 1]; ++j) {
            a += j - 1;
            b += i - 1;
        }
    return RatFunc(Poly(a) * Poly::variable(Var::t1) + Poly(b) * Poly::variable(Var::t2));
}

Rational content_sum(const Partition& lambda, const Rational& t1, const Rational& t2) {
    return Rational(nstat(lambda.transpose())) * t1 + Rational(nstat(lambda)) * t2;
}

std::vector<RatFunc> tangent_weights(const Partition& lambda) {
    std::vector<RatFunc> w;
    Poly t1 = Poly::variable(Var::t1), t2 = Poly::variable(Var::t2);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i - 1]; ++j) {
            auto [a, l] = arm_leg(lambda, i, j);
            w.emplace_back(Poly(a + 1) * t1 - Poly(l) * t2);
            w.emplace_back(Poly(-a) * t1 + Poly(l + 1) * t2);
        }
    return w;
}

Integer hook_product(const Partition& lambda) {
    Integer h = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i - 1]; ++j) {
            auto [a, l] = arm_leg(lambda, i, j);
            h *= a + l + 1;
        }
    return h;
}

int nstat(const Partition& lambda) {
    int s = 0;
    for (int i = 0; i < lambda.length(); ++i) s += i * lambda[i];
    return s;
}

int f2(const Partition& lambda) { return nstat(lambda.transpose()) - nstat(lambda); }

Dominance dominance(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) return Dominance::incomparable;
    int sl = 0, sm = 0;
    bool le = true, ge = true;
    int len = std::max(lambda.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        sl += i < lambda.length() ? lambda[i] : 0;
        sm += i < mu.length() ? mu[i] : 0;
        if (sl > sm) le = false;
        if (sl < sm) ge = false;
    }
    if (le) return Dominance::leq;
    if (ge) return Dominance::greater;
    return Dominance::incomparable;
}

bool dominated_strictly(const Partition& lambda, const Partition& mu) {
    return lambda != mu && dominance(lambda, mu) == Dominance::leq;
}

bool content_order_lt(const Partition& lambda, const Partition& mu) { return f2(lambda) < f2(mu); }

} // namespace qde
