#ifndef COSMASH_COMMPOLY_HPP
#define COSMASH_COMMPOLY_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "cosmash/error.hpp"
#include "cosmash/fields.hpp"

namespace cosmash {

enum class Family : int { alpha = 0, beta = 1, gamma = 2, delta = 3, lambda = 4, user = 5 };

// A commutative indeterminate. The canonical global order runs
// alpha1..alpha4, beta1..beta4, gamma1..gamma4, delta1..delta4, then the
// lambda family, then user indeterminates by name.
struct Indeterminate {
    Family family = Family::user;
    int index = 0;
    std::string user_name; // only for Family::user

    Indeterminate() = default;
    Indeterminate(Family f, int i) : family(f), index(i) {}
    static Indeterminate user(std::string name, int i = 0) {
        Indeterminate v;
        v.family = Family::user;
        v.index = i;
        v.user_name = std::move(name);
        return v;
    }

    // Display uses family letters a, b, c, d for alpha, beta, gamma, delta.
    std::string str() const {
        switch (family) {
            case Family::alpha: return "a" + std::to_string(index);
            case Family::beta: return "b" + std::to_string(index);
            case Family::gamma: return "c" + std::to_string(index);
            case Family::delta: return "d" + std::to_string(index);
            case Family::lambda: return "l" + std::to_string(index);
            case Family::user:
                return index == 0 ? user_name : user_name + std::to_string(index);
        }
        return "?";
    }

    auto key() const { return std::tuple(static_cast<int>(family), user_name, index); }
    bool operator==(const Indeterminate& o) const { return key() == o.key(); }
    bool operator!=(const Indeterminate& o) const { return key() != o.key(); }
    bool operator<(const Indeterminate& o) const { return key() < o.key(); }
};

// Product of indeterminate powers; sparse, sorted by the canonical
// indeterminate order, no zero exponents.
class PowerProduct {
  public:
    using Entry = std::pair<Indeterminate, int>;

    PowerProduct() = default;
    explicit PowerProduct(const Indeterminate& v, int e = 1) {
        if (e < 0) throw error("negative exponent");
        if (e > 0) entries_.emplace_back(v, e);
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_empty() const { return entries_.empty(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [v, e] : entries_) d += e;
        return d;
    }

    int exponent(const Indeterminate& v) const {
        for (const auto& [w, e] : entries_)
            if (w == v) return e;
        return 0;
    }

    PowerProduct operator*(const PowerProduct& o) const {
        PowerProduct r;
        auto a = entries_.begin(), b = o.entries_.begin();
        while (a != entries_.end() || b != o.entries_.end()) {
            if (b == o.entries_.end() || (a != entries_.end() && a->first < b->first))
                r.entries_.push_back(*a++);
            else if (a == entries_.end() || b->first < a->first)
                r.entries_.push_back(*b++);
            else {
                r.entries_.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        return r;
    }

    bool divides(const PowerProduct& o) const {
        auto b = o.entries_.begin();
        for (const auto& [v, e] : entries_) {
            while (b != o.entries_.end() && b->first < v) ++b;
            if (b == o.entries_.end() || !(b->first == v) || b->second < e) return false;
        }
        return true;
    }

    // Quotient; requires divides(o) of *this over o's divisor side:
    // callers use divisor.quotient(dividend).
    PowerProduct quotient_of(const PowerProduct& dividend) const {
        PowerProduct r;
        auto b = entries_.begin();
        for (const auto& [v, e] : dividend.entries_) {
            int sub = 0;
            while (b != entries_.end() && b->first < v) ++b;
            if (b != entries_.end() && b->first == v) sub = b->second;
            if (e - sub < 0) throw error("power product does not divide");
            if (e - sub > 0) r.entries_.emplace_back(v, e - sub);
        }
        return r;
    }

    static PowerProduct lcm(const PowerProduct& x, const PowerProduct& y) {
        PowerProduct r;
        auto a = x.entries_.begin(), b = y.entries_.begin();
        while (a != x.entries_.end() || b != y.entries_.end()) {
            if (b == y.entries_.end() || (a != x.entries_.end() && a->first < b->first))
                r.entries_.push_back(*a++);
            else if (a == x.entries_.end() || b->first < a->first)
                r.entries_.push_back(*b++);
            else {
                r.entries_.emplace_back(a->first, std::max(a->second, b->second));
                ++a;
                ++b;
            }
        }
        return r;
    }

    // Applies a variable substitution (used by the delta-swap).
    PowerProduct rename(const std::map<Indeterminate, Indeterminate>& sigma) const {
        PowerProduct r;
        for (const auto& [v, e] : entries_) {
            auto it = sigma.find(v);
            const Indeterminate& w = it == sigma.end() ? v : it->second;
            r = r * PowerProduct(w, e);
        }
        return r;
    }

    std::string str() const {
        if (entries_.empty()) return "1";
        std::string out;
        bool first = true;
        for (const auto& [v, e] : entries_) {
            if (!first) out += "*";
            out += v.str();
            if (e > 1) out += "^" + std::to_string(e);
            first = false;
        }
        return out;
    }

    bool operator==(const PowerProduct& o) const { return entries_ == o.entries_; }
    bool operator!=(const PowerProduct& o) const { return entries_ != o.entries_; }
    bool operator<(const PowerProduct& o) const { return entries_ < o.entries_; } // structural

  private:
    std::vector<Entry> entries_;
};

// lex and degrevlex over the canonical indeterminate order; both total,
// multiplicative, with the empty product minimal.
struct MonomialOrder {
    enum Kind { lex, degrevlex } kind = degrevlex;

    MonomialOrder() = default;
    MonomialOrder(Kind k) : kind(k) {}

    // Returns <0, 0, >0 like a three-way comparison: a vs b.
    int compare(const PowerProduct& a, const PowerProduct& b) const {
        if (kind == lex) return compare_lex(a, b);
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db ? -1 : 1;
        // reverse lexicographic tie-break: scanning variables from the last,
        // the first difference decides, smaller exponent meaning larger.
        auto ra = a.entries().rbegin();
        auto rb = b.entries().rbegin();
        while (ra != a.entries().rend() || rb != b.entries().rend()) {
            if (ra == a.entries().rend()) return 1;  // a lacks the late variable -> a larger
            if (rb == b.entries().rend()) return -1;
            if (ra->first == rb->first) {
                if (ra->second != rb->second) return ra->second > rb->second ? -1 : 1;
                ++ra;
                ++rb;
            } else if (rb->first < ra->first) {
                // a has the later variable with positive exponent, b has 0
                return -1;
            } else {
                return 1;
            }
        }
        return 0;
    }

    bool less(const PowerProduct& a, const PowerProduct& b) const { return compare(a, b) < 0; }

    std::string str() const { return kind == lex ? "lex" : "degrevlex"; }

    static MonomialOrder parse(const std::string& s) {
        if (s == "lex") return MonomialOrder(lex);
        if (s == "degrevlex") return MonomialOrder(degrevlex);
        throw error("unknown monomial order '" + s + "'");
    }

  private:
    static int compare_lex(const PowerProduct& a, const PowerProduct& b) {
        auto ia = a.entries().begin();
        auto ib = b.entries().begin();
        while (ia != a.entries().end() || ib != b.entries().end()) {
            if (ia == a.entries().end()) return -1; // b has an earlier variable
            if (ib == b.entries().end()) return 1;
            if (ia->first == ib->first) {
                if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
                ++ia;
                ++ib;
            } else if (ia->first < ib->first) {
                return 1; // a has the earlier variable with positive exponent
            } else {
                return -1;
            }
        }
        return 0;
    }
};

// Sparse commutative multivariate polynomial over an exact ring R.
template <class R>
class CommPolynomial {
  public:
    using Scalar = typename R::Scalar;
    using TermMap = std::map<PowerProduct, Scalar>;

    explicit CommPolynomial(R ring = R{}) : ring_(std::move(ring)) {}

    static CommPolynomial constant(const Scalar& c, R ring = R{}) {
        CommPolynomial p(ring);
        p.add_term(PowerProduct(), c);
        return p;
    }
    static CommPolynomial variable(const Indeterminate& v, R ring = R{}) {
        CommPolynomial p(ring);
        p.add_term(PowerProduct(v), ring.one());
        return p;
    }

    const R& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_empty());
    }
    Scalar constant_value() const {
        if (terms_.empty()) return ring_.zero();
        if (!is_constant()) throw error("polynomial is not constant");
        return terms_.begin()->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [pp, c] : terms_) d = std::max(d, pp.total_degree());
        return d;
    }

    void add_term(const PowerProduct& pp, const Scalar& c) {
        if (ring_.is_zero(c)) return;
        auto it = terms_.find(pp);
        if (it == terms_.end()) {
            terms_.emplace(pp, c);
        } else {
            it->second = ring_.add(it->second, c);
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    CommPolynomial operator+(const CommPolynomial& o) const {
        check_ring(o);
        CommPolynomial r = *this;
        for (const auto& [pp, c] : o.terms_) r.add_term(pp, c);
        return r;
    }
    CommPolynomial operator-(const CommPolynomial& o) const {
        check_ring(o);
        CommPolynomial r = *this;
        for (const auto& [pp, c] : o.terms_) r.add_term(pp, ring_.neg(c));
        return r;
    }
    CommPolynomial operator-() const {
        CommPolynomial r(ring_);
        for (const auto& [pp, c] : terms_) r.terms_.emplace(pp, ring_.neg(c));
        return r;
    }
    CommPolynomial operator*(const CommPolynomial& o) const {
        check_ring(o);
        CommPolynomial r(ring_);
        for (const auto& [p1, c1] : terms_)
            for (const auto& [p2, c2] : o.terms_)
                r.add_term(p1 * p2, ring_.mul(c1, c2));
        return r;
    }
    CommPolynomial scaled(const Scalar& s) const {
        CommPolynomial r(ring_);
        if (ring_.is_zero(s)) return r;
        for (const auto& [pp, c] : terms_) r.add_term(pp, ring_.mul(c, s));
        return r;
    }
    CommPolynomial times_term(const PowerProduct& pp, const Scalar& s) const {
        CommPolynomial r(ring_);
        if (ring_.is_zero(s)) return r;
        for (const auto& [q, c] : terms_) r.add_term(q * pp, ring_.mul(c, s));
        return r;
    }

    bool operator==(const CommPolynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto it = o.terms_.begin();
        for (const auto& [pp, c] : terms_) {
            if (pp != it->first || !ring_.eq(c, it->second)) return false;
            ++it;
        }
        return true;
    }
    bool operator!=(const CommPolynomial& o) const { return !(*this == o); }

    std::vector<Indeterminate> indeterminates() const {
        std::map<Indeterminate, bool> seen;
        for (const auto& [pp, c] : terms_)
            for (const auto& [v, e] : pp.entries()) seen[v] = true;
        std::vector<Indeterminate> out;
        for (const auto& [v, b] : seen) out.push_back(v);
        return out;
    }

    // Exact substitution value; the assignment must cover every
    // indeterminate of the polynomial.
    Scalar evaluate(const std::map<Indeterminate, Scalar>& a) const {
        Scalar acc = ring_.zero();
        for (const auto& [pp, c] : terms_) {
            Scalar term = c;
            for (const auto& [v, e] : pp.entries()) {
                auto it = a.find(v);
                if (it == a.end())
                    throw error("assignment missing indeterminate " + v.str());
                for (int k = 0; k < e; ++k) term = ring_.mul(term, it->second);
            }
            acc = ring_.add(acc, term);
        }
        return acc;
    }

    std::pair<PowerProduct, Scalar> leading_term(const MonomialOrder& order) const {
        if (terms_.empty()) throw error("leading term of the zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (order.less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    CommPolynomial rename(const std::map<Indeterminate, Indeterminate>& sigma) const {
        CommPolynomial r(ring_);
        for (const auto& [pp, c] : terms_) r.add_term(pp.rename(sigma), c);
        return r;
    }

    // Terms sorted descending in the given order (canonical layout).
    std::vector<std::pair<PowerProduct, Scalar>> sorted_terms(const MonomialOrder& order) const {
        std::vector<std::pair<PowerProduct, Scalar>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) {
            return order.less(y.first, x.first);
        });
        return v;
    }

  private:
    void check_ring(const CommPolynomial& o) const {
        if (ring_ != o.ring_) throw field_mismatch_error("polynomials over different rings");
    }

    R ring_;
    TermMap terms_;
};

// Coefficientwise image in another ring; throws if a coefficient has no
// image there (e.g. denominator not invertible).
template <class R2, class R1, class Conv>
CommPolynomial<R2> change_ring(const CommPolynomial<R1>& p, R2 target, Conv conv) {
    CommPolynomial<R2> out(target);
    for (const auto& [pp, c] : p.terms()) out.add_term(pp, conv(c));
    return out;
}

inline CommPolynomial<PrimeField> to_prime_field(const CommPolynomial<IntegerRing>& p,
                                                 PrimeField f) {
    return change_ring(p, f, [&](const Integer& c) { return f.from_integer(c); });
}

inline CommPolynomial<RationalField> to_rationals(const CommPolynomial<IntegerRing>& p) {
    RationalField q;
    return change_ring(p, q, [&](const Integer& c) { return Rational(c); });
}

// Content (gcd of coefficients) of an integer polynomial; non-negative.
inline Integer content(const CommPolynomial<IntegerRing>& p) {
    Integer g(0);
    for (const auto& [pp, c] : p.terms()) g = gcd(g, c);
    return g;
}

// Sign convention used for set comparison of integer polynomials: the
// degrevlex-leading coefficient is made positive. Content is preserved.
inline CommPolynomial<IntegerRing> sign_normalized(const CommPolynomial<IntegerRing>& p,
                                                   const MonomialOrder& order = MonomialOrder()) {
    if (p.is_zero()) return p;
    auto [pp, c] = p.leading_term(order);
    if (c.sign() < 0) return -p;
    return p;
}

// Opt-in content normalization: divides out the content after fixing the
// sign; used only for set comparison of generated against expected systems.
inline CommPolynomial<IntegerRing> content_normalized(const CommPolynomial<IntegerRing>& p,
                                                      const MonomialOrder& order = MonomialOrder()) {
    CommPolynomial<IntegerRing> q = sign_normalized(p, order);
    Integer g = content(q);
    if (g.is_zero() || g.is_one()) return q;
    CommPolynomial<IntegerRing> out(IntegerRing{});
    for (const auto& [pp, c] : q.terms()) out.add_term(pp, c.div_exact(g));
    return out;
}

} // namespace cosmash

#endif
