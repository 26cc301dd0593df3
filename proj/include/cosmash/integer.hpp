#ifndef COSMASH_INTEGER_HPP
#define COSMASH_INTEGER_HPP

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <string>
#include <utility>

#include "cosmash/error.hpp"

namespace cosmash {

// Arbitrary-precision signed integer. Values are immutable in spirit:
// every operation returns a fresh value, so sharing across threads is safe.
class Integer {
  public:
    Integer() : v_(0) {}
    Integer(long n) : v_(n) {}
    explicit Integer(mpz_class v) : v_(std::move(v)) {}

    // Strict decimal parser: optional '-', then a nonempty digit string.
    // Rejects anything else, reporting the offending character position.
    static Integer parse(const std::string& s) {
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (i == s.size())
            throw parse_error("integer literal has no digits", i);
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j])))
                throw parse_error(std::string("unexpected character '") + s[j] +
                                      "' in integer literal",
                                  j);
        return Integer(mpz_class(s, 10));
    }

    std::string str() const { return v_.get_str(10); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    bool fits_long() const { return v_.fits_slong_p(); }
    long to_long() const { return v_.get_si(); }

    Integer operator-() const { return Integer(-v_); }
    Integer operator+(const Integer& o) const { return Integer(v_ + o.v_); }
    Integer operator-(const Integer& o) const { return Integer(v_ - o.v_); }
    Integer operator*(const Integer& o) const { return Integer(v_ * o.v_); }

    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

    // Truncated division; only valid when o divides *this exactly in callers
    // that rely on exactness (Bareiss), which they assert via divides().
    Integer div_exact(const Integer& o) const {
        Integer q;
        mpz_divexact(q.v_.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
        return q;
    }

    bool divides(const Integer& o) const {
        if (is_zero()) return o.is_zero();
        return mpz_divisible_p(o.v_.get_mpz_t(), v_.get_mpz_t()) != 0;
    }

    Integer abs() const { return Integer(::abs(v_)); }

    Integer mod(const Integer& m) const {  // canonical residue in [0, m)
        Integer r;
        mpz_mod(r.v_.get_mpz_t(), v_.get_mpz_t(), m.v_.get_mpz_t());
        return r;
    }

    bool operator==(const Integer& o) const { return v_ == o.v_; }
    bool operator!=(const Integer& o) const { return v_ != o.v_; }
    bool operator<(const Integer& o) const { return v_ < o.v_; }
    bool operator<=(const Integer& o) const { return v_ <= o.v_; }
    bool operator>(const Integer& o) const { return v_ > o.v_; }
    bool operator>=(const Integer& o) const { return v_ >= o.v_; }

    const mpz_class& raw() const { return v_; }

  private:
    mpz_class v_;
};

// Non-negative gcd with gcd(0,0) = 0.
inline Integer gcd(const Integer& a, const Integer& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(g);
}

inline Integer lcm(const Integer& a, const Integer& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(l);
}

} // namespace cosmash

#endif
