#ifndef COSMASH_RATIONAL_HPP
#define COSMASH_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "cosmash/error.hpp"
#include "cosmash/integer.hpp"

namespace cosmash {

// Exact rational number, always stored reduced with positive denominator,
// so equality is structural.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n.raw()) {}
    Rational(const Integer& num, const Integer& den) : v_(num.raw(), den.raw()) {
        if (sgn(den.raw()) == 0) throw error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "n" or "n/d" with decimal integer parts.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Integer::parse(s));
        Integer num = Integer::parse(s.substr(0, slash));
        std::string den_part = s.substr(slash + 1);
        Integer den;
        try {
            den = Integer::parse(den_part);
        } catch (const parse_error& e) {
            throw parse_error(e.what(), slash + 1 + e.position);
        }
        if (den.is_zero()) throw parse_error("zero denominator", slash + 1);
        return Rational(num, den);
    }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str(10);
        return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
    }

    Integer numerator() const { return Integer(mpz_class(v_.get_num())); }
    Integer denominator() const { return Integer(mpz_class(v_.get_den())); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw error("rational division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const {
        if (is_zero()) throw error("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

} // namespace cosmash

#endif
