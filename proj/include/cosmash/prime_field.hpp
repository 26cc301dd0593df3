#ifndef COSMASH_PRIME_FIELD_HPP
#define COSMASH_PRIME_FIELD_HPP

#include <cstdint>
#include <string>

#include "cosmash/error.hpp"
#include "cosmash/integer.hpp"

namespace cosmash {

// Deterministic trial division; moduli in use are desk-scale.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

// Element of F_p. Carries its modulus; the modulus is checked prime at
// construction. Mixed-modulus arithmetic throws.
class PrimeFieldElement {
  public:
    PrimeFieldElement() : r_(0), p_(2) {}

    PrimeFieldElement(std::uint64_t residue, std::uint64_t p) : p_(p) {
        check_modulus(p);
        r_ = residue % p;
    }

    static PrimeFieldElement from_integer(const Integer& n, std::uint64_t p) {
        check_modulus(p);
        Integer r = n.mod(Integer(static_cast<long>(p)));
        return PrimeFieldElement(static_cast<std::uint64_t>(r.to_long()), p);
    }

    std::uint64_t residue() const { return r_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return r_ == 0; }
    bool is_one() const { return r_ == 1; }

    PrimeFieldElement operator-() const { return make(r_ == 0 ? 0 : p_ - r_, p_); }
    PrimeFieldElement operator+(const PrimeFieldElement& o) const {
        same_field(o);
        std::uint64_t s = r_ + o.r_;
        if (s >= p_) s -= p_;
        return make(s, p_);
    }
    PrimeFieldElement operator-(const PrimeFieldElement& o) const {
        same_field(o);
        return make(r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_, p_);
    }
    PrimeFieldElement operator*(const PrimeFieldElement& o) const {
        same_field(o);
        return make(mulmod_u64(r_, o.r_, p_), p_);
    }
    PrimeFieldElement operator/(const PrimeFieldElement& o) const {
        return *this * o.inverse();
    }

    // x^(p-2); p is prime so this is the inverse of any nonzero x.
    PrimeFieldElement inverse() const {
        if (r_ == 0) throw error("division by zero in F_" + std::to_string(p_));
        return make(powmod_u64(r_, p_ - 2, p_), p_);
    }

    bool operator==(const PrimeFieldElement& o) const {
        return p_ == o.p_ && r_ == o.r_;
    }
    bool operator!=(const PrimeFieldElement& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(r_); }

  private:
    static void check_modulus(std::uint64_t p) {
        if (!is_prime_u64(p))
            throw error("modulus " + std::to_string(p) + " is not prime");
    }
    static PrimeFieldElement make(std::uint64_t r, std::uint64_t p) {
        PrimeFieldElement x;
        x.r_ = r;
        x.p_ = p;
        return x;
    }
    void same_field(const PrimeFieldElement& o) const {
        if (p_ != o.p_)
            throw field_mismatch_error("mixed moduli " + std::to_string(p_) +
                                       " and " + std::to_string(o.p_));
    }

    std::uint64_t r_;
    std::uint64_t p_;
};

inline PrimeFieldElement field_invert(const PrimeFieldElement& x) {
    return x.inverse();
}

} // namespace cosmash

#endif
