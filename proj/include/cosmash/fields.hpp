#ifndef COSMASH_FIELDS_HPP
#define COSMASH_FIELDS_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "cosmash/error.hpp"
#include "cosmash/integer.hpp"
#include "cosmash/prime_field.hpp"
#include "cosmash/rational.hpp"

namespace cosmash {

// Coefficient domains are passed around as small "ring objects". Generic code
// is templated on the ring object type R and works with bare R::Scalar values;
// the object itself carries whatever runtime state the domain needs (the
// modulus, for prime fields) and doubles as the ring tag stored in
// polynomials and matrices.

struct RationalField {
    using Scalar = Rational;

    Scalar zero() const { return Rational(0); }
    Scalar one() const { return Rational(1); }
    Scalar from_long(long n) const { return Rational(n); }
    Scalar from_integer(const Integer& n) const { return Rational(n); }
    Scalar from_rational(const Rational& q) const { return q; }

    Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
    Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
    Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar neg(const Scalar& a) const { return -a; }
    Scalar div(const Scalar& a, const Scalar& b) const { return a / b; }
    Scalar inv(const Scalar& a) const { return a.inverse(); }

    bool is_zero(const Scalar& a) const { return a.is_zero(); }
    bool is_one(const Scalar& a) const { return a.is_one(); }
    bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

    std::uint64_t characteristic() const { return 0; }
    std::string name() const { return "q"; }
    std::string str(const Scalar& a) const { return a.str(); }
    Scalar parse(const std::string& s) const { return Rational::parse(s); }

    bool operator==(const RationalField&) const { return true; }
    bool operator!=(const RationalField&) const { return false; }
};

struct PrimeField {
    using Scalar = std::uint64_t; // residue in [0, p)

    std::uint64_t p = 2;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t prime) : p(prime) {
        if (!is_prime_u64(p))
            throw error("modulus " + std::to_string(p) + " is not prime");
    }

    Scalar zero() const { return 0; }
    Scalar one() const { return 1 % p; }
    Scalar from_long(long n) const {
        long r = n % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return static_cast<Scalar>(r);
    }
    Scalar from_integer(const Integer& n) const {
        return static_cast<Scalar>(n.mod(Integer(static_cast<long>(p))).to_long());
    }
    Scalar from_rational(const Rational& q) const {
        Scalar den = from_integer(q.denominator());
        if (den == 0)
            throw error("denominator not invertible modulo " + std::to_string(p));
        return mulmod_u64(from_integer(q.numerator()), inv(den), p);
    }

    Scalar add(Scalar a, Scalar b) const {
        Scalar s = a + b;
        if (s >= p) s -= p;
        return s;
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p - b; }
    Scalar mul(Scalar a, Scalar b) const { return mulmod_u64(a, b, p); }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p - a; }
    Scalar inv(Scalar a) const {
        if (a == 0) throw error("division by zero in F_" + std::to_string(p));
        return powmod_u64(a, p - 2, p);
    }
    Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

    bool is_zero(Scalar a) const { return a == 0; }
    bool is_one(Scalar a) const { return a == 1 % p; }
    bool eq(Scalar a, Scalar b) const { return a == b; }

    std::uint64_t characteristic() const { return p; }
    std::string name() const { return "fp:" + std::to_string(p); }
    std::string str(Scalar a) const { return std::to_string(a); }
    Scalar parse(const std::string& s) const {
        return from_rational(Rational::parse(s));
    }

    bool operator==(const PrimeField& o) const { return p == o.p; }
    bool operator!=(const PrimeField& o) const { return p != o.p; }
};

// The ring of integers; not a field (no div). Coefficient domain of the
// equation system and of symbolic rewriting output.
struct IntegerRing {
    using Scalar = Integer;

    Scalar zero() const { return Integer(0); }
    Scalar one() const { return Integer(1); }
    Scalar from_long(long n) const { return Integer(n); }
    Scalar from_integer(const Integer& n) const { return n; }
    Scalar from_rational(const Rational& q) const {
        if (!q.denominator().is_one())
            throw error("rational " + q.str() + " is not an integer");
        return q.numerator();
    }

    Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
    Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
    Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar neg(const Scalar& a) const { return -a; }

    bool is_zero(const Scalar& a) const { return a.is_zero(); }
    bool is_one(const Scalar& a) const { return a.is_one(); }
    bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

    std::uint64_t characteristic() const { return 0; }
    std::string name() const { return "z"; }
    std::string str(const Scalar& a) const { return a.str(); }
    Scalar parse(const std::string& s) const { return Integer::parse(s); }

    bool operator==(const IntegerRing&) const { return true; }
    bool operator!=(const IntegerRing&) const { return false; }
};

// Runtime field selector for the CLI layer: "q" or "fp:<p>".
using FieldSpec = std::variant<RationalField, PrimeField>;

inline FieldSpec parse_field_spec(const std::string& s) {
    if (s == "q" || s == "Q") return RationalField{};
    if (s.rfind("fp:", 0) == 0) {
        Integer p = Integer::parse(s.substr(3));
        if (p.sign() <= 0 || !p.fits_long())
            throw error("bad prime in field spec: " + s);
        return PrimeField(static_cast<std::uint64_t>(p.to_long()));
    }
    throw error("unrecognized field spec '" + s + "' (expected q or fp:<p>)");
}

} // namespace cosmash

#endif
