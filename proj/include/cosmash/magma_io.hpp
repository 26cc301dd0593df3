#ifndef COSMASH_MAGMA_IO_HPP
#define COSMASH_MAGMA_IO_HPP

#include <cctype>
#include <string>
#include <vector>

#include "cosmash/magma.hpp"

namespace cosmash {

namespace detail {

template <class R>
class ExpressionParser {
  public:
    ExpressionParser(const std::string& s, R ring) : s_(s), ring_(ring) {}

    NAPolynomial<R> parse() {
        NAPolynomial<R> out(ring_);
        skip_ws();
        bool first = true;
        while (true) {
            bool negative = false;
            if (first) {
                if (peek() == '+' || peek() == '-') negative = (get() == '-');
            } else {
                skip_ws();
                if (pos_ >= s_.size()) break;
                char op = get();
                if (op == '+') negative = false;
                else if (op == '-') negative = true;
                else throw parse_error(std::string("expected '+' or '-', got '") + op + "'", pos_ - 1);
            }
            parse_term(negative, out);
            first = false;
            skip_ws();
            if (pos_ >= s_.size()) break;
        }
        return out;
    }

    MagmaMonomial parse_single_monomial() {
        skip_ws();
        MagmaMonomial m = parse_mono(true);
        skip_ws();
        if (pos_ != s_.size())
            throw parse_error("trailing input after monomial", pos_);
        return m;
    }

  private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void parse_term(bool negative, NAPolynomial<R>& out) {
        skip_ws();
        typename R::Scalar coef = ring_.one();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = parse_coef();
            skip_ws();
            if (peek() == '*') { get(); skip_ws(); }
        }
        MagmaMonomial m = parse_mono(true);
        if (negative) coef = ring_.neg(coef);
        out.add_term(m, coef);
    }

    typename R::Scalar parse_coef() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string num = s_.substr(start, pos_ - start);
        if (peek() == '/') {
            get();
            std::size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == dstart) throw parse_error("expected denominator digits", pos_);
            std::string den = s_.substr(dstart, pos_ - dstart);
            return ring_.from_rational(Rational::parse(num + "/" + den));
        }
        return ring_.from_integer(Integer::parse(num));
    }

    // A product is exactly two juxtaposed factors; longer chains are
    // ambiguous in a non-associative magma and rejected.
    MagmaMonomial parse_mono(bool top) {
        std::vector<MagmaMonomial> factors;
        while (true) {
            skip_ws();
            char c = peek();
            if (std::isalpha(static_cast<unsigned char>(c))) {
                factors.push_back(parse_var());
            } else if (c == '(') {
                get();
                MagmaMonomial inner = parse_mono(false);
                skip_ws();
                if (peek() != ')') throw parse_error("expected ')'", pos_);
                get();
                factors.push_back(inner);
            } else {
                break;
            }
            if (factors.size() > 2)
                throw parse_error("non-associative product requires parentheses", pos_);
        }
        if (factors.empty())
            throw parse_error(top ? "expected a monomial" : "expected a monomial inside parentheses", pos_);
        if (factors.size() == 1) return factors[0];
        return MagmaMonomial::node(factors[0], factors[1]);
    }

    MagmaMonomial parse_var() {
        char letter = get();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) return MagmaMonomial::leaf(Generator(std::string(1, letter)));
        int idx = std::stoi(s_.substr(start, pos_ - start));
        return MagmaMonomial::leaf(Generator(std::string(1, letter), idx));
    }

    const std::string& s_;
    R ring_;
    std::size_t pos_ = 0;
};

} // namespace detail

template <class R>
NAPolynomial<R> parse_expression(const std::string& s, R ring = R{}) {
    return detail::ExpressionParser<R>(s, ring).parse();
}

inline MagmaMonomial parse_monomial(const std::string& s) {
    return detail::ExpressionParser<RationalField>(s, RationalField{}).parse_single_monomial();
}

// Canonical printing: monomials ascending in the term order, coefficient 1
// (or -1) reduced to a bare sign, other coefficients joined with '*'.
template <class R>
std::string print_expression(const NAPolynomial<R>& p) {
    if (p.is_zero()) return "0";
    const R& ring = p.ring();
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool neg = false;
        typename R::Scalar a = c;
        if (ring.eq(c, ring.neg(ring.one())) && !ring.is_one(c)) {
            neg = true;
            a = ring.one();
        } else if constexpr (std::is_same_v<R, RationalField>) {
            if (c.sign() < 0) {
                neg = true;
                a = ring.neg(c);
            }
        }
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (!ring.is_one(a)) out += ring.str(a) + "*";
        out += m.str();
        first = false;
    }
    return out;
}

} // namespace cosmash

#endif
