#ifndef COSMASH_COMMPOLY_IO_HPP
#define COSMASH_COMMPOLY_IO_HPP

#include <cctype>
#include <string>

#include <json.hpp>

#include "cosmash/commpoly.hpp"

namespace cosmash {

// Text form uses family letters a, b, c, d for alpha, beta, gamma, delta and
// l for the lambda family: "a1*a4 + a3*b1 + a2*c1 + a1*d1 - 1", with ^ for
// powers. Any other letter sequence is a user indeterminate.
inline Indeterminate parse_indeterminate_name(const std::string& word) {
    std::size_t split = word.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(word[split - 1]))) --split;
    std::string letters = word.substr(0, split);
    int index = split == word.size() ? 0 : std::stoi(word.substr(split));
    if (letters == "a") return Indeterminate(Family::alpha, index);
    if (letters == "b") return Indeterminate(Family::beta, index);
    if (letters == "c") return Indeterminate(Family::gamma, index);
    if (letters == "d") return Indeterminate(Family::delta, index);
    if (letters == "l") return Indeterminate(Family::lambda, index);
    return Indeterminate::user(letters, index);
}

namespace detail {

template <class R>
class CommPolyParser {
  public:
    CommPolyParser(const std::string& s, R ring) : s_(s), ring_(ring) {}

    CommPolynomial<R> parse() {
        CommPolynomial<R> out(ring_);
        skip_ws();
        bool first = true;
        while (pos_ < s_.size()) {
            bool negative = false;
            if (first) {
                if (peek() == '+' || peek() == '-') negative = (get() == '-');
            } else {
                char op = get();
                if (op == '+') negative = false;
                else if (op == '-') negative = true;
                else throw parse_error(std::string("expected '+' or '-', got '") + op + "'", pos_ - 1);
            }
            parse_term(negative, out);
            first = false;
            skip_ws();
        }
        if (first) throw parse_error("empty polynomial", 0);
        return out;
    }

  private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void parse_term(bool negative, CommPolynomial<R>& out) {
        skip_ws();
        typename R::Scalar coef = ring_.one();
        bool saw_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = parse_number();
            saw_coef = true;
            skip_ws();
            if (peek() == '*') { get(); skip_ws(); }
        }
        PowerProduct pp;
        bool saw_var = false;
        while (std::isalpha(static_cast<unsigned char>(peek()))) {
            std::string word;
            while (std::isalnum(static_cast<unsigned char>(peek()))) word += get();
            int exp = 1;
            if (peek() == '^') {
                get();
                std::size_t start = pos_;
                while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                if (pos_ == start) throw parse_error("expected exponent digits", pos_);
                exp = std::stoi(s_.substr(start, pos_ - start));
            }
            pp = pp * PowerProduct(parse_indeterminate_name(word), exp);
            saw_var = true;
            skip_ws();
            if (peek() == '*') { get(); skip_ws(); }
        }
        if (!saw_var && !saw_coef)
            throw parse_error("expected a term", pos_);
        if (negative) coef = ring_.neg(coef);
        out.add_term(pp, coef);
    }

    typename R::Scalar parse_number() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string num = s_.substr(start, pos_ - start);
        if (peek() == '/') {
            get();
            std::size_t dstart = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            return ring_.from_rational(
                Rational::parse(num + "/" + s_.substr(dstart, pos_ - dstart)));
        }
        return ring_.from_integer(Integer::parse(num));
    }

    const std::string& s_;
    R ring_;
    std::size_t pos_ = 0;
};

} // namespace detail

template <class R>
CommPolynomial<R> parse_commpoly(const std::string& s, R ring = R{}) {
    return detail::CommPolyParser<R>(s, ring).parse();
}

// Canonical layout: terms descending in degrevlex, which places the alpha
// family first within a degree.
template <class R>
std::string print_commpoly(const CommPolynomial<R>& p,
                           const MonomialOrder& order = MonomialOrder()) {
    if (p.is_zero()) return "0";
    const R& ring = p.ring();
    std::string out;
    bool first = true;
    for (const auto& [pp, c] : p.sorted_terms(order)) {
        bool neg = false;
        typename R::Scalar a = c;
        if constexpr (std::is_same_v<R, IntegerRing> || std::is_same_v<R, RationalField>) {
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
        if (pp.is_empty()) out += ring.str(a);
        else if (ring.is_one(a)) out += pp.str();
        else out += ring.str(a) + "*" + pp.str();
        first = false;
    }
    return out;
}

template <class R>
nlohmann::json commpoly_to_json(const CommPolynomial<R>& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [pp, c] : p.sorted_terms(MonomialOrder())) {
        nlohmann::json exps = nlohmann::json::object();
        for (const auto& [v, e] : pp.entries()) exps[v.str()] = e;
        terms.push_back({{"exponents", exps}, {"coefficient", p.ring().str(c)}});
    }
    return terms;
}

template <class R>
CommPolynomial<R> commpoly_from_json(const nlohmann::json& j, R ring = R{}) {
    CommPolynomial<R> out(ring);
    for (const auto& term : j) {
        PowerProduct pp;
        for (const auto& [name, e] : term.at("exponents").items())
            pp = pp * PowerProduct(parse_indeterminate_name(name), e.template get<int>());
        out.add_term(pp, ring.parse(term.at("coefficient").template get<std::string>()));
    }
    return out;
}

} // namespace cosmash

#endif
