#define CATCH_CONFIG_MAIN
#include <catch2/catch.hpp>

#include <random>

#include "cosmash/commpoly.hpp"
#include "cosmash/commpoly_io.hpp"

using namespace cosmash;

namespace {

using IPoly = CommPolynomial<IntegerRing>;
using QPoly = CommPolynomial<RationalField>;

IPoly ip(const std::string& s) { return parse_commpoly<IntegerRing>(s); }

std::mt19937_64 rng(314);

PowerProduct random_pp() {
    PowerProduct pp;
    for (int i = 0; i < 3; ++i) {
        Family f = static_cast<Family>(rng() % 4);
        int idx = 1 + static_cast<int>(rng() % 4);
        int e = static_cast<int>(rng() % 3);
        if (e) pp = pp * PowerProduct(Indeterminate(f, idx), e);
    }
    return pp;
}

QPoly random_qpoly() {
    QPoly p{RationalField{}};
    for (int t = 0; t < 3; ++t)
        p.add_term(random_pp(), Rational(static_cast<long>(rng() % 9) - 4));
    return p;
}

} // namespace

TEST_CASE("arithmetic basics") {
    IPoly square = ip("a1 + b1") * ip("a1 + b1");
    CHECK(square == ip("a1^2 + 2*a1*b1 + b1^2"));

    IPoly p = ip("a1*a4 + a3*b1 - 1");
    CHECK((p - p).is_zero());

    // Frobenius over F2
    auto f2 = PrimeField(2);
    auto s = parse_commpoly<PrimeField>("a1 + b1", f2);
    CHECK(s * s == parse_commpoly<PrimeField>("a1^2 + b1^2", f2));
}

TEST_CASE("evaluation") {
    IPoly f4 = ip("a4^2 + a3*b4 + a2*c4 + a1*d4 - 1");
    std::map<Indeterminate, Integer> zero;
    for (Family fam : {Family::alpha, Family::beta, Family::gamma, Family::delta})
        for (int i = 1; i <= 4; ++i) zero[Indeterminate(fam, i)] = Integer(0);
    CHECK(f4.evaluate(zero) == Integer(-1));

    IPoly f1 = ip("a1*a4 + a3*b1 + a2*c1 + a1*d1");
    auto ca = zero;
    ca[Indeterminate(Family::alpha, 1)] = Integer(1);
    ca[Indeterminate(Family::beta, 1)] = Integer(1);
    ca[Indeterminate(Family::gamma, 1)] = Integer(1);
    ca[Indeterminate(Family::delta, 1)] = Integer(1);
    CHECK(f1.evaluate(ca) == Integer(1));

    CHECK(ip("7").evaluate({}) == Integer(7));
    CHECK_THROWS_WITH(f1.evaluate({}), Catch::Contains("a1"));
}

TEST_CASE("evaluate is a ring homomorphism on random inputs") {
    RationalField q;
    std::vector<Indeterminate> vars;
    for (Family f : {Family::alpha, Family::beta, Family::gamma, Family::delta})
        for (int i = 1; i <= 4; ++i) vars.emplace_back(f, i);
    for (int trial = 0; trial < 30; ++trial) {
        QPoly a = random_qpoly(), b = random_qpoly();
        std::map<Indeterminate, Rational> assign;
        for (const auto& v : vars) assign[v] = Rational(static_cast<long>(rng() % 7) - 3);
        CHECK((a * b).evaluate(assign) == a.evaluate(assign) * b.evaluate(assign));
        CHECK((a + b).evaluate(assign) == a.evaluate(assign) + b.evaluate(assign));
    }
}

TEST_CASE("leading terms") {
    MonomialOrder drl;
    MonomialOrder lex(MonomialOrder::lex);
    auto [m1, c1] = ip("a1^2 + b1").leading_term(drl);
    CHECK(m1.str() == "a1^2");
    auto [m2, c2] = ip("a1 + b1").leading_term(lex);
    CHECK(m2.str() == "a1");
    auto [m3, c3] = ip("5").leading_term(drl);
    CHECK(m3.is_empty());
    CHECK(c3 == Integer(5));
    CHECK_THROWS(IPoly{IntegerRing{}}.leading_term(drl));
}

TEST_CASE("orders are total, multiplicative, with 1 minimal") {
    for (MonomialOrder order : {MonomialOrder(MonomialOrder::degrevlex),
                                MonomialOrder(MonomialOrder::lex)}) {
        for (int trial = 0; trial < 200; ++trial) {
            PowerProduct a = random_pp(), b = random_pp(), c = random_pp();
            int ab = order.compare(a, b);
            CHECK(ab == -order.compare(b, a));
            if (ab == 0) CHECK(a == b);
            if (ab < 0 && order.compare(b, c) < 0) CHECK(order.compare(a, c) < 0);
            if (ab < 0) CHECK(order.compare(a * c, b * c) < 0);
            if (!a.is_empty()) CHECK(order.compare(PowerProduct(), a) < 0);
        }
    }
}

TEST_CASE("change of ring") {
    PrimeField f2(2);
    CHECK(to_prime_field(ip("2*a1 + b1"), f2) == parse_commpoly<PrimeField>("b1", f2));
    CHECK(to_prime_field(ip("a4^2 + a3*b4 + a2*c4 + a1*d4 - 1"), f2) ==
          parse_commpoly<PrimeField>("a4^2 + a3*b4 + a2*c4 + a1*d4 + 1", f2));
    CHECK(to_rationals(ip("a1 - 3")).size() == 2);
    // non-invertible denominator
    CHECK_THROWS(change_ring(parse_commpoly<RationalField>("1/2*a1"), f2,
                             [&](const Rational& c) { return f2.from_rational(c); }));
}

TEST_CASE("change_ring commutes with arithmetic") {
    PrimeField f5(5);
    for (int trial = 0; trial < 30; ++trial) {
        IPoly a{IntegerRing{}}, b{IntegerRing{}};
        for (int t = 0; t < 3; ++t) {
            a.add_term(random_pp(), Integer(static_cast<long>(rng() % 9) - 4));
            b.add_term(random_pp(), Integer(static_cast<long>(rng() % 9) - 4));
        }
        CHECK(to_prime_field(a * b, f5) == to_prime_field(a, f5) * to_prime_field(b, f5));
        CHECK(to_prime_field(a + b, f5) == to_prime_field(a, f5) + to_prime_field(b, f5));
    }
}

TEST_CASE("canonical text layout and round trip") {
    IPoly f4 = ip("a1*d4 + a2*c4 + a3*b4 + a4^2 - 1");
    CHECK(print_commpoly(f4) == "a4^2 + a3*b4 + a2*c4 + a1*d4 - 1");
    for (const char* s : {"a4^2 + a3*b4 + a2*c4 + a1*d4 - 1", "a1*a4 + a3*b1 + a2*c1 + a1*d1",
                          "d1^2 + c1*d2 + b1*d3 + a1*d4 - 1", "0"}) {
        if (std::string(s) == "0") continue;
        CHECK(print_commpoly(ip(s)) == s);
    }
}

TEST_CASE("sign and content normalization") {
    CHECK(sign_normalized(ip("-a1^2 - b1")) == ip("a1^2 + b1"));
    CHECK(sign_normalized(ip("a1^2 - b1")) == ip("a1^2 - b1"));
    CHECK(content(ip("2*a1 + 4*b1")) == Integer(2));
    CHECK(content_normalized(ip("-2*a1 - 4*b1")) == ip("a1 + 2*b1"));
    // content preserved by default
    CHECK(sign_normalized(ip("-2*a1 - 4*b1")) == ip("2*a1 + 4*b1"));
}

TEST_CASE("json round trip") {
    IPoly p = ip("a4^2 + a3*b4 - 7");
    auto j = commpoly_to_json(p);
    CHECK(commpoly_from_json<IntegerRing>(j) == p);
}
