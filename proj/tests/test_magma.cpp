#define CATCH_CONFIG_MAIN
#include <catch2/catch.hpp>

#include <random>

#include "cosmash/magma.hpp"
#include "cosmash/magma_io.hpp"

using namespace cosmash;

namespace {

MagmaMonomial leaf(const char* n) { return MagmaMonomial::leaf(Generator(n)); }

using QPoly = NAPolynomial<RationalField>;

QPoly mono(const MagmaMonomial& m) { return QPoly::monomial(m); }

std::mt19937_64 rng(7);

MagmaMonomial random_monomial(int max_degree) {
    static const char* names[] = {"a", "b", "c", "d"};
    if (max_degree <= 1 || rng() % 3 == 0)
        return MagmaMonomial::leaf(Generator(names[rng() % 4]));
    int dl = 1 + static_cast<int>(rng() % (max_degree - 1));
    return MagmaMonomial::node(random_monomial(dl), random_monomial(max_degree - dl));
}

} // namespace

TEST_CASE("multiplication pairs trees bilinearly") {
    auto x = leaf("x"), y = leaf("y"), z = leaf("z");
    CHECK(print_expression(mono(x) * mono(y)) == "xy");
    CHECK(print_expression((mono(x) + mono(y)) * mono(z)) == "xz + yz");
    auto ab = MagmaMonomial::node(leaf("a"), leaf("b"));
    auto p = mono(ab) * mono(leaf("c"));
    REQUIRE(p.size() == 1);
    CHECK(p.terms().begin()->first.degree() == 3);
    CHECK(print_expression(p) == "(ab)c");
}

TEST_CASE("multidegree counts leaves") {
    auto m = parse_monomial("x(yx)");
    MultiDegree d = multidegree(m);
    CHECK(d.at(Generator("x")) == 2);
    CHECK(d.at(Generator("y")) == 1);
    CHECK(m.degree() == 3);
    CHECK(multidegree(parse_monomial("x")).at(Generator("x")) == 1);
    MultiDegree d2 = multidegree(parse_monomial("(ab)(cd)"));
    CHECK(d2.size() == 4);
    for (const auto& [g, k] : d2) CHECK(k == 1);
}

TEST_CASE("multidegree is additive over products") {
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_monomial(4), b = random_monomial(4);
        MultiDegree da = multidegree(a), db = multidegree(b);
        for (const auto& [g, k] : db) da[g] += k;
        CHECK(multidegree(MagmaMonomial::node(a, b)) == da);
    }
}

TEST_CASE("is_multilinear") {
    CHECK(parse_expression<RationalField>("xy + yx").is_multilinear());
    CHECK_FALSE(parse_expression<RationalField>("xx + yz").is_multilinear());
    CHECK(QPoly().is_multilinear()); // zero polynomial, vacuously
    CHECK_FALSE(parse_expression<RationalField>("xy + x").is_multilinear());
}

TEST_CASE("substitution is homomorphic") {
    RationalField q;
    auto p = parse_expression<RationalField>("xy");
    std::map<Generator, QPoly> sigma;
    sigma[Generator("x")] = mono(leaf("a"));
    sigma[Generator("y")] = mono(leaf("a"));
    CHECK(print_expression(substitute(p, sigma)) == "aa");

    auto sq = parse_expression<RationalField>("xx");
    std::map<Generator, QPoly> sum;
    sum[Generator("x")] = parse_expression<RationalField>("y + z");
    CHECK(print_expression(substitute(sq, sum)) == "yy + yz + zy + zz");

    std::map<Generator, QPoly> ident;
    ident[Generator("x")] = parse_expression<RationalField>("(ab)c");
    CHECK(print_expression(substitute(parse_expression<RationalField>("x"), ident)) ==
          "(ab)c");

    std::map<Generator, QPoly> missing;
    missing[Generator("x")] = mono(leaf("a"));
    CHECK_THROWS_WITH(substitute(p, missing),
                      Catch::Contains("no image for generator y"));
}

TEST_CASE("substitute respects multiplication on random inputs") {
    std::map<Generator, QPoly> sigma;
    sigma[Generator("a")] = parse_expression<RationalField>("u + vw");
    sigma[Generator("b")] = parse_expression<RationalField>("2v");
    sigma[Generator("c")] = parse_expression<RationalField>("w");
    sigma[Generator("d")] = parse_expression<RationalField>("u(uv)");
    for (int trial = 0; trial < 40; ++trial) {
        QPoly p = mono(random_monomial(3)), q = mono(random_monomial(3));
        CHECK(substitute(p * q, sigma) == substitute(p, sigma) * substitute(q, sigma));
    }
}

TEST_CASE("monomial order: degree first, then leaves before nodes, then recursion") {
    auto x = parse_monomial("x"), xy = parse_monomial("xy");
    CHECK(compare_monomials(x, xy) < 0);
    CHECK(compare_monomials(parse_monomial("(ab)c"), parse_monomial("a(bc)")) > 0);
    CHECK(compare_monomials(xy, xy) == 0);
}

TEST_CASE("monomial order is a total order on random triples") {
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_monomial(4), b = random_monomial(4), c = random_monomial(4);
        int ab = compare_monomials(a, b), ba = compare_monomials(b, a);
        CHECK(ab == -ba);
        if (ab < 0 && compare_monomials(b, c) < 0) CHECK(compare_monomials(a, c) < 0);
        if (ab == 0) CHECK(a.str() == b.str());
    }
}

TEST_CASE("expression parsing") {
    auto assoc = parse_expression<RationalField>("(ab)c - a(bc)");
    REQUIRE(assoc.size() == 2);
    CHECK(print_expression(assoc) == "-a(bc) + (ab)c");

    auto comm = parse_expression<RationalField>("xy + yx");
    CHECK(comm.size() == 2);

    CHECK_THROWS_WITH(parse_expression<RationalField>("xyz"),
                      Catch::Contains("non-associative product requires parentheses"));

    auto coef = parse_expression<RationalField>("3*xy - 1/2 x(yz)");
    CHECK(print_expression(coef) == "3*xy - 1/2*x(yz)");
}

TEST_CASE("parse then print is the identity on canonical forms") {
    for (const char* s :
         {"xy", "-xy + yx", "(ab)c", "a(bc)", "x1(x2x3)", "2*aa + ab", "(ab)(cd)"}) {
        CHECK(print_expression(parse_expression<RationalField>(s)) == s);
    }
}

TEST_CASE("field mismatch is rejected") {
    NAPolynomial<PrimeField> p1{PrimeField(5)}, p2{PrimeField(7)};
    p1.add_term(parse_monomial("x"), 1);
    p2.add_term(parse_monomial("y"), 1);
    CHECK_THROWS_AS(p1 * p2, field_mismatch_error);
}
