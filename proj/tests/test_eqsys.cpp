#define CATCH_CONFIG_MAIN
#include <catch2/catch.hpp>

#include "cosmash/eqsys.hpp"
#include "cosmash/t_ideal.hpp"

using namespace cosmash;

namespace {

std::map<Indeterminate, Rational> q_assignment(
    const std::map<std::string, long>& nonzero) {
    std::map<Indeterminate, Rational> a;
    for (const Indeterminate& v : rule_indeterminates()) a[v] = Rational(0);
    for (const auto& [name, val] : nonzero)
        a[parse_indeterminate_name(name)] = Rational(val);
    return a;
}

} // namespace

TEST_CASE("system shape: 96 equations in 8 blocks of 4 plus 8 blocks of 8") {
    EquationSystem sys = generate_system();
    REQUIRE(sys.equations.size() == 96);
    REQUIRE(sys.blocks.size() == 16);
    for (int b = 0; b < 8; ++b)
        CHECK(sys.blocks[b].last_index - sys.blocks[b].first_index + 1 == 4);
    for (int b = 8; b < 16; ++b)
        CHECK(sys.blocks[b].last_index - sys.blocks[b].first_index + 1 == 8);
}

TEST_CASE("generated system reproduces the appendix fixture exactly") {
    EquationSystem sys = generate_system();
    FixtureReport rep = check_against_fixture(sys);
    CHECK(rep.matched == 96);
    CHECK(rep.missing.empty());
    CHECK(rep.extra.empty());
    CHECK(rep.blocks_aligned);
    CHECK(rep.perfect());
    // the inferred within-block ordering reproduces the listing's numbering
    for (const auto& [gi, fi] : rep.alignment) CHECK(gi == fi);
}

TEST_CASE("generation is deterministic across runs") {
    EquationSystem a = generate_system();
    EquationSystem b = generate_system();
    REQUIRE(a.equations.size() == b.equations.size());
    for (std::size_t i = 0; i < a.equations.size(); ++i)
        CHECK(a.equations[i] == b.equations[i]);
}

TEST_CASE("coefficient degrees: 2 for the degree-3 blocks, 3 for degree-4") {
    EquationSystem sys = generate_system();
    for (const auto& block : sys.blocks) {
        const Recipe& r = equation_recipes()[block.recipe_index];
        int bound = parse_monomial(r.p).degree() == 3 ? 2 : 3;
        for (int i = block.first_index; i <= block.last_index; ++i)
            CHECK(sys.equations[i - 1].total_degree() <= bound);
        for (const auto& m : block.support) {
            MultiDegree d = multidegree(m);
            for (const auto& [g, k] : d) CHECK(k == 1);
        }
        CHECK(block.support.size() <= 8);
    }
}

TEST_CASE("a perturbed system is reported as 95 matched, 1 missing, 1 extra") {
    EquationSystem sys = generate_system();
    sys.equations[17] = sys.equations[17] + IntPoly::constant(Integer(1));
    FixtureReport rep = check_against_fixture(sys);
    CHECK(rep.matched == 95);
    CHECK(rep.missing.size() == 1);
    CHECK(rep.extra.size() == 1);
}

TEST_CASE("the empty system misses everything") {
    EquationSystem sys;
    FixtureReport rep = check_against_fixture(sys);
    CHECK(rep.matched == 0);
    CHECK(rep.missing.size() == 96);
}

TEST_CASE("evaluating distinguished assignments") {
    EquationSystem sys = generate_system();
    RationalField q;

    auto ca = evaluate_assignment(sys, q_assignment({{"a1", 1}, {"b1", 1}, {"c1", 1}, {"d1", 1}}), q);
    bool f1_violated = false;
    for (const auto& v : ca)
        if (v.index == 1 && v.value == Rational(1)) f1_violated = true;
    CHECK(f1_violated);

    auto zero = evaluate_assignment(sys, q_assignment({}), q);
    bool f4_violated = false;
    for (const auto& v : zero)
        if (v.index == 4 && v.value == Rational(-1)) f4_violated = true;
    CHECK(f4_violated);

    auto anti = evaluate_assignment(
        sys, q_assignment({{"a1", -1}, {"b1", 1}, {"c1", 1}, {"d1", -1}}), q);
    CHECK(!anti.empty());
}

TEST_CASE("an incomplete assignment is rejected") {
    EquationSystem sys = generate_system();
    std::map<Indeterminate, Rational> partial;
    partial[Indeterminate(Family::alpha, 1)] = Rational(1);
    CHECK_THROWS(evaluate_assignment(sys, partial, RationalField{}));
}

TEST_CASE("delta swap") {
    EquationSystem sys = generate_system();
    EquationSystem swapped = swap_delta(sys);
    EquationSystem twice = swap_delta(swapped);
    for (std::size_t i = 0; i < 96; ++i) CHECK(twice.equations[i] == sys.equations[i]);

    // f21 = d1^2 + c1*d2 + b1*d3 + a1*d4 - 1 becomes d1^2 + c1*d2 + b1*d4 + a1*d3 - 1
    CHECK(sign_normalized(swapped.equations[20]) ==
          parse_commpoly<IntegerRing>("d1^2 + c1*d2 + b1*d4 + a1*d3 - 1"));

    // an equation containing neither delta3 nor delta4 is unchanged: f1
    CHECK(swapped.equations[0] == sys.equations[0]);
}

TEST_CASE("certificate verification") {
    EquationSystem sys = generate_system();
    std::vector<IntPoly> zero_mu(96, IntPoly{IntegerRing{}});
    CHECK(verify_certificate(sys, zero_mu, Integer(0)));
    CHECK_FALSE(verify_certificate(sys, zero_mu, Integer(1)));

    EquationSystem toy;
    Indeterminate x = Indeterminate::user("x");
    toy.equations.push_back(parse_commpoly<IntegerRing>("x - 1"));
    toy.equations.push_back(parse_commpoly<IntegerRing>("x + 1"));
    std::vector<IntPoly> mu = {IntPoly::constant(Integer(-1)), IntPoly::constant(Integer(1))};
    CHECK(verify_certificate(toy, mu, Integer(2)));
    CHECK_THROWS(verify_certificate(toy, zero_mu, Integer(0))); // length mismatch
}

TEST_CASE("a nonzero certificate forces violations in coprime characteristics") {
    // toy system with certificate integer 2: over any field whose
    // characteristic does not divide 2, no assignment satisfies everything
    EquationSystem toy;
    toy.equations.push_back(parse_commpoly<IntegerRing>("x - 1"));
    toy.equations.push_back(parse_commpoly<IntegerRing>("x + 1"));
    std::vector<IntPoly> mu = {IntPoly::constant(Integer(-1)), IntPoly::constant(Integer(1))};
    REQUIRE(verify_certificate(toy, mu, Integer(2)));

    std::mt19937_64 rng(5);
    auto violated_everywhere = [&](auto field) {
        using F = decltype(field);
        for (int trial = 0; trial < 15; ++trial) {
            std::map<Indeterminate, typename F::Scalar> a;
            a[Indeterminate::user("x")] = field.from_long(static_cast<long>(rng() % 13) - 6);
            bool any = false;
            for (const auto& e : toy.equations) {
                auto p = change_ring(e, field,
                                     [&](const Integer& c) { return field.from_integer(c); });
                if (!field.is_zero(p.evaluate(a))) any = true;
            }
            if (!any) return false;
        }
        return true;
    };
    CHECK(violated_everywhere(RationalField{}));
    CHECK(violated_everywhere(PrimeField(3)));
    CHECK(violated_everywhere(PrimeField(5)));
}

TEST_CASE("appendix integers: gcd(m, m') = 2 and both strings round-trip") {
    Integer m = Integer::parse(appendix_m());
    Integer mp = Integer::parse(appendix_m_prime());
    CHECK(m.str() == appendix_m());
    CHECK(mp.str() == appendix_m_prime());
    CHECK(gcd(m, mp) == Integer(2));
}

TEST_CASE("coherence identities hold with the mapped coefficients") {
    // whenever the pull-out rules hold with assignment a, the two
    // pull-into-the-parentheses identities hold with the mapped lambdas
    RationalField q;
    auto check_variety = [&](const std::string& vname,
                             const std::map<std::string, long>& nonzero) {
        auto v = builtin_variety<RationalField>(vname, q);
        auto a = q_assignment(nonzero);
        auto lambda = coherence_coefficients(a, q);
        auto lam = [&](int i) { return lambda.at(Indeterminate(Family::lambda, i)); };
        const char* rhs[8] = {"y(zx)", "x(yz)", "y(xz)", "x(zy)",
                              "(zx)y", "(yz)x", "(xz)y", "(zy)x"};
        auto combo = [&](int offset) {
            auto p = parse_expression<RationalField>("0*xy", q); // zero
            for (int i = 0; i < 8; ++i)
                p = p + parse_expression<RationalField>(rhs[i], q).scaled(lam(offset + i));
            return p;
        };
        auto id1 = parse_expression<RationalField>("z(xy)", q) - combo(1);
        auto id2 = parse_expression<RationalField>("(xy)z", q) - combo(9);
        CHECK(is_identity(v, id1));
        CHECK(is_identity(v, id2));
    };
    check_variety("ca", {{"a1", 1}, {"b1", 1}, {"c1", 1}, {"d1", 1}});
    check_variety("perm", {{"a1", 1}, {"b3", 1}, {"c4", 1}, {"d4", 1}});
    check_variety("cyclic", {{"c1", 1}, {"d2", 1}, {"a3", 1}, {"b4", 1}});
}

TEST_CASE("coherence coefficients") {
    RationalField q;
    auto ca = coherence_coefficients(q_assignment({{"a1", 1}, {"b1", 1}, {"c1", 1}, {"d1", 1}}), q);
    for (int i = 1; i <= 16; ++i) {
        Rational expect = (i == 2 || i == 10) ? Rational(1) : Rational(0);
        CHECK(ca.at(Indeterminate(Family::lambda, i)) == expect);
    }

    auto zero = coherence_coefficients(q_assignment({}), q);
    for (int i = 1; i <= 16; ++i)
        CHECK(zero.at(Indeterminate(Family::lambda, i)) == Rational(0));

    auto perm = coherence_coefficients(
        q_assignment({{"a1", 1}, {"b3", 1}, {"c4", 1}, {"d4", 1}}), q);
    for (int i = 1; i <= 16; ++i) {
        Rational expect = (i == 8 || i == 10) ? Rational(1) : Rational(0);
        CHECK(perm.at(Indeterminate(Family::lambda, i)) == expect);
    }
}
