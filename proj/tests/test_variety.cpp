#define CATCH_CONFIG_MAIN
#include <catch2/catch.hpp>

#include "cosmash/commpoly_io.hpp"
#include "cosmash/t_ideal.hpp"
#include "cosmash/truncated.hpp"

using namespace cosmash;

namespace {

using QPoly = NAPolynomial<RationalField>;
RationalField Q;

QPoly qp(const std::string& s) { return parse_expression<RationalField>(s, Q); }

VarietyPresentation<RationalField> variety(const std::string& name) {
    return builtin_variety<RationalField>(name, Q);
}

} // namespace

TEST_CASE("multilinearise") {
    auto squares = multilinearise(qp("xx"));
    REQUIRE(squares.size() == 1);
    CHECK(print_expression(squares[0]) == "yz + zy");

    auto already = multilinearise(qp("xy - yx"));
    REQUIRE(already.size() == 1);
    CHECK(already[0] == qp("xy - yx"));

    auto cubes = multilinearise(qp("x(xx)"));
    REQUIRE(cubes.size() == 1);
    CHECK(cubes[0].size() == 6);
    CHECK(cubes[0] == qp("y(zw) + y(wz) + z(yw) + z(wy) + w(yz) + w(zy)"));

    CHECK_THROWS(multilinearise(qp("xx + yz")));
}

TEST_CASE("multilinearise output follows from the identity by specialization") {
    // substituting y = z = x into the polarization of xx gives 2 xx
    auto squares = multilinearise(qp("xx"));
    std::map<Generator, QPoly> collapse;
    collapse[Generator("y")] = qp("x");
    collapse[Generator("z")] = qp("x");
    CHECK(substitute(squares[0], collapse) == qp("2*xx"));
}

TEST_CASE("t_ideal_component of CA at (1,1,1) has codimension 1") {
    auto ca = variety("ca");
    std::vector<std::pair<Generator, int>> gens = {
        {Generator("a"), 1}, {Generator("b"), 1}, {Generator("c"), 1}};
    MultiDegree slice = {{Generator("a"), 1}, {Generator("b"), 1}, {Generator("c"), 1}};
    auto rows = t_ideal_component(ca, gens, slice);
    CHECK(!rows.empty());

    TIdealEnumerator<RationalField> e(ca, gens);
    auto cols = e.monomials_of(slice);
    REQUIRE(cols.size() == 12);
    Matrix<RationalField> m(rows.size(), cols.size(), Q);
    std::map<MagmaMonomial, std::size_t, MagmaLess> idx;
    for (std::size_t i = 0; i < cols.size(); ++i) idx[cols[i]] = i;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [mono, c] : rows[r].terms()) m.at(r, idx.at(mono)) = c;
    CHECK(rref(m).rank == 11);
}

TEST_CASE("a variety with no identities has empty components") {
    auto mag = variety("mag");
    std::vector<std::pair<Generator, int>> gens = {{Generator("a"), 1}, {Generator("b"), 1}};
    CHECK(t_ideal_component(mag, gens, {{Generator("a"), 1}, {Generator("b"), 1}}).empty());
}

TEST_CASE("abelian at degree 2 spans the whole space") {
    auto ab = variety("ab");
    std::vector<std::pair<Generator, int>> gens = {{Generator("a"), 1}, {Generator("b"), 1}};
    TIdealEnumerator<RationalField> e(ab, gens);
    MultiDegree slice = {{Generator("a"), 1}, {Generator("b"), 1}};
    auto rows = e.component(slice);
    auto cols = e.monomials_of(slice);
    Matrix<RationalField> m(rows.size(), cols.size(), Q);
    std::map<MagmaMonomial, std::size_t, MagmaLess> idx;
    for (std::size_t i = 0; i < cols.size(); ++i) idx[cols[i]] = i;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [mono, c] : rows[r].terms()) m.at(r, idx.at(mono)) = c;
    CHECK(rref(m).rank == cols.size());
}

TEST_CASE("is_identity on the worked examples") {
    CHECK(is_identity(variety("ca"), qp("(xy)z - (zx)y")));
    CHECK_FALSE(is_identity(variety("mag"), qp("xy - yx")));
    CHECK(is_identity(variety("anti"), qp("(xy)(zt)")));
    CHECK(is_identity(variety("lie"), qp("xy + yx")));
    CHECK_FALSE(is_identity(variety("assoc"), qp("xy - yx")));
}

TEST_CASE("every spanning element is itself an identity") {
    for (const char* name : {"ca", "anti", "lie", "perm"}) {
        auto v = variety(name);
        std::vector<std::pair<Generator, int>> gens = {{Generator("a"), 1},
                                                       {Generator("b"), 1}};
        TIdealEnumerator<RationalField> e(v, gens);
        MultiDegree slice = {{Generator("a"), 1}, {Generator("b"), 2}};
        for (const auto& row : e.component(slice)) CHECK(is_identity(v, row));
    }
}

TEST_CASE("classify_degree2 across the builtins over Q") {
    CHECK(classify_degree2(variety("ca")) == Degree2Class::commutative);
    CHECK(classify_degree2(variety("mag")) == Degree2Class::none);
    CHECK(classify_degree2(variety("ab")) == Degree2Class::abelian);
    CHECK(classify_degree2(variety("triv")) == Degree2Class::trivial);
    CHECK(classify_degree2(variety("anti")) == Degree2Class::anticommutative);
    CHECK(classify_degree2(variety("lie")) == Degree2Class::anticommutative);
    CHECK(classify_degree2(variety("assoc")) == Degree2Class::none);
    CHECK(classify_degree2(variety("perm")) == Degree2Class::none);
    CHECK(classify_degree2(variety("nil2")) == Degree2Class::none);
    CHECK(classify_degree2(variety("cyclic")) == Degree2Class::none);
    CHECK(classify_degree2(variety("alt")) == Degree2Class::anticommutative);
    CHECK(classify_degree2(variety("bool")) == Degree2Class::trivial);
}

TEST_CASE("classify_degree2 in characteristic 2") {
    PrimeField f2(2);
    auto alt2 = builtin_variety<PrimeField>("alt", f2);
    CHECK(classify_degree2(alt2) == Degree2Class::commutative);
    auto bool2 = builtin_variety<PrimeField>("bool", f2);
    CHECK(classify_degree2(bool2) == Degree2Class::commutative);
    auto anti2 = builtin_variety<PrimeField>("anti", f2);
    CHECK(classify_degree2(anti2) == Degree2Class::commutative);
    auto cap2 = builtin_variety<PrimeField>("cap", f2);
    CHECK(classify_degree2(cap2) == Degree2Class::commutative);
}

TEST_CASE("truncated free algebras") {
    std::vector<std::pair<Generator, int>> one = {{Generator("a"), 1}};

    auto mag_tfa = truncated_free_algebra(variety("mag"), one, 3);
    CHECK(mag_tfa.dim() == 4); // a, aa, a(aa), (aa)a
    auto weights = mag_tfa.basis_by_weight();
    CHECK(weights.at(1).size() == 1);
    CHECK(weights.at(2).size() == 1);
    CHECK(weights.at(3).size() == 2);

    auto ca_tfa = truncated_free_algebra(variety("ca"), one, 3);
    CHECK(ca_tfa.dim() == 3); // a, a^2, a^3

    std::vector<std::pair<Generator, int>> two = {{Generator("a"), 1}, {Generator("b"), 1}};
    auto ab_tfa = truncated_free_algebra(variety("ab"), two, 3);
    CHECK(ab_tfa.dim() == 2); // generators only
}

TEST_CASE("projection of an identity instance is zero and products project") {
    auto ca = variety("ca");
    std::vector<std::pair<Generator, int>> two = {{Generator("a"), 1}, {Generator("b"), 1}};
    TruncatedFreeAlgebra<RationalField> t(ca, two, 4);
    // (ab)b - a(bb) is an instance of associativity
    auto coords = t.project(qp("(ab)b - a(bb)"));
    for (const auto& c : coords) CHECK(c == Rational(0));
    // multiplication agrees with raw monomial multiplication + projection
    auto pa = t.project(qp("ab"));
    auto pb = t.project(qp("b"));
    auto prod = t.multiply(pa, pb);
    auto direct = t.project(qp("(ab)b"));
    REQUIRE(prod.size() == direct.size());
    for (std::size_t i = 0; i < prod.size(); ++i) CHECK(prod[i] == direct[i]);
}

TEST_CASE("lambda rules: positive cases contain the stated assignments") {
    auto contains = [&](const std::string& vname,
                        const std::map<std::string, long>& nonzero) {
        auto sol = solve_lambda_rules(variety(vname));
        REQUIRE(sol.has_value());
        std::map<Indeterminate, Rational> a;
        for (Family f : {Family::alpha, Family::beta, Family::gamma, Family::delta})
            for (int i = 1; i <= 4; ++i) a[Indeterminate(f, i)] = Rational(0);
        for (const auto& [name, val] : nonzero)
            a[parse_indeterminate_name(name)] = Rational(val);
        return sol->contains(a, Q);
    };
    CHECK(contains("ca", {{"a1", 1}, {"b1", 1}, {"c1", 1}, {"d1", 1}}));
    CHECK(contains("perm", {{"a1", 1}, {"b3", 1}, {"c4", 1}, {"d4", 1}}));
    CHECK(contains("cyclic", {{"c1", 1}, {"d2", 1}, {"a3", 1}, {"b4", 1}}));
}

TEST_CASE("lambda rules: Lie and associative algebras have no solution over Q") {
    CHECK_FALSE(solve_lambda_rules(variety("lie")).has_value());
    CHECK_FALSE(solve_lambda_rules(variety("assoc")).has_value());
    CHECK_FALSE(solve_lambda_rules(variety("mag")).has_value());
}

TEST_CASE("variety files parse") {
    std::string text =
        "variety myca over q\n"
        "# commutativity and associativity\n"
        "xy - yx\n"
        "(xy)z - x(yz)\n";
    auto v = parse_variety_file<RationalField>(text, Q);
    CHECK(v.name == "myca");
    CHECK(v.identities.size() == 2);
    CHECK(classify_degree2(v) == Degree2Class::commutative);
    CHECK_THROWS(parse_variety_file<RationalField>("xy - yx\n", Q));
}

TEST_CASE("enumeration limit guard") {
    auto ca = variety("ca");
    std::vector<std::pair<Generator, int>> gens = {
        {Generator("a"), 1}, {Generator("b"), 1}, {Generator("c"), 1}};
    TIdealEnumerator<RationalField> e(ca, gens, 5);
    MultiDegree slice = {{Generator("a"), 1}, {Generator("b"), 1}, {Generator("c"), 1}};
    CHECK_THROWS_AS(e.component(slice), limit_exceeded_error);
}
