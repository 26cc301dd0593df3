#ifndef COSMASH_EQSYS_HPP
#define COSMASH_EQSYS_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cosmash/appendix_data.hpp"
#include "cosmash/commpoly.hpp"
#include "cosmash/commpoly_io.hpp"
#include "cosmash/hrewrite.hpp"
#include "cosmash/magma_io.hpp"
#include "cosmash/recipes.hpp"

namespace cosmash {

using IntPoly = CommPolynomial<IntegerRing>;

struct EquationBlock {
    int recipe_index;    // into equation_recipes()
    int first_index;     // 1-based equation numbering
    int last_index;
    std::vector<MagmaMonomial> support; // family monomial per emitted equation
};

// The 96 polynomials over Z in the 16 rule coefficients, in generation
// order: 8 blocks of 4 (degree-3 recipes) followed by 8 blocks of 8.
struct EquationSystem {
    std::vector<IntPoly> equations;
    std::vector<EquationBlock> blocks;
};

namespace detail {

// The ordered quadruple produced by pulling x across every monomial of the
// stage input where a rule applies. The quadruple must come out identical
// (same monomials, same rule order) for every applicable input; that is
// what makes the within-block equation numbering well defined.
inline std::array<MagmaMonomial, 4> stage_quadruple(const SymbolicNAPolynomial& stage,
                                                    const MagmaMonomial& x) {
    std::optional<std::array<MagmaMonomial, 4>> found;
    for (const auto& [m, c] : stage.terms()) {
        auto app = h_rule_application(m, x);
        if (!app) continue;
        if (!found) {
            found = app->replaced;
        } else if (*found != app->replaced) {
            throw error("pull of " + x.str() + " is ambiguous across inputs");
        }
    }
    if (!found) throw error("pull of " + x.str() + " never applies");
    return *found;
}

// The support family of a block, ordered as the equation listing orders it:
// the final pull's rule quadruple X(yz), X(zy), (yz)X, (zy)X first, then (in
// degree-4 blocks) the quadruple of the pull before it.
inline std::vector<MagmaMonomial> ordered_support(const Recipe& r) {
    MagmaMonomial p = parse_monomial(r.p);
    std::vector<MagmaMonomial> chain_all;
    for (const auto& n : r.lhs) chain_all.push_back(parse_monomial(n));

    std::vector<MagmaMonomial> support;
    if (p.degree() == 3) {
        std::vector<MagmaMonomial> prefix(chain_all.begin(), chain_all.end() - 1);
        auto quad = stage_quadruple(h_compose(p, prefix), chain_all.back());
        support.assign(quad.begin(), quad.end());
    } else {
        std::vector<MagmaMonomial> prefix2(chain_all.begin(), chain_all.end() - 2);
        SymbolicNAPolynomial stage2 = h_compose(p, prefix2);
        auto quad_penultimate = stage_quadruple(stage2, chain_all[chain_all.size() - 2]);
        SymbolicNAPolynomial stage1 = h_apply(stage2, chain_all[chain_all.size() - 2]);
        auto quad_final = stage_quadruple(stage1, chain_all.back());
        support.assign(quad_final.begin(), quad_final.end());
        support.insert(support.end(), quad_penultimate.begin(), quad_penultimate.end());
    }
    for (const auto& m : support)
        if (m.degree() != p.degree())
            throw error("support monomial " + m.str() + " is not a top-level product");
    return support;
}

} // namespace detail

// Runs every recipe and collects the coefficient of each independent-family
// monomial as one equation. Deterministic: blocks in recipe order, equations
// within a block in the pull order of their support monomials, which
// reproduces the equation numbering of the reference listing.
inline EquationSystem generate_system() {
    EquationSystem sys;
    int next_index = 1;
    const auto& recipes = equation_recipes();
    for (std::size_t ri = 0; ri < recipes.size(); ++ri) {
        const Recipe& r = recipes[ri];
        MagmaMonomial p = parse_monomial(r.p);
        auto parse_chain = [](const std::vector<std::string>& names) {
            std::vector<MagmaMonomial> xs;
            for (const auto& n : names) xs.push_back(parse_monomial(n));
            return xs;
        };
        SymbolicNAPolynomial lhs = h_compose(p, parse_chain(r.lhs));
        SymbolicNAPolynomial rhs = r.rhs.empty() ? SymbolicNAPolynomial::monomial(p)
                                                 : h_compose(p, parse_chain(r.rhs));
        SymbolicNAPolynomial q = lhs - rhs;

        std::vector<MagmaMonomial> family = detail::ordered_support(r);
        auto in_family = [&](const MagmaMonomial& m) {
            for (const auto& f : family)
                if (f == m) return true;
            return false;
        };
        for (const auto& [m, c] : q.terms())
            if (!in_family(m))
                throw error("recipe for equations " + std::to_string(r.first_index) + ".." +
                            std::to_string(r.last_index) +
                            " produced a stray support monomial " + m.str());

        EquationBlock block;
        block.recipe_index = static_cast<int>(ri);
        block.first_index = next_index;
        for (const auto& f : family) {
            auto it = q.terms().find(f);
            if (it == q.terms().end()) continue;
            sys.equations.push_back(it->second);
            block.support.push_back(f);
            ++next_index;
        }
        block.last_index = next_index - 1;
        int expected = r.last_index - r.first_index + 1;
        if (block.last_index - block.first_index + 1 != expected)
            throw error("recipe for equations " + std::to_string(r.first_index) + ".." +
                        std::to_string(r.last_index) + " emitted " +
                        std::to_string(block.last_index - block.first_index + 1) +
                        " equations instead of " + std::to_string(expected));
        sys.blocks.push_back(std::move(block));
    }
    return sys;
}

inline std::vector<IntPoly> appendix_equations() {
    std::vector<IntPoly> eqs;
    for (const char* text : appendix_equation_texts())
        eqs.push_back(parse_commpoly<IntegerRing>(text));
    return eqs;
}

struct FixtureReport {
    int matched = 0;
    std::vector<int> missing; // 1-based fixture indices with no generated mate
    std::vector<int> extra;   // 1-based generated indices with no fixture mate
    // generated index (1-based) -> fixture index (1-based), for matches
    std::map<int, int> alignment;
    bool blocks_aligned = true; // every match stays inside its own block

    bool perfect() const { return matched == 96 && missing.empty() && extra.empty(); }
};

// Set comparison after canonical sign normalization; intra-block equation
// order in the reference listing is not contractual.
inline FixtureReport check_against_fixture(const EquationSystem& sys) {
    std::vector<IntPoly> expected = appendix_equations();
    FixtureReport rep;

    std::vector<bool> fixture_used(expected.size(), false);
    for (std::size_t gi = 0; gi < sys.equations.size(); ++gi) {
        IntPoly g = sign_normalized(sys.equations[gi]);
        bool found = false;
        for (std::size_t fi = 0; fi < expected.size(); ++fi) {
            if (fixture_used[fi]) continue;
            if (g == sign_normalized(expected[fi])) {
                fixture_used[fi] = true;
                rep.alignment[static_cast<int>(gi) + 1] = static_cast<int>(fi) + 1;
                ++rep.matched;
                found = true;
                break;
            }
        }
        if (!found) rep.extra.push_back(static_cast<int>(gi) + 1);
    }
    for (std::size_t fi = 0; fi < expected.size(); ++fi)
        if (!fixture_used[fi]) rep.missing.push_back(static_cast<int>(fi) + 1);

    for (const auto& block : sys.blocks) {
        const Recipe& r = equation_recipes()[block.recipe_index];
        for (int gi = block.first_index; gi <= block.last_index; ++gi) {
            auto it = rep.alignment.find(gi);
            if (it == rep.alignment.end() || it->second < r.first_index ||
                it->second > r.last_index)
                rep.blocks_aligned = false;
        }
    }
    return rep;
}

// The sixteen rule coefficients in canonical order alpha1..4, beta1..4,
// gamma1..4, delta1..4.
inline std::vector<Indeterminate> rule_indeterminates() {
    std::vector<Indeterminate> vars;
    for (Family f : {Family::alpha, Family::beta, Family::gamma, Family::delta})
        for (int i = 1; i <= 4; ++i) vars.emplace_back(f, i);
    return vars;
}

template <class F>
struct Violation {
    int index; // 1-based equation index
    typename F::Scalar value;
};

// Exact evaluation of all 96 equations at a full 16-coefficient assignment.
template <class F>
std::vector<Violation<F>> evaluate_assignment(const EquationSystem& sys,
                                              const std::map<Indeterminate, typename F::Scalar>& a,
                                              F field) {
    for (const Indeterminate& v : rule_indeterminates())
        if (!a.count(v)) throw error("assignment missing coefficient " + v.str());
    std::vector<Violation<F>> out;
    for (std::size_t i = 0; i < sys.equations.size(); ++i) {
        auto p = change_ring(sys.equations[i], field,
                             [&](const Integer& c) { return field.from_integer(c); });
        auto value = p.evaluate(a);
        if (!field.is_zero(value))
            out.push_back({static_cast<int>(i) + 1, value});
    }
    return out;
}

// Indeterminate substitution delta3 <-> delta4 applied to every equation.
inline EquationSystem swap_delta(const EquationSystem& sys) {
    std::map<Indeterminate, Indeterminate> sigma;
    sigma[Indeterminate(Family::delta, 3)] = Indeterminate(Family::delta, 4);
    sigma[Indeterminate(Family::delta, 4)] = Indeterminate(Family::delta, 3);
    EquationSystem out;
    out.blocks = sys.blocks;
    for (const auto& e : sys.equations) out.equations.push_back(e.rename(sigma));
    return out;
}

// True iff sum mu_i * f_i equals the expected integer exactly.
inline bool verify_certificate(const EquationSystem& sys, const std::vector<IntPoly>& mu,
                               const Integer& expected) {
    if (mu.size() != sys.equations.size())
        throw error("certificate has " + std::to_string(mu.size()) + " cofactors for " +
                    std::to_string(sys.equations.size()) + " equations");
    IntPoly acc{IntegerRing{}};
    for (std::size_t i = 0; i < mu.size(); ++i)
        acc = acc + mu[i] * sys.equations[i];
    return acc == IntPoly::constant(expected);
}

// lambda_{2k} = gamma_k and lambda_{2k+8} = alpha_k, all other entries zero:
// the coherence coefficients induced by a rule-coefficient assignment.
template <class F>
std::map<Indeterminate, typename F::Scalar> coherence_coefficients(
    const std::map<Indeterminate, typename F::Scalar>& a, F field) {
    std::map<Indeterminate, typename F::Scalar> lambda;
    for (int i = 1; i <= 16; ++i)
        lambda[Indeterminate(Family::lambda, i)] = field.zero();
    for (int k = 1; k <= 4; ++k) {
        auto g = a.find(Indeterminate(Family::gamma, k));
        auto al = a.find(Indeterminate(Family::alpha, k));
        if (g != a.end()) lambda[Indeterminate(Family::lambda, 2 * k)] = g->second;
        if (al != a.end()) lambda[Indeterminate(Family::lambda, 2 * k + 8)] = al->second;
    }
    return lambda;
}

} // namespace cosmash

#endif
