#ifndef COSMASH_HREWRITE_HPP
#define COSMASH_HREWRITE_HPP

#include <array>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "cosmash/commpoly.hpp"
#include "cosmash/magma.hpp"

namespace cosmash {

// Multilinear magma polynomial with coefficients in Z[alpha_i, beta_i,
// gamma_i, delta_i]: the codomain of the H rewriting operator.
class SymbolicNAPolynomial {
  public:
    using Coef = CommPolynomial<IntegerRing>;
    using TermMap = std::map<MagmaMonomial, Coef, MagmaLess>;

    SymbolicNAPolynomial() = default;

    static SymbolicNAPolynomial monomial(const MagmaMonomial& m) {
        SymbolicNAPolynomial p;
        p.add_term(m, Coef::constant(Integer(1)));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const MagmaMonomial& m, const Coef& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SymbolicNAPolynomial operator+(const SymbolicNAPolynomial& o) const {
        SymbolicNAPolynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    SymbolicNAPolynomial operator-(const SymbolicNAPolynomial& o) const {
        SymbolicNAPolynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    SymbolicNAPolynomial scaled(const Coef& s) const {
        SymbolicNAPolynomial r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }

    bool operator==(const SymbolicNAPolynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto it = o.terms_.begin();
        for (const auto& [m, c] : terms_) {
            if (m != it->first || !(c == it->second)) return false;
            ++it;
        }
        return true;
    }

  private:
    TermMap terms_;
};

// The four rewrite shapes of the degree-three rules, with the coefficient
// family weighting each right hand side:
//   (Xy)z -> alpha,  (yX)z -> beta,  z(Xy) -> gamma,  z(yX) -> delta.
// Each right hand side is the family-weighted sum of X(yz), X(zy), (yz)X,
// (zy)X.
struct RuleTable {
    struct Rule {
        bool parent_is_left; // is the product containing X the left factor?
        bool x_is_left;      // is X the left factor of its parent?
        Family family;
    };
    static const std::array<Rule, 4>& rules() {
        static const std::array<Rule, 4> t = {{
            {true, true, Family::alpha},
            {true, false, Family::beta},
            {false, true, Family::gamma},
            {false, false, Family::delta},
        }};
        return t;
    }
    static Family family_for(bool parent_is_left, bool x_is_left) {
        for (const auto& r : rules())
            if (r.parent_is_left == parent_is_left && r.x_is_left == x_is_left)
                return r.family;
        throw error("rule dispatch is not exhaustive"); // unreachable
    }
};

struct AtRoot {};
struct NotPresent {};
// Path to an occurrence: false = left child, true = right child.
using LocateResult = std::variant<NotPresent, AtRoot, std::vector<bool>>;

namespace detail {

inline void find_occurrences(const MagmaMonomial& m, const MagmaMonomial& x,
                             std::vector<bool>& path,
                             std::vector<std::vector<bool>>& hits) {
    if (m == x) {
        hits.push_back(path);
        return;
    }
    if (m.is_leaf()) return;
    path.push_back(false);
    find_occurrences(m.left(), x, path, hits);
    path.back() = true;
    find_occurrences(m.right(), x, path, hits);
    path.pop_back();
}

inline bool monomial_is_multilinear(const MagmaMonomial& m) {
    for (const auto& [g, k] : multidegree(m))
        if (k != 1) return false;
    return true;
}

inline MagmaMonomial replace_at(const MagmaMonomial& m, const std::vector<bool>& path,
                                std::size_t depth, const MagmaMonomial& sub) {
    if (depth == path.size()) return sub;
    if (!path[depth])
        return MagmaMonomial::node(replace_at(m.left(), path, depth + 1, sub), m.right());
    return MagmaMonomial::node(m.left(), replace_at(m.right(), path, depth + 1, sub));
}

inline MagmaMonomial subtree_at(const MagmaMonomial& m, const std::vector<bool>& path,
                                std::size_t len) {
    MagmaMonomial cur = m;
    for (std::size_t i = 0; i < len; ++i) cur = path[i] ? cur.right() : cur.left();
    return cur;
}

} // namespace detail

// Finds the occurrence of X as a subtree of M. Multilinearity makes the
// occurrence unique; two or more occurrences signal a caller bug. Depth < 2
// reports AtRoot: the submonomial is already outside every bracket that a
// rule could remove.
inline LocateResult locate(const MagmaMonomial& m, const MagmaMonomial& x) {
    if (!detail::monomial_is_multilinear(m))
        throw error("H operator requires a multilinear monomial, got " + m.str());
    std::vector<bool> path;
    std::vector<std::vector<bool>> hits;
    detail::find_occurrences(m, x, path, hits);
    if (hits.empty()) return NotPresent{};
    if (hits.size() > 1)
        throw error("submonomial " + x.str() + " occurs " + std::to_string(hits.size()) +
                    " times in " + m.str());
    if (hits[0].size() < 2) return AtRoot{};
    return hits[0];
}

// A matched rule at an occurrence of X in M: the coefficient family and the
// four rewritten monomials in rule order X(yz), X(zy), (yz)X, (zy)X,
// already placed back into their context.
struct RuleApplication {
    Family family;
    std::array<MagmaMonomial, 4> replaced;
};

// Matches one of the four rule shapes at the occurrence of X in M, or
// nothing when X is absent or already outside the parentheses.
inline std::optional<RuleApplication> h_rule_application(const MagmaMonomial& m,
                                                         const MagmaMonomial& x) {
    LocateResult loc = locate(m, x);
    if (!std::holds_alternative<std::vector<bool>>(loc)) return std::nullopt;

    const auto& path = std::get<std::vector<bool>>(loc);
    const std::vector<bool> gpath(path.begin(), path.end() - 2);
    MagmaMonomial grand = detail::subtree_at(m, path, path.size() - 2);
    bool parent_is_left = !path[path.size() - 2];
    bool x_is_left = !path[path.size() - 1];

    MagmaMonomial parent = parent_is_left ? grand.left() : grand.right();
    MagmaMonomial z = parent_is_left ? grand.right() : grand.left();
    MagmaMonomial y = x_is_left ? parent.right() : parent.left();

    RuleApplication app;
    app.family = RuleTable::family_for(parent_is_left, x_is_left);
    const MagmaMonomial rhs[4] = {
        MagmaMonomial::node(x, MagmaMonomial::node(y, z)), // X(yz)
        MagmaMonomial::node(x, MagmaMonomial::node(z, y)), // X(zy)
        MagmaMonomial::node(MagmaMonomial::node(y, z), x), // (yz)X
        MagmaMonomial::node(MagmaMonomial::node(z, y), x), // (zy)X
    };
    for (int i = 0; i < 4; ++i) app.replaced[i] = detail::replace_at(m, gpath, 0, rhs[i]);
    return app;
}

// One rewriting step: pulls X one step outside of the parentheses when one
// of the four rule shapes matches at the occurrence, otherwise returns M
// itself with coefficient 1.
inline SymbolicNAPolynomial h_step(const MagmaMonomial& m, const MagmaMonomial& x) {
    auto app = h_rule_application(m, x);
    if (!app) return SymbolicNAPolynomial::monomial(m);
    SymbolicNAPolynomial out;
    for (int i = 0; i < 4; ++i)
        out.add_term(app->replaced[i],
                     SymbolicNAPolynomial::Coef::variable(Indeterminate(app->family, i + 1)));
    return out;
}

// Linear extension of h_step; coefficients multiply in Z[alpha..delta].
inline SymbolicNAPolynomial h_apply(const SymbolicNAPolynomial& p, const MagmaMonomial& x) {
    SymbolicNAPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        SymbolicNAPolynomial step = h_step(m, x);
        for (const auto& [m2, c2] : step.terms()) out.add_term(m2, c2 * c);
    }
    return out;
}

// Fold of h_apply, innermost application first.
inline SymbolicNAPolynomial h_compose(const SymbolicNAPolynomial& p,
                                      const std::vector<MagmaMonomial>& xs) {
    SymbolicNAPolynomial out = p;
    for (const auto& x : xs) out = h_apply(out, x);
    return out;
}

inline SymbolicNAPolynomial h_compose(const MagmaMonomial& p,
                                      const std::vector<MagmaMonomial>& xs) {
    return h_compose(SymbolicNAPolynomial::monomial(p), xs);
}

} // namespace cosmash

#endif
