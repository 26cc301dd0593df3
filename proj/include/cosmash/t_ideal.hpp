#ifndef COSMASH_T_IDEAL_HPP
#define COSMASH_T_IDEAL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cosmash/commpoly.hpp"
#include "cosmash/linalg.hpp"
#include "cosmash/variety.hpp"

namespace cosmash {

inline const Generator& hole_generator() {
    static const Generator hole("_hole");
    return hole;
}

// Enumerates magma monomials, one-hole contexts and T-ideal spanning
// instances over a fixed weighted generator alphabet. Weighted degree of a
// monomial is the weight sum over its leaves.
template <class F>
class TIdealEnumerator {
  public:
    using Poly = NAPolynomial<F>;

    TIdealEnumerator(const VarietyPresentation<F>& variety,
                     std::vector<std::pair<Generator, int>> generators,
                     std::size_t row_limit = 20000)
        : variety_(variety), gens_(std::move(generators)), row_limit_(row_limit),
          closure_(vdetail::identity_closure(variety)),
          graded_(vdetail::closure_is_homogeneous(closure_)) {
        for (const auto& [g, w] : gens_) {
            if (w <= 0) throw error("generator weights must be positive");
            weights_[g] = w;
            min_weight_ = std::min(min_weight_, w);
        }
        if (gens_.empty()) min_weight_ = 1;
        // move identity variables into a reserved namespace so they can
        // never collide with algebra generators
        for (auto& psi : closure_) {
            std::map<Generator, NAPolynomial<F>> rename;
            int next = 1;
            for (const auto& g : psi.generators())
                rename[g] = NAPolynomial<F>::monomial(
                    MagmaMonomial::leaf(Generator("_v", next++)), variety_.field);
            psi = substitute(psi, rename);
        }
    }

    const VarietyPresentation<F>& variety() const { return variety_; }
    const std::vector<std::pair<Generator, int>>& generators() const { return gens_; }
    bool graded() const { return graded_; }
    const std::vector<Poly>& closure() const { return closure_; }

    int weight_of(const Generator& g) const {
        auto it = weights_.find(g);
        if (it == weights_.end()) throw error("unknown generator " + g.str());
        return it->second;
    }

    int weighted_degree(const MultiDegree& md) const {
        int w = 0;
        for (const auto& [g, k] : md) w += k * weight_of(g);
        return w;
    }

    int weighted_degree(const MagmaMonomial& m) const {
        return weighted_degree(multidegree(m));
    }

    // All monomials of the exact multidegree, in descending term order.
    const std::vector<MagmaMonomial>& monomials_of(const MultiDegree& md) {
        auto it = mono_cache_.find(md);
        if (it != mono_cache_.end()) return it->second;
        std::vector<MagmaMonomial> out;
        int total = 0;
        for (const auto& [g, k] : md) total += k;
        if (total == 1) {
            out.push_back(MagmaMonomial::leaf(md.begin()->first));
        } else if (total > 1) {
            for (const auto& [lo, hi] : proper_splits(md)) {
                const auto& ls = monomials_of(lo);
                const auto& rs = monomials_of(hi);
                for (const auto& l : ls)
                    for (const auto& r : rs) out.push_back(MagmaMonomial::node(l, r));
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const MagmaMonomial& a, const MagmaMonomial& b) {
                      return MagmaMonomial::compare(b, a) < 0;
                  });
        out.erase(std::unique(out.begin(), out.end(),
                              [](const MagmaMonomial& a, const MagmaMonomial& b) {
                                  return a == b;
                              }),
                  out.end());
        return mono_cache_.emplace(md, std::move(out)).first->second;
    }

    // All one-hole contexts whose generator leaves have the exact
    // multidegree md; a context is a monomial with one _hole leaf.
    const std::vector<MagmaMonomial>& contexts_of(const MultiDegree& md) {
        auto it = ctx_cache_.find(md);
        if (it != ctx_cache_.end()) return it->second;
        std::vector<MagmaMonomial> out;
        if (md.empty()) {
            out.push_back(MagmaMonomial::leaf(hole_generator()));
        } else {
            for (const auto& [lo, hi] : all_splits(md)) {
                if (!lo.empty())
                    for (const auto& m : monomials_of(lo))
                        for (const auto& c : contexts_of(hi))
                            out.push_back(MagmaMonomial::node(m, c));
                if (!hi.empty())
                    for (const auto& c : contexts_of(lo))
                        for (const auto& m : monomials_of(hi))
                            out.push_back(MagmaMonomial::node(c, m));
            }
        }
        std::sort(out.begin(), out.end(), MagmaLess{});
        out.erase(std::unique(out.begin(), out.end(),
                              [](const MagmaMonomial& a, const MagmaMonomial& b) {
                                  return a == b;
                              }),
                  out.end());
        return ctx_cache_.emplace(md, std::move(out)).first->second;
    }

    // Spanning set of the T-ideal component in one multidegree slice.
    // Requires a graded closure.
    std::vector<Poly> component(const MultiDegree& slice) {
        if (!graded_)
            throw error("variety " + variety_.name +
                        " has a non-homogeneous closure; use the bounded component");
        std::vector<Poly> rows;
        for (const auto& psi : closure_) {
            auto type = vdetail::type_of(psi);
            std::vector<std::pair<Generator, int>> vars(type->begin(), type->end());
            std::map<Generator, MagmaMonomial> sigma;
            enumerate_graded(psi, vars, 0, slice, sigma, rows);
        }
        return rows;
    }

    // Spanning set of all instances every monomial of which has weighted
    // degree <= bound. Sound over any field; the bound is the completeness
    // horizon for non-homogeneous varieties.
    std::vector<Poly> component_bounded(int bound) {
        std::vector<Poly> rows;
        for (const auto& psi : closure_) {
            std::set<Generator> vs = psi.generators();
            std::vector<Generator> vars(vs.begin(), vs.end());
            std::map<Generator, MagmaMonomial> sigma;
            enumerate_bounded(psi, vars, 0, bound, 0, sigma, rows);
        }
        return rows;
    }

    // Context closure of ground relations (polynomials over the algebra
    // generators, e.g. multiplication-table rows of a presented factor).
    std::vector<Poly> ground_instances(const std::vector<Poly>& relations,
                                       const std::optional<MultiDegree>& slice, int bound) {
        std::vector<Poly> rows;
        for (const auto& rel : relations) {
            if (rel.is_zero()) continue;
            if (slice) {
                auto rtype = relation_multidegree(rel);
                if (!rtype) throw error("ground relation is not multidegree-homogeneous");
                MultiDegree rest;
                if (!subtract(*slice, *rtype, rest)) continue;
                for (const auto& ctx : contexts_of(rest)) add_plug(ctx, rel, rows);
            } else {
                int rel_deg = 0;
                for (const auto& [m, c] : rel.terms())
                    rel_deg = std::max(rel_deg, weighted_degree(m));
                for (const auto& md : multidegrees_up_to(bound - rel_deg))
                    for (const auto& ctx : contexts_of(md)) add_plug(ctx, rel, rows);
            }
        }
        return rows;
    }

    // All multidegrees over the alphabet with weighted degree <= bound,
    // including the empty one.
    std::vector<MultiDegree> multidegrees_up_to(int bound) {
        std::vector<MultiDegree> out;
        MultiDegree cur;
        collect_multidegrees(0, bound, cur, out);
        return out;
    }

    void bump_rows(std::size_t& count, std::size_t add) const {
        count += add;
        if (count > row_limit_)
            throw limit_exceeded_error("T-ideal enumeration exceeds the row limit of " +
                                           std::to_string(row_limit_),
                                       count);
    }

  private:
    static bool subtract(const MultiDegree& a, const MultiDegree& b, MultiDegree& out) {
        out.clear();
        MultiDegree r = a;
        for (const auto& [g, k] : b) {
            auto it = r.find(g);
            if (it == r.end() || it->second < k) return false;
            it->second -= k;
            if (it->second == 0) r.erase(it);
        }
        out = std::move(r);
        return true;
    }

    static std::optional<MultiDegree> relation_multidegree(const Poly& rel) {
        std::optional<MultiDegree> type;
        for (const auto& [m, c] : rel.terms()) {
            MultiDegree d = multidegree(m);
            if (!type) type = d;
            else if (*type != d) return std::nullopt;
        }
        return type;
    }

    // proper splits (lo, hi) with lo, hi nonempty and lo+hi = md
    std::vector<std::pair<MultiDegree, MultiDegree>> proper_splits(const MultiDegree& md) {
        std::vector<std::pair<MultiDegree, MultiDegree>> out;
        for (const auto& [lo, hi] : all_splits(md))
            if (!lo.empty() && !hi.empty()) out.emplace_back(lo, hi);
        return out;
    }

    std::vector<std::pair<MultiDegree, MultiDegree>> all_splits(const MultiDegree& md) {
        std::vector<std::pair<Generator, int>> entries(md.begin(), md.end());
        std::vector<std::pair<MultiDegree, MultiDegree>> out;
        std::vector<int> pick(entries.size(), 0);
        while (true) {
            MultiDegree lo, hi;
            for (std::size_t i = 0; i < entries.size(); ++i) {
                if (pick[i] > 0) lo[entries[i].first] = pick[i];
                int rest = entries[i].second - pick[i];
                if (rest > 0) hi[entries[i].first] = rest;
            }
            out.emplace_back(std::move(lo), std::move(hi));
            std::size_t i = 0;
            for (; i < entries.size(); ++i) {
                if (pick[i] < entries[i].second) {
                    ++pick[i];
                    break;
                }
                pick[i] = 0;
            }
            if (i == entries.size()) break;
        }
        return out;
    }

    void collect_multidegrees(std::size_t idx, int budget, MultiDegree& cur,
                              std::vector<MultiDegree>& out) {
        if (idx == gens_.size()) {
            out.push_back(cur);
            return;
        }
        const auto& [g, w] = gens_[idx];
        for (int k = 0; k * w <= budget; ++k) {
            if (k > 0) cur[g] = k;
            collect_multidegrees(idx + 1, budget - k * w, cur, out);
        }
        cur.erase(g);
    }

    void add_plug(const MagmaMonomial& ctx, const Poly& value, std::vector<Poly>& rows) {
        std::map<Generator, Poly> images;
        images[hole_generator()] = value;
        std::set<Generator> ctx_gens;
        collect_generators(ctx, ctx_gens);
        for (const auto& g : ctx_gens)
            if (g != hole_generator())
                images[g] = Poly::monomial(MagmaMonomial::leaf(g), variety_.field);
        Poly row = substitute(Poly::monomial(ctx, variety_.field), images);
        if (!row.is_zero()) {
            std::size_t count = rows.size();
            bump_rows(count, 1);
            rows.push_back(std::move(row));
        }
    }

    void enumerate_graded(const Poly& psi, const std::vector<std::pair<Generator, int>>& vars,
                          std::size_t idx, const MultiDegree& remaining,
                          std::map<Generator, MagmaMonomial>& sigma, std::vector<Poly>& rows) {
        if (idx == vars.size()) {
            std::map<Generator, Poly> images;
            for (const auto& [v, m] : sigma)
                images[v] = Poly::monomial(m, variety_.field);
            Poly value = substitute(psi, images);
            if (value.is_zero()) return;
            for (const auto& ctx : contexts_of(remaining)) add_plug(ctx, value, rows);
            return;
        }
        const auto& [var, mult] = vars[idx];
        // candidate multidegrees mu with mult * mu <= remaining pointwise
        MultiDegree cap;
        for (const auto& [g, k] : remaining)
            if (k / mult >= 1) cap[g] = k / mult;
        std::vector<MultiDegree> cands = submultidegrees(cap);
        for (const auto& mu : cands) {
            if (mu.empty()) continue;
            MultiDegree scaled;
            for (const auto& [g, k] : mu) scaled[g] = k * mult;
            MultiDegree rest;
            if (!subtract(remaining, scaled, rest)) continue;
            for (const auto& m : monomials_of(mu)) {
                sigma.emplace(var, m);
                enumerate_graded(psi, vars, idx + 1, rest, sigma, rows);
                sigma.erase(var);
            }
        }
    }

    std::vector<MultiDegree> submultidegrees(const MultiDegree& cap) {
        std::vector<std::pair<Generator, int>> entries(cap.begin(), cap.end());
        std::vector<MultiDegree> out;
        std::vector<int> pick(entries.size(), 0);
        while (true) {
            MultiDegree md;
            for (std::size_t i = 0; i < entries.size(); ++i)
                if (pick[i] > 0) md[entries[i].first] = pick[i];
            out.push_back(std::move(md));
            std::size_t i = 0;
            for (; i < entries.size(); ++i) {
                if (pick[i] < entries[i].second) {
                    ++pick[i];
                    break;
                }
                pick[i] = 0;
            }
            if (i == entries.size()) break;
        }
        return out;
    }

    void enumerate_bounded(const Poly& psi, const std::vector<Generator>& vars,
                           std::size_t idx, int bound, int spent,
                           std::map<Generator, MagmaMonomial>& sigma, std::vector<Poly>& rows) {
        if (idx == vars.size()) {
            std::map<Generator, Poly> images;
            for (const auto& [v, m] : sigma)
                images[v] = Poly::monomial(m, variety_.field);
            Poly value = substitute(psi, images);
            if (value.is_zero()) return;
            int value_deg = 0;
            for (const auto& [m, c] : value.terms())
                value_deg = std::max(value_deg, weighted_degree(m));
            if (value_deg > bound) return;
            for (const auto& md : multidegrees_up_to(bound - value_deg))
                for (const auto& ctx : contexts_of(md)) add_plug(ctx, value, rows);
            return;
        }
        // every later variable will contribute weight at least min_weight_
        int reserve = static_cast<int>(vars.size() - idx - 1) * min_weight_;
        int budget = bound - spent - reserve;
        for (const auto& md : multidegrees_up_to(budget)) {
            if (md.empty()) continue;
            int w = weighted_degree(md);
            for (const auto& m : monomials_of(md)) {
                sigma.emplace(vars[idx], m);
                enumerate_bounded(psi, vars, idx + 1, bound, spent + w, sigma, rows);
                sigma.erase(vars[idx]);
            }
        }
    }

    VarietyPresentation<F> variety_;
    std::vector<std::pair<Generator, int>> gens_;
    std::map<Generator, int> weights_;
    int min_weight_ = 1 << 20;
    std::size_t row_limit_;
    std::vector<Poly> closure_;
    bool graded_;
    std::map<MultiDegree, std::vector<MagmaMonomial>> mono_cache_;
    std::map<MultiDegree, std::vector<MagmaMonomial>> ctx_cache_;
};

// The spanning set of the T-ideal component of the variety in the given
// multidegree slice (graded varieties) over the given generators.
template <class F>
std::vector<NAPolynomial<F>> t_ideal_component(const VarietyPresentation<F>& v,
                                               const std::vector<std::pair<Generator, int>>& gens,
                                               const MultiDegree& slice,
                                               std::size_t row_limit = 20000) {
    TIdealEnumerator<F> e(v, gens, row_limit);
    return e.component(slice);
}

// Degree-bound variant: every instance whose monomials all stay within the
// weighted bound, across all degree mixes.
template <class F>
std::vector<NAPolynomial<F>> t_ideal_component(const VarietyPresentation<F>& v,
                                               const std::vector<std::pair<Generator, int>>& gens,
                                               int bound, std::size_t row_limit = 20000) {
    TIdealEnumerator<F> e(v, gens, row_limit);
    return e.component_bounded(bound);
}

namespace vdetail {

template <class F>
std::vector<typename F::Scalar> vectorize(const NAPolynomial<F>& p,
                                          const std::vector<MagmaMonomial>& cols,
                                          const F& field) {
    std::map<MagmaMonomial, std::size_t, MagmaLess> index;
    for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
    std::vector<typename F::Scalar> out(cols.size(), field.zero());
    for (const auto& [m, c] : p.terms()) {
        auto it = index.find(m);
        if (it == index.end()) throw error("monomial " + m.str() + " outside the slice");
        out[it->second] = c;
    }
    return out;
}

// Membership of phi in the span of rows, all expressed over cols.
template <class F>
bool member_of_span(const NAPolynomial<F>& phi, const std::vector<NAPolynomial<F>>& rows,
                    const std::vector<MagmaMonomial>& cols, const F& field) {
    if (phi.is_zero()) return true;
    std::vector<std::vector<typename F::Scalar>> span;
    for (const auto& r : rows) span.push_back(vectorize(r, cols, field));
    return in_span(vectorize(phi, cols, field), span, field).has_value();
}

} // namespace vdetail

// Sound identity test, complete for homogeneous varieties within the degree
// bound; for non-homogeneous varieties the bound is the completeness
// horizon (membership may need instances of degree above the polynomial's
// own degree).
template <class F>
bool is_identity(const VarietyPresentation<F>& v, const NAPolynomial<F>& phi,
                 std::size_t row_limit = 20000, std::optional<int> bound_opt = std::nullopt) {
    if (phi.is_zero()) return true;
    std::set<Generator> gen_set = phi.generators();
    std::vector<std::pair<Generator, int>> gens;
    for (const auto& g : gen_set) gens.emplace_back(g, 1);
    TIdealEnumerator<F> e(v, gens, row_limit);

    if (e.graded()) {
        // a graded T-ideal contains phi iff it contains each of its
        // multihomogeneous components
        std::map<std::string, NAPolynomial<F>> comps;
        for (const auto& [m, c] : phi.terms()) {
            std::string key;
            for (const auto& [g, k] : multidegree(m))
                key += g.str() + "^" + std::to_string(k) + " ";
            auto it = comps.find(key);
            if (it == comps.end()) it = comps.emplace(key, NAPolynomial<F>(v.field)).first;
            it->second.add_term(m, c);
        }
        for (const auto& [key, comp] : comps) {
            MultiDegree slice = multidegree(comp.terms().begin()->first);
            auto rows = e.component(slice);
            auto cols = e.monomials_of(slice);
            if (!vdetail::member_of_span(comp, rows, cols, v.field)) return false;
        }
        return true;
    }

    int bound = bound_opt.value_or(phi.terms().rbegin()->first.degree());
    auto rows = e.component_bounded(bound);
    std::vector<MagmaMonomial> cols;
    for (const auto& md : e.multidegrees_up_to(bound)) {
        if (md.empty()) continue;
        for (const auto& m : e.monomials_of(md)) cols.push_back(m);
    }
    std::sort(cols.begin(), cols.end(), MagmaLess{});
    return vdetail::member_of_span(phi, rows, cols, v.field);
}

enum class Degree2Class { none, commutative, anticommutative, abelian, trivial };

inline std::string to_string(Degree2Class c) {
    switch (c) {
        case Degree2Class::none: return "none";
        case Degree2Class::commutative: return "commutative";
        case Degree2Class::anticommutative: return "anticommutative";
        case Degree2Class::abelian: return "abelian";
        case Degree2Class::trivial: return "trivial";
    }
    return "?";
}

// Tests membership of x, xy, xy - yx, xy + yx in the T-ideal at degrees
// <= 2 and reports the strongest class. In characteristic 2 the commutative
// and anticommutative cases coincide and commutative is reported.
template <class F>
Degree2Class classify_degree2(const VarietyPresentation<F>& v, std::size_t row_limit = 20000) {
    const F& field = v.field;
    auto probe = [&](const std::string& text) {
        return is_identity(v, parse_expression<F>(text, field), row_limit, 2);
    };
    if (probe("x")) return Degree2Class::trivial;
    if (probe("xy")) return Degree2Class::abelian;
    bool comm = probe("xy - yx");
    if (field.characteristic() == 2) return comm ? Degree2Class::commutative : Degree2Class::none;
    if (comm) return Degree2Class::commutative;
    if (probe("xy + yx")) return Degree2Class::anticommutative;
    return Degree2Class::none;
}

// Affine family of 16 rule coefficients (alpha_i, beta_i, gamma_i, delta_i)
// making the four pull-out identities hold in the variety.
template <class F>
struct LambdaRuleSolution {
    std::map<Indeterminate, typename F::Scalar> particular;
    std::vector<std::map<Indeterminate, typename F::Scalar>> kernel;

    // Membership of a full 16-coefficient assignment in the family.
    bool contains(const std::map<Indeterminate, typename F::Scalar>& a, F field) const {
        std::vector<Indeterminate> vars;
        for (Family f : {Family::alpha, Family::beta, Family::gamma, Family::delta})
            for (int i = 1; i <= 4; ++i) vars.emplace_back(f, i);
        std::vector<typename F::Scalar> diff;
        for (const auto& v : vars) {
            auto it = a.find(v);
            if (it == a.end()) return false;
            diff.push_back(field.sub(it->second, particular.at(v)));
        }
        std::vector<std::vector<typename F::Scalar>> span;
        for (const auto& k : kernel) {
            std::vector<typename F::Scalar> vec;
            for (const auto& v : vars) vec.push_back(k.at(v));
            span.push_back(std::move(vec));
        }
        return in_span(diff, span, field).has_value();
    }
};

template <class F>
std::optional<LambdaRuleSolution<F>> solve_lambda_rules(const VarietyPresentation<F>& v,
                                                        std::size_t row_limit = 20000) {
    const F& field = v.field;
    Generator x("x"), y("y"), z("z");
    std::vector<std::pair<Generator, int>> gens = {{x, 1}, {y, 1}, {z, 1}};
    TIdealEnumerator<F> e(v, gens, row_limit);
    MultiDegree slice = {{x, 1}, {y, 1}, {z, 1}};

    std::vector<NAPolynomial<F>> rows;
    std::vector<MagmaMonomial> cols;
    if (e.graded()) {
        rows = e.component(slice);
        cols = e.monomials_of(slice);
    } else {
        rows = e.component_bounded(3);
        for (const auto& md : e.multidegrees_up_to(3)) {
            if (md.empty()) continue;
            for (const auto& m : e.monomials_of(md)) cols.push_back(m);
        }
        std::sort(cols.begin(), cols.end(), MagmaLess{});
    }

    auto vec = [&](const std::string& s) {
        return vdetail::vectorize(parse_expression<F>(s, field), cols, field);
    };
    const std::array<std::vector<typename F::Scalar>, 4> rhs_basis = {
        vec("x(yz)"), vec("x(zy)"), vec("(yz)x"), vec("(zy)x")};
    const std::array<std::string, 4> lhs_texts = {"(xy)z", "(yx)z", "z(xy)", "z(yx)"};
    const std::array<Family, 4> families = {Family::alpha, Family::beta, Family::gamma,
                                            Family::delta};

    LambdaRuleSolution<F> sol;
    std::vector<Indeterminate> all_vars;
    for (Family f : families)
        for (int i = 1; i <= 4; ++i) all_vars.emplace_back(f, i);
    for (const auto& var : all_vars) sol.particular[var] = field.zero();

    for (int r = 0; r < 4; ++r) {
        // solve LHS = sum_i c_i * rhs_i modulo the T-ideal slice: unknowns
        // c_1..c_4 then one multiplier per spanning row
        std::size_t n = cols.size();
        std::size_t k = 4 + rows.size();
        Matrix<F> m(n, k, field);
        for (std::size_t i = 0; i < n; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = rhs_basis[j][i];
        for (std::size_t rr = 0; rr < rows.size(); ++rr) {
            auto rv = vdetail::vectorize(rows[rr], cols, field);
            for (std::size_t i = 0; i < n; ++i) m.at(i, 4 + rr) = rv[i];
        }
        auto target = vec(lhs_texts[r]);
        auto aff = solve_affine(m, target);
        if (!aff) return std::nullopt;
        for (int j = 0; j < 4; ++j)
            sol.particular[Indeterminate(families[r], j + 1)] = aff->particular[j];
        for (const auto& kv : aff->kernel) {
            bool nontrivial = false;
            for (int j = 0; j < 4; ++j)
                if (!field.is_zero(kv[j])) nontrivial = true;
            if (!nontrivial) continue;
            std::map<Indeterminate, typename F::Scalar> dir;
            for (const auto& var : all_vars) dir[var] = field.zero();
            for (int j = 0; j < 4; ++j) dir[Indeterminate(families[r], j + 1)] = kv[j];
            sol.kernel.push_back(std::move(dir));
        }
    }

    // re-verify: the particular solution must make all four rules identities
    auto leafp = [&](const std::string& s) { return parse_expression<F>(s, field); };
    for (int r = 0; r < 4; ++r) {
        NAPolynomial<F> residue = leafp(lhs_texts[r]);
        const std::array<std::string, 4> rhs_texts = {"x(yz)", "x(zy)", "(yz)x", "(zy)x"};
        for (int j = 0; j < 4; ++j) {
            auto c = sol.particular[Indeterminate(families[r], j + 1)];
            residue = residue - leafp(rhs_texts[j]).scaled(c);
        }
        if (!is_identity(v, residue, row_limit))
            throw error("lambda-rule solution failed re-verification");
    }
    return sol;
}

} // namespace cosmash

#endif
