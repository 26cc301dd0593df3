#ifndef COSMASH_COSMASH_HPP
#define COSMASH_COSMASH_HPP

#include <memory>
#include <optional>
#include <vector>

#include "cosmash/fd_algebra.hpp"
#include "cosmash/truncated.hpp"

namespace cosmash {

// One factor of a coproduct: a block of generators with weights, free when
// it has no relations, presented by its multiplication table otherwise.
template <class F>
struct CoproductFactor {
    std::vector<Generator> gens;
    std::vector<int> weights;
    std::vector<NAPolynomial<F>> relations;

    static CoproductFactor free_factor(const std::vector<std::string>& names) {
        CoproductFactor f;
        for (const auto& n : names) {
            f.gens.push_back(Generator(n));
            f.weights.push_back(1);
        }
        return f;
    }

    // Basis elements of a finite-dimensional algebra become generators; the
    // table rows e_i e_j - sum_k c e_k become ground relations. Weights
    // default to 1 and must be overridden when the factor is itself graded
    // (for instance a cosmash product used as a factor).
    static CoproductFactor from_fd(const FDAlgebra<F>& alg, const std::string& prefix,
                                   std::vector<int> weights = {}) {
        CoproductFactor f;
        const F& field = alg.field();
        if (weights.empty()) weights.assign(alg.dim(), 1);
        if (static_cast<int>(weights.size()) != alg.dim())
            throw error("factor weights do not match the algebra dimension");
        for (int i = 0; i < alg.dim(); ++i) {
            f.gens.push_back(Generator(prefix, i + 1));
            f.weights.push_back(weights[i]);
        }
        for (int i = 0; i < alg.dim(); ++i)
            for (int j = 0; j < alg.dim(); ++j) {
                NAPolynomial<F> rel(field);
                rel.add_term(MagmaMonomial::node(MagmaMonomial::leaf(f.gens[i]),
                                                 MagmaMonomial::leaf(f.gens[j])),
                             field.one());
                for (int k = 0; k < alg.dim(); ++k) {
                    auto c = alg.constant(i, j, k);
                    if (!field.is_zero(c))
                        rel.add_term(MagmaMonomial::leaf(f.gens[k]), field.neg(c));
                }
                if (!rel.is_zero()) f.relations.push_back(std::move(rel));
            }
        return f;
    }
};

// The coproduct of the factors in the variety, as a truncated free algebra
// on the disjoint union of the generators modulo the variety's identities
// and the factors' table relations.
template <class F>
std::shared_ptr<TruncatedFreeAlgebra<F>> coproduct_truncated(
    const VarietyPresentation<F>& v, const std::vector<CoproductFactor<F>>& factors,
    int bound, std::size_t row_limit = 20000) {
    std::vector<std::pair<Generator, int>> gens;
    std::vector<NAPolynomial<F>> relations;
    std::set<Generator> seen;
    for (const auto& f : factors) {
        for (std::size_t i = 0; i < f.gens.size(); ++i) {
            if (!seen.insert(f.gens[i]).second)
                throw error("factors share the generator " + f.gens[i].str());
            gens.emplace_back(f.gens[i], f.weights[i]);
        }
        relations.insert(relations.end(), f.relations.begin(), f.relations.end());
    }
    return std::make_shared<TruncatedFreeAlgebra<F>>(v, std::move(gens), bound,
                                                     std::move(relations), row_limit);
}

// The linear map killing the generators of one block, landing in the
// coproduct of the remaining factors, evaluated on every basis element of
// the full coproduct. Rows index the target basis.
template <class F>
Matrix<F> kill_block_matrix(const TruncatedFreeAlgebra<F>& big,
                            const TruncatedFreeAlgebra<F>& sub,
                            const std::set<Generator>& killed) {
    const F& field = big.field();
    Matrix<F> m(sub.dim(), big.dim(), field);
    for (std::size_t col = 0; col < big.dim(); ++col) {
        const MagmaMonomial& mono = big.basis()[col];
        std::set<Generator> gens;
        collect_generators(mono, gens);
        bool dies = false;
        for (const auto& g : gens)
            if (killed.count(g)) dies = true;
        if (dies) continue;
        auto coords = sub.project(NAPolynomial<F>::monomial(mono, field));
        for (std::size_t row = 0; row < coords.size(); ++row)
            m.at(row, col) = coords[row];
    }
    return m;
}

// An n-ary cosmash product: the kernel of the map from the coproduct of all
// factors to the product of the leave-one-out sub-coproducts.
template <class F>
class CosmashResult {
  public:
    using Scalar = typename F::Scalar;

    std::shared_ptr<TruncatedFreeAlgebra<F>> ambient;
    std::vector<std::vector<Scalar>> kernel; // vectors in ambient coordinates
    std::vector<int> weights;                // weighted degree per kernel vector

    std::size_t dim() const { return kernel.size(); }

    std::map<int, std::size_t> dim_by_weight() const {
        std::map<int, std::size_t> out;
        for (int w : weights) ++out[w];
        return out;
    }

    NAPolynomial<F> element(std::size_t i) const { return ambient->from_coords(kernel[i]); }

    // Induced multiplication: the product of two kernel vectors, expressed
    // in the kernel basis. The kernel is closed because the defining map is
    // an algebra morphism; failure to re-express is an internal error.
    std::vector<Scalar> product_in_kernel(std::size_t i, std::size_t j,
                                          bool* truncated = nullptr) const {
        const F& field = ambient->field();
        auto prod = ambient->multiply(kernel[i], kernel[j], truncated);
        bool all_zero = true;
        for (const auto& c : prod)
            if (!field.is_zero(c)) all_zero = false;
        if (all_zero) return std::vector<Scalar>(kernel.size(), field.zero());
        auto witness = in_span(prod, kernel, field);
        if (!witness)
            throw error("cosmash kernel is not closed under the induced multiplication");
        return *witness;
    }
};

namespace cdetail {

// True when every monomial of p touches the same set of variables, so that
// every substitution instance meets a fixed set of blocks.
template <class F>
bool support_constant(const NAPolynomial<F>& p) {
    std::optional<std::set<Generator>> support;
    for (const auto& [m, c] : p.terms()) {
        std::set<Generator> s;
        collect_generators(m, s);
        if (!support) support = std::move(s);
        else if (*support != s) return false;
    }
    return true;
}

// When relations never mix block supports, the leave-one-out maps act on
// basis monomials as 0/1 selectors, so the cosmash kernel is spanned by the
// basis monomials whose generators meet every block.
template <class F>
bool selector_eligible(const VarietyPresentation<F>& v,
                       const std::vector<CoproductFactor<F>>& factors) {
    for (const auto& psi : vdetail::identity_closure(v))
        if (!support_constant(psi)) return false;
    for (const auto& f : factors)
        for (const auto& rel : f.relations) {
            // a table relation stays within its own factor's generators
            std::set<Generator> own(f.gens.begin(), f.gens.end());
            for (const auto& [m, c] : rel.terms()) {
                std::set<Generator> s;
                collect_generators(m, s);
                for (const auto& g : s)
                    if (!own.count(g)) return false;
            }
        }
    return true;
}

} // namespace cdetail

// Computes the n-ary cosmash of the factors (n = factors.size() blocks).
template <class F>
CosmashResult<F> cosmash_product(const VarietyPresentation<F>& v,
                                 const std::vector<CoproductFactor<F>>& factors, int bound,
                                 std::size_t row_limit = 20000) {
    if (factors.size() < 2) throw error("a cosmash product needs at least two factors");
    const F& field = v.field;
    CosmashResult<F> out;
    out.ambient = coproduct_truncated(v, factors, bound, row_limit);

    if (cdetail::selector_eligible(v, factors)) {
        for (std::size_t i = 0; i < out.ambient->dim(); ++i) {
            std::set<Generator> support;
            collect_generators(out.ambient->basis()[i], support);
            bool meets_all = true;
            for (const auto& f : factors) {
                bool meets = false;
                for (const auto& g : f.gens)
                    if (support.count(g)) meets = true;
                if (!meets) meets_all = false;
            }
            if (!meets_all) continue;
            std::vector<typename F::Scalar> unit(out.ambient->dim(), field.zero());
            unit[i] = field.one();
            out.kernel.push_back(std::move(unit));
            out.weights.push_back(out.ambient->basis_weight(i));
        }
        return out;
    }

    std::optional<Matrix<F>> stacked;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        std::vector<CoproductFactor<F>> rest;
        for (std::size_t l = 0; l < factors.size(); ++l)
            if (l != k) rest.push_back(factors[l]);
        auto sub = coproduct_truncated(v, rest, bound, row_limit);
        std::set<Generator> killed(factors[k].gens.begin(), factors[k].gens.end());
        Matrix<F> m = kill_block_matrix(*out.ambient, *sub, killed);
        stacked = stacked ? stacked->stacked(m) : m;
    }
    out.kernel = kernel_basis(*stacked);
    for (const auto& vec : out.kernel) {
        int w = 0;
        for (std::size_t i = 0; i < vec.size(); ++i)
            if (!field.is_zero(vec[i]))
                w = std::max(w, out.ambient->basis_weight(i));
        out.weights.push_back(w);
    }
    return out;
}

// Exact re-verification that every kernel vector maps to zero under each
// leave-one-out component; used by tests and reports.
template <class F>
bool verify_cosmash_kernel(const VarietyPresentation<F>& v,
                           const std::vector<CoproductFactor<F>>& factors,
                           const CosmashResult<F>& cos, std::size_t row_limit = 20000) {
    const F& field = v.field;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        std::vector<CoproductFactor<F>> rest;
        for (std::size_t l = 0; l < factors.size(); ++l)
            if (l != k) rest.push_back(factors[l]);
        auto sub = coproduct_truncated(v, rest, cos.ambient->bound(), row_limit);
        std::set<Generator> killed(factors[k].gens.begin(), factors[k].gens.end());
        Matrix<F> m = kill_block_matrix(*cos.ambient, *sub, killed);
        for (const auto& vec : cos.kernel)
            for (const auto& y : m.multiply(vec))
                if (!field.is_zero(y)) return false;
    }
    return true;
}

// The ternary cosmash computed through the cross-effect route: the kernel,
// inside (X+Y) <> Z, of the pair of maps to X <> Z and Y <> Z. Returns
// vectors in the coordinates of the full coproduct X+Y+Z, so the result is
// directly comparable with the 3-block kernel.
template <class F>
std::vector<std::vector<typename F::Scalar>> ternary_via_cross_effect(
    const VarietyPresentation<F>& v, const CoproductFactor<F>& x,
    const CoproductFactor<F>& y, const CoproductFactor<F>& z, int bound,
    std::size_t row_limit = 20000) {
    const F& field = v.field;
    // (X+Y) as a single block against Z, inside the ambient X+Y+Z
    CoproductFactor<F> xy;
    xy.gens = x.gens;
    xy.weights = x.weights;
    xy.relations = x.relations;
    xy.gens.insert(xy.gens.end(), y.gens.begin(), y.gens.end());
    xy.weights.insert(xy.weights.end(), y.weights.begin(), y.weights.end());
    xy.relations.insert(xy.relations.end(), y.relations.begin(), y.relations.end());

    CosmashResult<F> outer = cosmash_product(v, {xy, z}, bound, row_limit);

    // the two cross-effect maps: kill Y then land in X+Z, kill X then land
    // in Y+Z, restricted to the outer kernel
    auto sub_xz = coproduct_truncated(v, {x, z}, bound, row_limit);
    auto sub_yz = coproduct_truncated(v, {y, z}, bound, row_limit);
    std::set<Generator> kill_y(y.gens.begin(), y.gens.end());
    std::set<Generator> kill_x(x.gens.begin(), x.gens.end());
    Matrix<F> m =
        kill_block_matrix(*outer.ambient, *sub_xz, kill_y)
            .stacked(kill_block_matrix(*outer.ambient, *sub_yz, kill_x));

    // solve for combinations of outer kernel vectors that the pair kills
    Matrix<F> restricted(m.rows(), outer.dim(), field);
    for (std::size_t j = 0; j < outer.dim(); ++j) {
        auto img = m.multiply(outer.kernel[j]);
        for (std::size_t i = 0; i < img.size(); ++i) restricted.at(i, j) = img[i];
    }
    std::vector<std::vector<typename F::Scalar>> out;
    for (const auto& combo : kernel_basis(restricted)) {
        std::vector<typename F::Scalar> vec(outer.ambient->dim(), field.zero());
        for (std::size_t j = 0; j < outer.dim(); ++j)
            for (std::size_t i = 0; i < vec.size(); ++i)
                vec[i] = field.add(vec[i], field.mul(combo[j], outer.kernel[j][i]));
        out.push_back(std::move(vec));
    }
    return out;
}

// Packages a cosmash product as a presented coproduct factor: the kernel
// basis becomes generators carrying their weighted degrees, the induced
// multiplication becomes the table. Exact within the ambient bound. The
// expansions record what each generator stands for.
template <class F>
struct PresentedCosmashFactor {
    CoproductFactor<F> factor;
    std::map<Generator, NAPolynomial<F>> expansions;
};

template <class F>
PresentedCosmashFactor<F> present_cosmash_factor(const CosmashResult<F>& cos,
                                                 const std::string& prefix) {
    if (!cos.ambient->graded())
        throw error("presenting a cosmash factor needs a graded ambient coproduct");
    const F& field = cos.ambient->field();
    PresentedCosmashFactor<F> out;
    for (std::size_t i = 0; i < cos.dim(); ++i) {
        Generator g(prefix, static_cast<int>(i) + 1);
        out.factor.gens.push_back(g);
        out.factor.weights.push_back(cos.weights[i]);
        out.expansions.emplace(g, cos.element(i));
    }
    int bound = cos.ambient->bound();
    for (std::size_t i = 0; i < cos.dim(); ++i)
        for (std::size_t j = 0; j < cos.dim(); ++j) {
            if (cos.weights[i] + cos.weights[j] > bound) continue;
            auto prod = cos.product_in_kernel(i, j);
            NAPolynomial<F> rel(field);
            rel.add_term(MagmaMonomial::node(MagmaMonomial::leaf(out.factor.gens[i]),
                                             MagmaMonomial::leaf(out.factor.gens[j])),
                         field.one());
            for (std::size_t k = 0; k < prod.size(); ++k)
                if (!field.is_zero(prod[k]))
                    rel.add_term(MagmaMonomial::leaf(out.factor.gens[k]),
                                 field.neg(prod[k]));
            if (!rel.is_zero()) out.factor.relations.push_back(std::move(rel));
        }
    return out;
}

// Report of a comparison map between an iterated cosmash and the unbiased
// n-ary one, resolved per weighted degree.
struct ComparisonDegreeReport {
    int weight = 0;
    std::size_t domain_dim = 0;
    std::size_t codomain_dim = 0;
    std::size_t rank = 0;
    bool injective = true;
    bool surjective = true;
    std::string kernel_witness;   // nonempty when not injective
    std::string cokernel_witness; // nonempty when not surjective
};

struct ComparisonReport {
    std::vector<ComparisonDegreeReport> degrees;
    bool injective = true;
    bool surjective = true;
};

// Builds the comparison map from the 2-block cosmash of `outer` factors
// into the n-block cosmash of `base` factors, expanding presented
// generators through `expansions`, and reports rank data per degree.
template <class F>
ComparisonReport compare_cosmash(const VarietyPresentation<F>& v,
                                 const std::vector<CoproductFactor<F>>& outer,
                                 const std::map<Generator, NAPolynomial<F>>& expansions,
                                 const std::vector<CoproductFactor<F>>& base, int bound,
                                 std::size_t row_limit = 20000) {
    const F field = v.field;
    CosmashResult<F> domain = cosmash_product(v, outer, bound, row_limit);
    CosmashResult<F> codomain = cosmash_product(v, base, bound, row_limit);

    // substitution map: presented generators expand, base generators stay
    std::map<Generator, NAPolynomial<F>> sigma = expansions;
    for (const auto& f : base)
        for (const auto& g : f.gens)
            sigma.emplace(g, NAPolynomial<F>::monomial(MagmaMonomial::leaf(g), field));

    // image of every domain kernel vector in codomain ambient coordinates
    std::vector<std::vector<typename F::Scalar>> images;
    for (std::size_t i = 0; i < domain.dim(); ++i) {
        NAPolynomial<F> expanded = substitute(domain.element(i), sigma);
        bool truncated = false;
        auto coords = codomain.ambient->project(expanded, &truncated);
        if (truncated)
            throw error("comparison map left the truncation bound");
        if (!in_span(coords, codomain.kernel, field))
            throw error("comparison image escaped the n-ary cosmash kernel");
        images.push_back(std::move(coords));
    }

    // group by weighted degree
    std::set<int> weights;
    for (int w : domain.weights) weights.insert(w);
    for (int w : codomain.weights) weights.insert(w);

    ComparisonReport rep;
    for (int w : weights) {
        ComparisonDegreeReport dr;
        dr.weight = w;
        std::vector<std::size_t> dom_idx, cod_idx;
        for (std::size_t i = 0; i < domain.dim(); ++i)
            if (domain.weights[i] == w) dom_idx.push_back(i);
        for (std::size_t i = 0; i < codomain.dim(); ++i)
            if (codomain.weights[i] == w) cod_idx.push_back(i);
        dr.domain_dim = dom_idx.size();
        dr.codomain_dim = cod_idx.size();

        // rank of the image block
        if (!dom_idx.empty()) {
            Matrix<F> m(codomain.ambient->dim(), dom_idx.size(), field);
            for (std::size_t j = 0; j < dom_idx.size(); ++j)
                for (std::size_t i = 0; i < codomain.ambient->dim(); ++i)
                    m.at(i, j) = images[dom_idx[j]][i];
            auto r = rref(m);
            dr.rank = r.rank;
            if (dr.rank < dr.domain_dim) {
                dr.injective = false;
                auto null_vecs = kernel_basis(m);
                if (!null_vecs.empty()) {
                    NAPolynomial<F> witness(field);
                    for (std::size_t j = 0; j < dom_idx.size(); ++j)
                        witness = witness +
                                  domain.element(dom_idx[j]).scaled(null_vecs[0][j]);
                    // render in base-generator words; the element is nonzero
                    // upstream yet maps to zero in the n-ary cosmash
                    dr.kernel_witness = print_expression(substitute(witness, sigma));
                }
            }
        }
        if (dr.rank < dr.codomain_dim) {
            dr.surjective = false;
            // find a codomain kernel vector outside the image span
            std::vector<std::vector<typename F::Scalar>> image_span;
            for (std::size_t j : dom_idx) image_span.push_back(images[j]);
            for (std::size_t i : cod_idx) {
                if (!in_span(codomain.kernel[i], image_span, field)) {
                    dr.cokernel_witness = print_expression(codomain.element(i));
                    break;
                }
            }
        }
        rep.injective = rep.injective && dr.injective;
        rep.surjective = rep.surjective && dr.surjective;
        rep.degrees.push_back(std::move(dr));
    }
    return rep;
}

// Phi: X o (Y o Z) -> X o Y o Z on free single-generator-list factors.
template <class F>
ComparisonReport comparison_phi(const VarietyPresentation<F>& v,
                                const std::vector<std::string>& xs,
                                const std::vector<std::string>& ys,
                                const std::vector<std::string>& zs, int bound,
                                std::size_t row_limit = 20000) {
    auto X = CoproductFactor<F>::free_factor(xs);
    auto Y = CoproductFactor<F>::free_factor(ys);
    auto Z = CoproductFactor<F>::free_factor(zs);
    CosmashResult<F> yz = cosmash_product(v, {Y, Z}, bound, row_limit);
    PresentedCosmashFactor<F> n = present_cosmash_factor(yz, "n");
    return compare_cosmash(v, {X, n.factor}, n.expansions, {X, Y, Z}, bound, row_limit);
}

// Psi: (X o Y) o Z -> X o Y o Z.
template <class F>
ComparisonReport comparison_psi(const VarietyPresentation<F>& v,
                                const std::vector<std::string>& xs,
                                const std::vector<std::string>& ys,
                                const std::vector<std::string>& zs, int bound,
                                std::size_t row_limit = 20000) {
    auto X = CoproductFactor<F>::free_factor(xs);
    auto Y = CoproductFactor<F>::free_factor(ys);
    auto Z = CoproductFactor<F>::free_factor(zs);
    CosmashResult<F> xy = cosmash_product(v, {X, Y}, bound, row_limit);
    PresentedCosmashFactor<F> m = present_cosmash_factor(xy, "m");
    return compare_cosmash(v, {m.factor, Z}, m.expansions, {X, Y, Z}, bound, row_limit);
}

// (X o Y) o (Z o W) -> X o Y o Z o W.
template <class F>
ComparisonReport comparison_quaternary(const VarietyPresentation<F>& v,
                                       const std::vector<std::string>& xs,
                                       const std::vector<std::string>& ys,
                                       const std::vector<std::string>& zs,
                                       const std::vector<std::string>& ws, int bound,
                                       std::size_t row_limit = 40000) {
    auto X = CoproductFactor<F>::free_factor(xs);
    auto Y = CoproductFactor<F>::free_factor(ys);
    auto Z = CoproductFactor<F>::free_factor(zs);
    auto W = CoproductFactor<F>::free_factor(ws);
    CosmashResult<F> xy = cosmash_product(v, {X, Y}, bound, row_limit);
    CosmashResult<F> zw = cosmash_product(v, {Z, W}, bound, row_limit);
    PresentedCosmashFactor<F> m = present_cosmash_factor(xy, "m");
    PresentedCosmashFactor<F> n = present_cosmash_factor(zw, "n");
    std::map<Generator, NAPolynomial<F>> expansions = m.expansions;
    for (const auto& [g, p] : n.expansions) expansions.emplace(g, p);
    return compare_cosmash(v, {m.factor, n.factor}, expansions, {X, Y, Z, W}, bound,
                           row_limit);
}

// Linear independence of the projections of the monomials in the truncated
// free algebra of the variety on the given generators; returns the
// dependency witness when dependent.
template <class F>
struct IndependenceResult {
    bool independent = true;
    NAPolynomial<F> witness; // a nonzero combination projecting to zero
};

template <class F>
IndependenceResult<F> independence_check(const VarietyPresentation<F>& v,
                                         const std::vector<MagmaMonomial>& monomials,
                                         const std::vector<std::string>& ambient_gens,
                                         int bound, std::size_t row_limit = 20000) {
    const F& field = v.field;
    std::vector<std::pair<Generator, int>> gens;
    for (const auto& n : ambient_gens) gens.emplace_back(Generator(n), 1);
    TruncatedFreeAlgebra<F> ambient(v, gens, bound, {}, row_limit);

    Matrix<F> m(ambient.dim(), monomials.size(), field);
    for (std::size_t j = 0; j < monomials.size(); ++j) {
        auto coords = ambient.project(NAPolynomial<F>::monomial(monomials[j], field));
        for (std::size_t i = 0; i < coords.size(); ++i) m.at(i, j) = coords[i];
    }
    IndependenceResult<F> out;
    auto null_vecs = kernel_basis(m);
    if (!null_vecs.empty()) {
        out.independent = false;
        out.witness = NAPolynomial<F>(field);
        for (std::size_t j = 0; j < monomials.size(); ++j)
            out.witness = out.witness +
                          NAPolynomial<F>::monomial(monomials[j], field).scaled(null_vecs[0][j]);
    }
    return out;
}

} // namespace cosmash

#endif
