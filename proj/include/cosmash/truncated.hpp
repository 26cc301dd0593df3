#ifndef COSMASH_TRUNCATED_HPP
#define COSMASH_TRUNCATED_HPP

#include <map>
#include <optional>
#include <vector>

#include "cosmash/t_ideal.hpp"

namespace cosmash {

// Degree-bounded free algebra of a variety on weighted generators, plus
// optional ground relations (multiplication tables of presented factors).
// Basis monomials are the normal forms: the monomials not reducible by the
// row-reduced relation span; projection rewrites any monomial of weighted
// degree <= bound into basis coordinates; products that leave the bound
// project to zero and are flagged truncated.
template <class F>
class TruncatedFreeAlgebra {
  public:
    using Scalar = typename F::Scalar;
    using Combo = std::vector<std::pair<std::size_t, Scalar>>; // sparse basis combo

    TruncatedFreeAlgebra(const VarietyPresentation<F>& variety,
                         std::vector<std::pair<Generator, int>> generators, int bound,
                         std::vector<NAPolynomial<F>> ground_relations = {},
                         std::size_t row_limit = 20000)
        : field_(variety.field), bound_(bound),
          enumerator_(variety, std::move(generators), row_limit),
          ground_(std::move(ground_relations)) {
        graded_ = enumerator_.graded();
        for (const auto& rel : ground_)
            if (!relation_homogeneous(rel)) graded_ = false;

        if (graded_) {
            for (const auto& md : enumerator_.multidegrees_up_to(bound_)) {
                if (md.empty()) continue;
                std::vector<NAPolynomial<F>> rows = enumerator_.component(md);
                auto ground_rows = enumerator_.ground_instances(ground_, md, bound_);
                rows.insert(rows.end(), ground_rows.begin(), ground_rows.end());
                reduce_block(enumerator_.monomials_of(md), rows);
            }
        } else {
            std::vector<MagmaMonomial> cols;
            for (const auto& md : enumerator_.multidegrees_up_to(bound_)) {
                if (md.empty()) continue;
                for (const auto& m : enumerator_.monomials_of(md)) cols.push_back(m);
            }
            // higher weighted degree first so reduction rewrites downward
            std::sort(cols.begin(), cols.end(), [&](const MagmaMonomial& a, const MagmaMonomial& b) {
                int wa = enumerator_.weighted_degree(a), wb = enumerator_.weighted_degree(b);
                if (wa != wb) return wa > wb;
                return MagmaMonomial::compare(b, a) < 0;
            });
            std::vector<NAPolynomial<F>> rows = enumerator_.component_bounded(bound_);
            auto ground_rows = enumerator_.ground_instances(ground_, std::nullopt, bound_);
            rows.insert(rows.end(), ground_rows.begin(), ground_rows.end());
            reduce_block(cols, rows);
        }

        std::sort(basis_.begin(), basis_.end(), MagmaLess{});
        for (std::size_t i = 0; i < basis_.size(); ++i) basis_index_[basis_[i]] = i;
        for (auto& [mono, combo] : reductions_)
            for (auto& [idx, c] : combo) idx = basis_index_.at(reduction_monos_[idx]);
    }

    const F& field() const { return field_; }
    int bound() const { return bound_; }
    bool graded() const { return graded_; }
    const VarietyPresentation<F>& variety() const { return enumerator_.variety(); }
    const std::vector<std::pair<Generator, int>>& generators() const {
        return enumerator_.generators();
    }
    const std::vector<MagmaMonomial>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }

    int weighted_degree(const MagmaMonomial& m) const {
        return enumerator_.weighted_degree(m);
    }
    int basis_weight(std::size_t i) const { return weighted_degree(basis_[i]); }

    // basis indices grouped by weighted degree, ascending
    std::map<int, std::vector<std::size_t>> basis_by_weight() const {
        std::map<int, std::vector<std::size_t>> out;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            out[basis_weight(i)].push_back(i);
        return out;
    }

    // Projection to basis coordinates. Monomials beyond the bound map to
    // zero and set the truncated flag.
    std::vector<Scalar> project(const NAPolynomial<F>& p, bool* truncated = nullptr) const {
        std::vector<Scalar> out(basis_.size(), field_.zero());
        for (const auto& [m, c] : p.terms()) {
            if (weighted_degree(m) > bound_) {
                if (truncated) *truncated = true;
                continue;
            }
            auto bi = basis_index_.find(m);
            if (bi != basis_index_.end()) {
                out[bi->second] = field_.add(out[bi->second], c);
                continue;
            }
            auto ri = reductions_.find(m);
            if (ri == reductions_.end())
                throw error("monomial " + m.str() + " is not in the enumerated space");
            for (const auto& [idx, coef] : ri->second)
                out[idx] = field_.add(out[idx], field_.mul(c, coef));
        }
        return out;
    }

    NAPolynomial<F> from_coords(const std::vector<Scalar>& coords) const {
        NAPolynomial<F> out(field_);
        for (std::size_t i = 0; i < coords.size(); ++i)
            out.add_term(basis_[i], coords[i]);
        return out;
    }

    // Product of two coordinate vectors in the truncated quotient.
    std::vector<Scalar> multiply(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                 bool* truncated = nullptr) const {
        std::vector<Scalar> out(basis_.size(), field_.zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (field_.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (field_.is_zero(b[j])) continue;
                const auto& prod = product(i, j, truncated);
                Scalar c = field_.mul(a[i], b[j]);
                for (const auto& [idx, coef] : prod)
                    out[idx] = field_.add(out[idx], field_.mul(c, coef));
            }
        }
        return out;
    }

    // Structure constants: basis[i] * basis[j] as a sparse basis combo.
    const Combo& product(std::size_t i, std::size_t j, bool* truncated = nullptr) const {
        auto key = std::make_pair(i, j);
        auto it = product_cache_.find(key);
        if (it == product_cache_.end()) {
            Combo combo;
            bool trunc = false;
            if (basis_weight(i) + basis_weight(j) > bound_) {
                trunc = true;
            } else {
                NAPolynomial<F> m =
                    NAPolynomial<F>::monomial(MagmaMonomial::node(basis_[i], basis_[j]), field_);
                auto coords = project(m, &trunc);
                for (std::size_t k = 0; k < coords.size(); ++k)
                    if (!field_.is_zero(coords[k])) combo.emplace_back(k, coords[k]);
            }
            it = product_cache_.emplace(key, std::make_pair(std::move(combo), trunc)).first;
        }
        if (truncated && it->second.second) *truncated = true;
        return it->second.first;
    }

    TIdealEnumerator<F>& enumerator() { return enumerator_; }

  private:
    bool relation_homogeneous(const NAPolynomial<F>& rel) const {
        std::optional<MultiDegree> type;
        for (const auto& [m, c] : rel.terms()) {
            MultiDegree d = multidegree(m);
            if (!type) type = d;
            else if (*type != d) return false;
        }
        return true;
    }

    // RREF one block of columns/relations; pivot columns become reducible
    // monomials, the rest join the basis.
    void reduce_block(const std::vector<MagmaMonomial>& cols_in,
                      const std::vector<NAPolynomial<F>>& rows) {
        std::vector<MagmaMonomial> cols = cols_in;
        if (graded_) {
            // within a slice, larger monomials reduce to smaller ones
            std::sort(cols.begin(), cols.end(), [](const MagmaMonomial& a, const MagmaMonomial& b) {
                return MagmaMonomial::compare(b, a) < 0;
            });
        }
        if (rows.empty()) {
            for (const auto& m : cols) note_basis(m);
            return;
        }
        std::map<MagmaMonomial, std::size_t, MagmaLess> col_index;
        for (std::size_t i = 0; i < cols.size(); ++i) col_index[cols[i]] = i;

        Matrix<F> mat(rows.size(), cols.size(), field_);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [m, c] : rows[r].terms()) {
                auto it = col_index.find(m);
                if (it == col_index.end())
                    throw error("relation monomial " + m.str() + " outside the block");
                mat.at(r, it->second) = field_.add(mat.at(r, it->second), c);
            }
        RrefResult<F> red = rref(mat);

        std::vector<bool> is_pivot(cols.size(), false);
        for (std::size_t c : red.pivots) is_pivot[c] = true;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (!is_pivot[j]) note_basis(cols[j]);
        for (std::size_t r = 0; r < red.pivots.size(); ++r) {
            Combo combo;
            for (std::size_t j = 0; j < cols.size(); ++j) {
                if (is_pivot[j] || field_.is_zero(red.reduced.at(r, j))) continue;
                combo.emplace_back(note_index(cols[j]), field_.neg(red.reduced.at(r, j)));
            }
            reductions_[cols[red.pivots[r]]] = std::move(combo);
        }
    }

    void note_basis(const MagmaMonomial& m) {
        if (!mono_to_tmp_.count(m)) {
            mono_to_tmp_[m] = reduction_monos_.size();
            reduction_monos_.push_back(m);
            basis_.push_back(m);
        }
    }
    std::size_t note_index(const MagmaMonomial& m) { return mono_to_tmp_.at(m); }

    F field_;
    int bound_;
    bool graded_ = true;
    TIdealEnumerator<F> enumerator_;
    std::vector<NAPolynomial<F>> ground_;

    std::vector<MagmaMonomial> basis_;
    std::vector<MagmaMonomial> reduction_monos_; // temp index -> monomial
    std::map<MagmaMonomial, std::size_t, MagmaLess> mono_to_tmp_;
    std::map<MagmaMonomial, std::size_t, MagmaLess> basis_index_;
    std::map<MagmaMonomial, Combo, MagmaLess> reductions_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::pair<Combo, bool>> product_cache_;
};

// Convenience constructor used by the operations below.
template <class F>
TruncatedFreeAlgebra<F> truncated_free_algebra(const VarietyPresentation<F>& v,
                                               const std::vector<std::pair<Generator, int>>& gens,
                                               int bound, std::size_t row_limit = 20000) {
    return TruncatedFreeAlgebra<F>(v, gens, bound, {}, row_limit);
}

} // namespace cosmash

#endif
