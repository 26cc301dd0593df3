#ifndef COSMASH_FD_ALGEBRA_HPP
#define COSMASH_FD_ALGEBRA_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "cosmash/commpoly.hpp"
#include "cosmash/magma.hpp"

namespace cosmash {

// Finite-dimensional algebra by structure constants: e_i e_j = sum_k
// c[i][j][k] e_k over an exact field. Bilinearity is structural.
template <class F>
class FDAlgebra {
  public:
    using Scalar = typename F::Scalar;

    FDAlgebra(std::vector<std::string> labels, F field = F{})
        : labels_(std::move(labels)), field_(std::move(field)) {}

    static FDAlgebra zero_algebra(int dim, F field = F{}, const std::string& stem = "e") {
        std::vector<std::string> labels;
        for (int i = 0; i < dim; ++i) labels.push_back(stem + std::to_string(i + 1));
        return FDAlgebra(std::move(labels), field);
    }

    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const F& field() const { return field_; }

    void set_constant(int i, int j, int k, const Scalar& v) {
        check_index(i);
        check_index(j);
        check_index(k);
        if (field_.is_zero(v)) c_.erase({i, j, k});
        else c_[{i, j, k}] = v;
    }

    Scalar constant(int i, int j, int k) const {
        auto it = c_.find({i, j, k});
        return it == c_.end() ? field_.zero() : it->second;
    }

    const std::map<std::tuple<int, int, int>, Scalar>& constants() const { return c_; }

    std::vector<Scalar> multiply(const std::vector<Scalar>& a,
                                 const std::vector<Scalar>& b) const {
        std::vector<Scalar> out(dim(), field_.zero());
        for (const auto& [idx, v] : c_) {
            const auto& [i, j, k] = idx;
            Scalar t = field_.mul(field_.mul(a[i], b[j]), v);
            out[k] = field_.add(out[k], t);
        }
        return out;
    }

    std::vector<Scalar> unit_vector(int i) const {
        std::vector<Scalar> v(dim(), field_.zero());
        v[i] = field_.one();
        return v;
    }

    bool is_commutative() const {
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j)
                for (int k = 0; k < dim(); ++k)
                    if (!field_.eq(constant(i, j, k), constant(j, i, k))) return false;
        return true;
    }

    bool is_associative() const {
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j) {
                auto ij = multiply(unit_vector(i), unit_vector(j));
                for (int k = 0; k < dim(); ++k) {
                    auto left = multiply(ij, unit_vector(k));
                    auto right = multiply(unit_vector(i), multiply(unit_vector(j), unit_vector(k)));
                    for (int l = 0; l < dim(); ++l)
                        if (!field_.eq(left[l], right[l])) return false;
                }
            }
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["dimension"] = dim();
        j["labels"] = labels_;
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& [idx, v] : c_) {
            const auto& [i, jj, k] = idx;
            cs.push_back({i, jj, k, field_.str(v)});
        }
        j["constants"] = cs;
        return j;
    }

    static FDAlgebra from_json(const nlohmann::json& j, F field = F{}) {
        std::vector<std::string> labels;
        if (j.contains("labels")) {
            for (const auto& l : j.at("labels")) labels.push_back(l.template get<std::string>());
        } else {
            int d = j.at("dimension").template get<int>();
            for (int i = 0; i < d; ++i) labels.push_back("e" + std::to_string(i + 1));
        }
        FDAlgebra alg(std::move(labels), field);
        for (const auto& entry : j.at("constants")) {
            int i = entry.at(0).template get<int>();
            int jj = entry.at(1).template get<int>();
            int k = entry.at(2).template get<int>();
            Scalar v = field.parse(entry.at(3).template get<std::string>());
            alg.set_constant(i, jj, k, v);
        }
        return alg;
    }

  private:
    void check_index(int i) const {
        if (i < 0 || i >= dim()) throw error("basis index out of range");
    }

    std::vector<std::string> labels_;
    F field_;
    std::map<std::tuple<int, int, int>, Scalar> c_;
};

// Evaluates an identity on independent generic elements with indeterminate
// coordinates; the result is the coordinate vector of polynomials, all zero
// exactly when the identity holds symbolically.
template <class F>
std::vector<CommPolynomial<F>> evaluate_identity_generic(const FDAlgebra<F>& alg,
                                                         const NAPolynomial<F>& phi) {
    using CP = CommPolynomial<F>;
    const F& field = alg.field();
    const int n = alg.dim();

    // one generic element per identity variable
    std::map<Generator, std::vector<CP>> generic;
    int var_index = 0;
    for (const auto& g : phi.generators()) {
        std::vector<CP> coords;
        for (int i = 0; i < n; ++i)
            coords.push_back(CP::variable(
                Indeterminate::user("t" + std::to_string(var_index), i + 1), field));
        generic.emplace(g, std::move(coords));
        ++var_index;
    }

    auto mul = [&](const std::vector<CP>& a, const std::vector<CP>& b) {
        std::vector<CP> out(n, CP(field));
        for (const auto& [idx, v] : alg.constants()) {
            const auto& [i, j, k] = idx;
            out[k] = out[k] + a[i] * b[j] * CP::constant(v, field);
        }
        return out;
    };

    std::function<std::vector<CP>(const MagmaMonomial&)> eval =
        [&](const MagmaMonomial& m) -> std::vector<CP> {
        if (m.is_leaf()) return generic.at(m.gen());
        return mul(eval(m.left()), eval(m.right()));
    };

    std::vector<CP> acc(n, CP(field));
    for (const auto& [m, coef] : phi.terms()) {
        auto val = eval(m);
        for (int i = 0; i < n; ++i)
            acc[i] = acc[i] + val[i].scaled(coef);
    }
    return acc;
}

// Reduction modulo the field equations t^p = t of a finite field: over F_p
// a polynomial vanishes on every element assignment iff its image under
// this folding is zero. Over characteristic zero the polynomial is returned
// unchanged (the field is infinite, so symbolic zero and elementwise zero
// coincide).
template <class F>
CommPolynomial<F> reduce_by_field_equations(const CommPolynomial<F>& p) {
    std::uint64_t q = p.ring().characteristic();
    if (q == 0) return p;
    CommPolynomial<F> out(p.ring());
    for (const auto& [pp, c] : p.terms()) {
        PowerProduct folded;
        for (const auto& [v, e] : pp.entries()) {
            int ee = e;
            while (ee >= static_cast<int>(q)) ee -= static_cast<int>(q) - 1;
            folded = folded * PowerProduct(v, ee);
        }
        out.add_term(folded, c);
    }
    return out;
}

// True iff phi vanishes on every element of the algebra: the generic
// evaluation is reduced by the field equations before the zero test.
template <class F>
bool satisfies_identity_generic(const FDAlgebra<F>& alg, const NAPolynomial<F>& phi) {
    for (const auto& p : evaluate_identity_generic(alg, phi))
        if (!reduce_by_field_equations(p).is_zero()) return false;
    return true;
}

} // namespace cosmash

#endif
