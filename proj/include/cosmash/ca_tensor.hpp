#ifndef COSMASH_CA_TENSOR_HPP
#define COSMASH_CA_TENSOR_HPP

#include <string>
#include <vector>

#include "cosmash/fd_algebra.hpp"
#include "cosmash/linalg.hpp"
#include "cosmash/magma_io.hpp"

namespace cosmash {

namespace cadetail {

template <class F>
void require_ca(const FDAlgebra<F>& alg, const std::string& who) {
    if (!alg.is_commutative()) throw error(who + " is not commutative");
    if (!alg.is_associative()) throw error(who + " is not associative");
}

} // namespace cadetail

// The coproduct of two commutative associative algebras: underlying space
// A + (A (x) B) + B with the multiplication
//   (a, a'(x)b', b)(c, c'(x)d', d) = (ac, ac'(x)d' + a(x)d + a'c(x)b'
//       + a'c'(x)b'd' + a'(x)b'd + c(x)b + c'(x)bd', bd).
// Basis layout: A-part first, then the a_i(x)b_j block (i major), then B.
template <class F>
FDAlgebra<F> ca_coproduct(const FDAlgebra<F>& a, const FDAlgebra<F>& b) {
    cadetail::require_ca(a, "left factor");
    cadetail::require_ca(b, "right factor");
    const F& field = a.field();
    if (!(field == b.field())) throw error("factors over different fields");

    const int na = a.dim(), nb = b.dim();
    std::vector<std::string> labels;
    for (int i = 0; i < na; ++i) labels.push_back(a.labels()[i]);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            labels.push_back(a.labels()[i] + "(x)" + b.labels()[j]);
    for (int j = 0; j < nb; ++j) labels.push_back(b.labels()[j]);
    FDAlgebra<F> co(labels, field);

    auto A = [&](int i) { return i; };
    auto T = [&](int i, int j) { return na + i * nb + j; };
    auto B = [&](int j) { return na + na * nb + j; };
    auto add = [&](int i, int j, int k, const typename F::Scalar& v) {
        co.set_constant(i, j, k, field.add(co.constant(i, j, k), v));
    };

    // (a,0,0)(c,0,0) = (ac,0,0)
    for (int i = 0; i < na; ++i)
        for (int k = 0; k < na; ++k)
            for (int l = 0; l < na; ++l)
                add(A(i), A(k), A(l), a.constant(i, k, l));
    // (a,0,0)(0,c'(x)d',0) = ac'(x)d'
    for (int i = 0; i < na; ++i)
        for (int k = 0; k < na; ++k)
            for (int j = 0; j < nb; ++j)
                for (int l = 0; l < na; ++l)
                    add(A(i), T(k, j), T(l, j), a.constant(i, k, l));
    // (a,0,0)(0,0,d) = a(x)d
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            add(A(i), B(j), T(i, j), field.one());
    // (0,a'(x)b',0)(c,0,0) = a'c(x)b'
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < na; ++l)
                    add(T(i, j), A(k), T(l, j), a.constant(i, k, l));
    // (0,a'(x)b',0)(0,c'(x)d',0) = a'c'(x)b'd'
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < nb; ++l)
                    for (int p = 0; p < na; ++p)
                        for (int q = 0; q < nb; ++q) {
                            auto v = field.mul(a.constant(i, k, p), b.constant(j, l, q));
                            if (!field.is_zero(v)) add(T(i, j), T(k, l), T(p, q), v);
                        }
    // (0,a'(x)b',0)(0,0,d) = a'(x)b'd
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int l = 0; l < nb; ++l)
                for (int q = 0; q < nb; ++q)
                    add(T(i, j), B(l), T(i, q), b.constant(j, l, q));
    // (0,0,b)(c,0,0) = c(x)b
    for (int j = 0; j < nb; ++j)
        for (int k = 0; k < na; ++k)
            add(B(j), A(k), T(k, j), field.one());
    // (0,0,b)(0,c'(x)d',0) = c'(x)bd'
    for (int j = 0; j < nb; ++j)
        for (int k = 0; k < na; ++k)
            for (int l = 0; l < nb; ++l)
                for (int q = 0; q < nb; ++q)
                    add(B(j), T(k, l), T(k, q), b.constant(j, l, q));
    // (0,0,b)(0,0,d) = (0,0,bd)
    for (int j = 0; j < nb; ++j)
        for (int l = 0; l < nb; ++l)
            for (int q = 0; q < nb; ++q)
                add(B(j), B(l), B(q), b.constant(j, l, q));
    return co;
}

// The canonical projection (a, a'(x)b', b) -> (a, b) out of the coproduct,
// whose kernel is the tensor block.
template <class F>
Matrix<F> ca_projection_matrix(const FDAlgebra<F>& a, const FDAlgebra<F>& b) {
    const F& field = a.field();
    const int na = a.dim(), nb = b.dim();
    const int co_dim = na + na * nb + nb;
    Matrix<F> m(na + nb, co_dim, field);
    for (int i = 0; i < na; ++i) m.at(i, i) = field.one();
    for (int j = 0; j < nb; ++j) m.at(na + j, na + na * nb + j) = field.one();
    return m;
}

// Verifies the isomorphism A (x) B -> A <> B, a (x) b -> ab: the kernel of
// the projection is the tensor block and the block's induced multiplication
// is exactly the tensor-product multiplication.
template <class F>
bool ca_cosmash_tensor_check(const FDAlgebra<F>& a, const FDAlgebra<F>& b) {
    cadetail::require_ca(a, "left factor");
    cadetail::require_ca(b, "right factor");
    const F& field = a.field();
    const int na = a.dim(), nb = b.dim();
    FDAlgebra<F> co = ca_coproduct(a, b);

    // kernel of the projection has dimension na*nb and is the tensor block
    auto kernel = kernel_basis(ca_projection_matrix(a, b));
    if (kernel.size() != static_cast<std::size_t>(na * nb)) return false;
    for (const auto& v : kernel) {
        for (int i = 0; i < na; ++i)
            if (!field.is_zero(v[i])) return false;
        for (int j = 0; j < nb; ++j)
            if (!field.is_zero(v[na + na * nb + j])) return false;
    }

    // the map a_i (x) b_j -> a_i b_j hits the tensor block bijectively
    auto tensor_index = [&](int i, int j) { return na + i * nb + j; };
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            auto prod = co.multiply(co.unit_vector(i), co.unit_vector(na + na * nb + j));
            for (int k = 0; k < co.dim(); ++k) {
                typename F::Scalar expected =
                    (k == tensor_index(i, j)) ? field.one() : field.zero();
                if (!field.eq(prod[k], expected)) return false;
            }
        }

    // algebra morphism: (a(x)b)(a'(x)b') = (aa')(x)(bb') inside the block
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < na; ++k)
                for (int l = 0; l < nb; ++l) {
                    auto prod = co.multiply(co.unit_vector(tensor_index(i, j)),
                                            co.unit_vector(tensor_index(k, l)));
                    for (int p = 0; p < na; ++p)
                        if (!field.is_zero(prod[p])) return false;
                    for (int q = 0; q < nb; ++q)
                        if (!field.is_zero(prod[na + na * nb + q])) return false;
                    for (int p = 0; p < na; ++p)
                        for (int q = 0; q < nb; ++q) {
                            auto expected =
                                field.mul(a.constant(i, k, p), b.constant(j, l, q));
                            if (!field.eq(prod[tensor_index(p, q)], expected)) return false;
                        }
                }
    return true;
}

// Ternary variant through the cross-effect sequence: the kernel of
// (A+B) <> C -> (A <> C) x (B <> C), computed in the tensor models; returns
// the kernel dimension, which must equal dim A * dim B * dim C.
template <class F>
std::size_t ca_ternary_kernel_dimension(const FDAlgebra<F>& a, const FDAlgebra<F>& b,
                                        const FDAlgebra<F>& c) {
    cadetail::require_ca(c, "third factor");
    const F& field = a.field();
    FDAlgebra<F> d = ca_coproduct(a, b); // the coproduct A + B
    const int na = a.dim(), nb = b.dim(), nd = d.dim(), nc = c.dim();

    // (A+B) <> C is the tensor block D (x) C; the two maps are induced by
    // the retractions D -> A (kill B) and D -> B (kill A) tensored with C.
    // kill-B on D: keep the A block, zero the tensor and B blocks.
    Matrix<F> m(static_cast<std::size_t>(na) * nc + static_cast<std::size_t>(nb) * nc,
                static_cast<std::size_t>(nd) * nc, field);
    for (int i = 0; i < na; ++i)
        for (int k = 0; k < nc; ++k)
            m.at(static_cast<std::size_t>(i) * nc + k,
                 static_cast<std::size_t>(i) * nc + k) = field.one();
    for (int j = 0; j < nb; ++j)
        for (int k = 0; k < nc; ++k)
            m.at(static_cast<std::size_t>(na) * nc + static_cast<std::size_t>(j) * nc + k,
                 (static_cast<std::size_t>(na) + static_cast<std::size_t>(na) * nb + j) * nc + k) =
                field.one();
    return kernel_basis(m).size();
}

// Closure of an extra identity under the CA coproduct: forms the coproduct
// and evaluates the identity on generic elements with indeterminate
// coordinates. Both inputs must satisfy the identity themselves.
template <class F>
bool closure_check(const NAPolynomial<F>& phi, const FDAlgebra<F>& a, const FDAlgebra<F>& b) {
    cadetail::require_ca(a, "left factor");
    cadetail::require_ca(b, "right factor");
    if (!satisfies_identity_generic(a, phi))
        throw error("left factor does not satisfy the identity");
    if (!satisfies_identity_generic(b, phi))
        throw error("right factor does not satisfy the identity");
    FDAlgebra<F> co = ca_coproduct(a, b);
    return satisfies_identity_generic(co, phi);
}

} // namespace cosmash

#endif
