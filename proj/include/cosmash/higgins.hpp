#ifndef COSMASH_HIGGINS_HPP
#define COSMASH_HIGGINS_HPP

#include <string>
#include <vector>

#include "cosmash/fd_algebra.hpp"
#include "cosmash/linalg.hpp"

namespace cosmash {

template <class F>
struct HigginsResult {
    std::vector<std::vector<typename F::Scalar>> basis; // of [K, L, ...] in ambient coords
    bool exact = false; // true when ambient products of length > bound all vanish
};

namespace hdetail {

template <class F>
std::vector<std::vector<typename F::Scalar>> span_basis(
    const std::vector<std::vector<typename F::Scalar>>& vectors, const F& field,
    std::size_t dim) {
    Matrix<F> m(vectors.size(), dim, field);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = vectors[i][j];
    RrefResult<F> r = rref(m);
    std::vector<std::vector<typename F::Scalar>> out;
    for (std::size_t i = 0; i < r.rank; ++i) {
        std::vector<typename F::Scalar> row(dim, field.zero());
        for (std::size_t j = 0; j < dim; ++j) row[j] = r.reduced.at(i, j);
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace hdetail

// The Higgins commutator of subalgebras: the span in the ambient algebra of
// all evaluations of words of length <= bound that mix every block. Exact
// when ambient products of length bound+1 all vanish, approximate otherwise.
template <class F>
HigginsResult<F> higgins_commutator(const FDAlgebra<F>& ambient,
                                    const std::vector<std::vector<std::vector<typename F::Scalar>>>& blocks,
                                    int bound) {
    const F& field = ambient.field();
    const std::size_t dim = ambient.dim();
    if (blocks.size() < 2) throw error("the commutator needs at least two subobjects");

    // each block must span a subalgebra
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (const auto& u : blocks[b])
            for (const auto& v : blocks[b]) {
                auto prod = ambient.multiply(u, v);
                if (!in_span(prod, blocks[b], field))
                    throw error("block " + std::to_string(b + 1) + " is not a subalgebra");
            }
    }

    const std::size_t nblocks = blocks.size();
    // words[len][mask]: spanning vectors of evaluations of words of the
    // exact length whose letters cover exactly the blocks in mask
    std::vector<std::map<unsigned, std::vector<std::vector<typename F::Scalar>>>> words(bound + 1);
    for (std::size_t b = 0; b < nblocks; ++b)
        for (const auto& v : blocks[b]) words[1][1u << b].push_back(v);

    std::vector<std::vector<typename F::Scalar>> mixed;
    const unsigned full = (1u << nblocks) - 1;
    for (int len = 2; len <= bound; ++len) {
        for (int l = 1; l < len; ++l) {
            int r = len - l;
            for (const auto& [ml, vl] : words[l])
                for (const auto& [mr, vr] : words[r]) {
                    unsigned mask = ml | mr;
                    auto& bucket = words[len][mask];
                    for (const auto& u : vl)
                        for (const auto& v : vr) {
                            auto prod = ambient.multiply(u, v);
                            bool zero = true;
                            for (const auto& c : prod)
                                if (!field.is_zero(c)) zero = false;
                            if (!zero) bucket.push_back(prod);
                        }
                }
        }
        // keep buckets small
        for (auto& [mask, bucket] : words[len])
            bucket = hdetail::span_basis(bucket, field, dim);
    }
    for (int len = 2; len <= bound; ++len)
        for (const auto& [mask, bucket] : words[len])
            if (mask == full)
                for (const auto& v : bucket) mixed.push_back(v);

    HigginsResult<F> out;
    out.basis = hdetail::span_basis(mixed, field, dim);

    // products of length bound+1 vanish iff S_{bound+1} = 0 where
    // S_n = span{S_p S_q : p + q = n} starting from the whole algebra
    std::vector<std::vector<std::vector<typename F::Scalar>>> filtration(bound + 2);
    for (std::size_t i = 0; i < dim; ++i) filtration[1].push_back(ambient.unit_vector(i));
    for (int n = 2; n <= bound + 1; ++n) {
        std::vector<std::vector<typename F::Scalar>> prods;
        for (int p = 1; p < n; ++p)
            for (const auto& u : filtration[p])
                for (const auto& v : filtration[n - p]) prods.push_back(ambient.multiply(u, v));
        filtration[n] = hdetail::span_basis(prods, field, dim);
    }
    out.exact = filtration[bound + 1].empty();
    return out;
}

} // namespace cosmash

#endif
