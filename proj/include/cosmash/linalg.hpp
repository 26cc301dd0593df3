#ifndef COSMASH_LINALG_HPP
#define COSMASH_LINALG_HPP

#include <optional>
#include <vector>

#include "cosmash/error.hpp"
#include "cosmash/fields.hpp"

namespace cosmash {

// Dense matrix over an exact field F. Degenerate shapes (0 x n, n x 0) are
// legal with the obvious conventions.
template <class F>
class Matrix {
  public:
    using Scalar = typename F::Scalar;

    Matrix(std::size_t rows, std::size_t cols, F field = F{})
        : rows_(rows), cols_(cols), field_(std::move(field)),
          a_(rows * cols, field_.zero()) {}

    static Matrix identity(std::size_t n, F field = F{}) {
        Matrix m(n, n, field);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols,
                            F field = F{}) {
        Matrix m(rows.size(), cols, field);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw error("ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Scalar> multiply(const std::vector<Scalar>& v) const {
        if (v.size() != cols_) throw error("dimension mismatch in matrix-vector product");
        std::vector<Scalar> out(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i) {
            Scalar acc = field_.zero();
            for (std::size_t j = 0; j < cols_; ++j)
                if (!field_.is_zero(at(i, j)))
                    acc = field_.add(acc, field_.mul(at(i, j), v[j]));
            out[i] = acc;
        }
        return out;
    }

    // Stacks o below this matrix.
    Matrix stacked(const Matrix& o) const {
        if (o.cols_ != cols_) throw error("stack requires equal column counts");
        Matrix m(rows_ + o.rows_, cols_, field_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = o.at(i, j);
        return m;
    }

  private:
    std::size_t rows_, cols_;
    F field_;
    std::vector<Scalar> a_;
};

template <class F>
struct RrefResult {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots; // column index per pivot row
    std::size_t rank = 0;
};

namespace detail {

// Plain Gauss-Jordan; pivot is the first nonzero entry in column order.
template <class F>
RrefResult<F> rref_generic(Matrix<F> m) {
    const F& k = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && k.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = col; j < m.cols(); ++j)
                std::swap(m.at(sel, j), m.at(row, j));
        typename F::Scalar inv = k.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols(); ++j)
            m.at(row, j) = k.mul(m.at(row, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || k.is_zero(m.at(i, col))) continue;
            typename F::Scalar f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    std::size_t rank = pivots.size();
    return {std::move(m), std::move(pivots), rank};
}

// Fraction-free (Bareiss) forward elimination on integer-cleared rows,
// then a rational normalization pass to reduced echelon form. Keeps the
// intermediate entries polynomial-sized instead of letting numerators and
// denominators grow independently.
inline RrefResult<RationalField> rref_rational(const Matrix<RationalField>& input) {
    const std::size_t rows = input.rows(), cols = input.cols();
    RationalField q;
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols, Integer(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer den(1);
        for (std::size_t j = 0; j < cols; ++j)
            den = lcm(den, input.at(i, j).denominator());
        Integer g(0);
        for (std::size_t j = 0; j < cols; ++j) {
            a[i][j] = input.at(i, j).numerator() * den.div_exact(input.at(i, j).denominator());
            g = gcd(g, a[i][j]);
        }
        if (!g.is_zero() && !g.is_one())
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = a[i][j].div_exact(g);
    }

    std::vector<std::size_t> pivots;
    Integer prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && a[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        if (sel != row) std::swap(a[sel], a[row]);
        const Integer pivot = a[row][col];
        for (std::size_t i = row + 1; i < rows; ++i) {
            Integer f = a[i][col];
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] = (a[i][j] * pivot - f * a[row][j]).div_exact(prev);
        }
        prev = pivot;
        pivots.push_back(col);
        ++row;
    }

    // Back-substitution over Q into reduced form.
    Matrix<RationalField> r(rows, cols, q);
    const std::size_t rank = pivots.size();
    for (std::size_t i = 0; i < rank; ++i) {
        Rational inv = Rational(a[i][pivots[i]]).inverse();
        for (std::size_t j = pivots[i]; j < cols; ++j)
            r.at(i, j) = Rational(a[i][j]) * inv;
    }
    for (std::size_t i = rank; i-- > 1;) {
        for (std::size_t above = 0; above < i; ++above) {
            Rational f = r.at(above, pivots[i]);
            if (f.is_zero()) continue;
            for (std::size_t j = pivots[i]; j < cols; ++j)
                r.at(above, j) = r.at(above, j) - f * r.at(i, j);
        }
    }
    return {std::move(r), std::move(pivots), rank};
}

} // namespace detail

template <class F>
RrefResult<F> rref(const Matrix<F>& m) {
    if constexpr (std::is_same_v<F, RationalField>)
        return detail::rref_rational(m);
    else
        return detail::rref_generic(m);
}

// Basis of the right kernel {v : Mv = 0}; each vector is re-verified by
// multiplication before being returned.
template <class F>
std::vector<std::vector<typename F::Scalar>> kernel_basis(const Matrix<F>& m) {
    const F& k = m.field();
    RrefResult<F> r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;

    std::vector<std::vector<typename F::Scalar>> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        std::vector<typename F::Scalar> v(m.cols(), k.zero());
        v[j] = k.one();
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = k.neg(r.reduced.at(i, j));
        basis.push_back(std::move(v));
    }
    for (const auto& v : basis)
        for (const auto& x : m.multiply(v))
            if (!k.is_zero(x)) throw error("kernel vector failed verification");
    return basis;
}

template <class F>
struct AffineSolution {
    std::vector<typename F::Scalar> particular;
    std::vector<std::vector<typename F::Scalar>> kernel;
};

// Full solution set of Mv = b, or nullopt when the system is inconsistent.
// want_kernel=false skips the kernel basis (membership-only callers).
template <class F>
std::optional<AffineSolution<F>> solve_affine(const Matrix<F>& m,
                                              const std::vector<typename F::Scalar>& b,
                                              bool want_kernel = true) {
    if (b.size() != m.rows()) throw error("dimension mismatch in solve_affine");
    const F& k = m.field();
    Matrix<F> aug(m.rows(), m.cols() + 1, k);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    RrefResult<F> r = rref(aug);
    for (std::size_t c : r.pivots)
        if (c == m.cols()) return std::nullopt;

    AffineSolution<F> sol;
    sol.particular.assign(m.cols(), k.zero());
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        sol.particular[r.pivots[i]] = r.reduced.at(i, m.cols());
    auto check = m.multiply(sol.particular);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!k.eq(check[i], b[i])) throw error("affine solution failed verification");
    if (want_kernel) sol.kernel = kernel_basis(m);
    return sol;
}

// Span membership with witness coefficients: v = sum coeff[i] * span[i].
template <class F>
std::optional<std::vector<typename F::Scalar>> in_span(
    const std::vector<typename F::Scalar>& v,
    const std::vector<std::vector<typename F::Scalar>>& span, F field = F{}) {
    const std::size_t dim = v.size();
    for (const auto& s : span)
        if (s.size() != dim) throw error("dimension mismatch in in_span");
    Matrix<F> m(dim, span.size(), field);
    for (std::size_t j = 0; j < span.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = span[j][i];
    auto sol = solve_affine(m, v, /*want_kernel=*/false);
    if (!sol) return std::nullopt;
    return sol->particular;
}

} // namespace cosmash

#endif
