#ifndef COSMASH_MAGMA_HPP
#define COSMASH_MAGMA_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cosmash/error.hpp"
#include "cosmash/fields.hpp"

namespace cosmash {

// A named generator of a free magma. Ordered by name, then index; an absent
// index sorts before any present one.
struct Generator {
    std::string name;
    int index = -1; // -1 means "no index"

    Generator() = default;
    Generator(std::string n) : name(std::move(n)) {}
    Generator(std::string n, int i) : name(std::move(n)), index(i) {}

    std::string str() const {
        return index < 0 ? name : name + std::to_string(index);
    }

    auto operator<=>(const Generator&) const = default;
};

// A non-associative word: a full binary tree with generator leaves.
// Immutable; copies share structure.
class MagmaMonomial {
  public:
    MagmaMonomial() = default; // empty handle, only for containers

    static MagmaMonomial leaf(const Generator& g) {
        auto n = std::make_shared<Node>();
        n->gen = g;
        n->degree = 1;
        return MagmaMonomial(std::move(n));
    }

    static MagmaMonomial node(const MagmaMonomial& l, const MagmaMonomial& r) {
        auto n = std::make_shared<Node>();
        n->left = l.node_;
        n->right = r.node_;
        n->degree = l.degree() + r.degree();
        return MagmaMonomial(std::move(n));
    }

    bool valid() const { return node_ != nullptr; }
    bool is_leaf() const { return node_->left == nullptr; }
    const Generator& gen() const { return node_->gen; }
    MagmaMonomial left() const { return MagmaMonomial(node_->left); }
    MagmaMonomial right() const { return MagmaMonomial(node_->right); }
    int degree() const { return node_->degree; }

    // Paper-style printing: factors juxtaposed, inner products parenthesized.
    std::string str() const {
        if (is_leaf()) return gen().str();
        return wrap(left()) + wrap(right());
    }

    bool operator==(const MagmaMonomial& o) const { return compare(*this, o) == 0; }
    bool operator!=(const MagmaMonomial& o) const { return compare(*this, o) != 0; }
    bool operator<(const MagmaMonomial& o) const { return compare(*this, o) < 0; }

    // Total order: by degree, then leaves before nodes, then generator
    // order, then recursively on (left, right).
    static int compare(const MagmaMonomial& a, const MagmaMonomial& b) {
        if (a.node_ == b.node_) return 0;
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? -1 : 1;
        if (a.is_leaf()) {
            if (a.gen() == b.gen()) return 0;
            return a.gen() < b.gen() ? -1 : 1;
        }
        int c = compare(a.left(), b.left());
        if (c != 0) return c;
        return compare(a.right(), b.right());
    }

  private:
    struct Node {
        Generator gen;
        std::shared_ptr<const Node> left, right;
        int degree = 0;
    };

    explicit MagmaMonomial(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static std::string wrap(const MagmaMonomial& m) {
        return m.is_leaf() ? m.str() : "(" + m.str() + ")";
    }

    std::shared_ptr<const Node> node_;
};

inline int compare_monomials(const MagmaMonomial& a, const MagmaMonomial& b) {
    return MagmaMonomial::compare(a, b);
}

struct MagmaLess {
    bool operator()(const MagmaMonomial& a, const MagmaMonomial& b) const {
        return MagmaMonomial::compare(a, b) < 0;
    }
};

// Generator -> positive count; the "type" of a monomial.
using MultiDegree = std::map<Generator, int>;

inline void accumulate_multidegree(const MagmaMonomial& m, MultiDegree& out) {
    if (m.is_leaf()) {
        ++out[m.gen()];
        return;
    }
    accumulate_multidegree(m.left(), out);
    accumulate_multidegree(m.right(), out);
}

inline MultiDegree multidegree(const MagmaMonomial& m) {
    MultiDegree d;
    accumulate_multidegree(m, d);
    return d;
}

inline void collect_generators(const MagmaMonomial& m, std::set<Generator>& out) {
    if (m.is_leaf()) {
        out.insert(m.gen());
        return;
    }
    collect_generators(m.left(), out);
    collect_generators(m.right(), out);
}

// Finite scalar-weighted sum of magma monomials over a coefficient ring R.
// No zero coefficients are stored.
template <class R>
class NAPolynomial {
  public:
    using Scalar = typename R::Scalar;
    using TermMap = std::map<MagmaMonomial, Scalar, MagmaLess>;

    explicit NAPolynomial(R ring = R{}) : ring_(std::move(ring)) {}

    static NAPolynomial monomial(const MagmaMonomial& m, R ring = R{}) {
        NAPolynomial p(ring);
        p.add_term(m, ring.one());
        return p;
    }

    const R& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const MagmaMonomial& m, const Scalar& c) {
        if (ring_.is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = ring_.add(it->second, c);
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    NAPolynomial operator+(const NAPolynomial& o) const {
        check_ring(o);
        NAPolynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    NAPolynomial operator-(const NAPolynomial& o) const {
        check_ring(o);
        NAPolynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, ring_.neg(c));
        return r;
    }

    NAPolynomial operator-() const {
        NAPolynomial r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, ring_.neg(c));
        return r;
    }

    NAPolynomial scaled(const Scalar& s) const {
        NAPolynomial r(ring_);
        if (ring_.is_zero(s)) return r;
        for (const auto& [m, c] : terms_) r.add_term(m, ring_.mul(c, s));
        return r;
    }

    // Bilinear extension of tree pairing: degree of each product monomial is
    // the sum of the factor degrees.
    NAPolynomial operator*(const NAPolynomial& o) const {
        check_ring(o);
        NAPolynomial r(ring_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_)
                r.add_term(MagmaMonomial::node(m1, m2), ring_.mul(c1, c2));
        return r;
    }

    bool operator==(const NAPolynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto it = o.terms_.begin();
        for (const auto& [m, c] : terms_) {
            if (m != it->first || !ring_.eq(c, it->second)) return false;
            ++it;
        }
        return true;
    }
    bool operator!=(const NAPolynomial& o) const { return !(*this == o); }

    std::set<Generator> generators() const {
        std::set<Generator> out;
        for (const auto& [m, c] : terms_) collect_generators(m, out);
        return out;
    }

    // True iff every monomial is multilinear and all monomials share the
    // same generator set. The zero polynomial qualifies vacuously.
    bool is_multilinear() const {
        bool first = true;
        std::set<Generator> common;
        for (const auto& [m, c] : terms_) {
            MultiDegree d = multidegree(m);
            std::set<Generator> gens;
            for (const auto& [g, k] : d) {
                if (k != 1) return false;
                gens.insert(g);
            }
            if (first) {
                common = std::move(gens);
                first = false;
            } else if (gens != common) {
                return false;
            }
        }
        return true;
    }

  private:
    void check_ring(const NAPolynomial& o) const {
        if (ring_ != o.ring_)
            throw field_mismatch_error("polynomials over different scalar fields");
    }

    R ring_;
    TermMap terms_;
};

// Homomorphic replacement of leaves, expanded multilinearly.
template <class R>
NAPolynomial<R> substitute_monomial(const MagmaMonomial& m,
                                    const std::map<Generator, NAPolynomial<R>>& images) {
    if (m.is_leaf()) {
        auto it = images.find(m.gen());
        if (it == images.end())
            throw error("substitution has no image for generator " + m.gen().str());
        return it->second;
    }
    return substitute_monomial(m.left(), images) *
           substitute_monomial(m.right(), images);
}

template <class R>
NAPolynomial<R> substitute(const NAPolynomial<R>& p,
                           const std::map<Generator, NAPolynomial<R>>& images) {
    NAPolynomial<R> out(p.ring());
    for (const auto& [m, c] : p.terms())
        out = out + substitute_monomial(m, images).scaled(c);
    return out;
}

// Extracts the component of p whose monomials have the given multidegree.
template <class R>
NAPolynomial<R> multidegree_component(const NAPolynomial<R>& p, const MultiDegree& d) {
    NAPolynomial<R> out(p.ring());
    for (const auto& [m, c] : p.terms())
        if (multidegree(m) == d) out.add_term(m, c);
    return out;
}

// Change of coefficient ring, coefficientwise.
template <class R2, class R1, class Conv>
NAPolynomial<R2> map_coefficients(const NAPolynomial<R1>& p, R2 target, Conv conv) {
    NAPolynomial<R2> out(target);
    for (const auto& [m, c] : p.terms()) out.add_term(m, conv(c));
    return out;
}

} // namespace cosmash

#endif
