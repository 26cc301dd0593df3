#ifndef COSMASH_VARIETY_HPP
#define COSMASH_VARIETY_HPP

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cosmash/linalg.hpp"
#include "cosmash/magma.hpp"
#include "cosmash/magma_io.hpp"

namespace cosmash {

// A named set of identity polynomials in abstract variables, defining a
// subvariety of the non-associative algebras over the field.
template <class F>
struct VarietyPresentation {
    std::string name;
    std::vector<NAPolynomial<F>> identities;
    F field;

    VarietyPresentation(std::string n, std::vector<NAPolynomial<F>> ids, F f = F{})
        : name(std::move(n)), identities(std::move(ids)), field(std::move(f)) {
        for (const auto& id : identities)
            if (id.is_zero()) throw error("variety " + name + " lists a zero identity");
    }

    std::set<Generator> variables() const {
        std::set<Generator> vs;
        for (const auto& id : identities)
            for (const auto& g : id.generators()) vs.insert(g);
        return vs;
    }
};

// Left-normed power x^k as a magma monomial: ((xx)x)...x.
inline MagmaMonomial left_power(const Generator& g, int k) {
    MagmaMonomial m = MagmaMonomial::leaf(g);
    for (int i = 1; i < k; ++i) m = MagmaMonomial::node(m, MagmaMonomial::leaf(g));
    return m;
}

// The thirteen built-in presentations. For cap (commutative associative with
// x^p = 0) the exponent is the field characteristic, so the field must be
// prime. Names are case-insensitive.
template <class F>
VarietyPresentation<F> builtin_variety(const std::string& name_in, F field = F{}) {
    std::string name;
    for (char c : name_in) name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto e = [&](const std::string& s) { return parse_expression<F>(s, field); };
    using V = VarietyPresentation<F>;
    if (name == "mag") return V("mag", {}, field);
    if (name == "ca") return V("ca", {e("xy - yx"), e("(xy)z - x(yz)")}, field);
    if (name == "anti") return V("anti", {e("xy + yx"), e("(xy)z + x(yz)")}, field);
    if (name == "lie") return V("lie", {e("xy + yx"), e("x(yz) + y(zx) + z(xy)")}, field);
    if (name == "assoc") return V("assoc", {e("(xy)z - x(yz)")}, field);
    if (name == "perm") return V("perm", {e("(xy)z - x(yz)"), e("x(yz) - x(zy)")}, field);
    if (name == "nil2") return V("nil2", {e("(xy)z"), e("x(yz)")}, field);
    if (name == "cyclic")
        return V("cyclic",
                 {e("(xy)z - (yz)x"), e("(yz)x - (zx)y"), e("x(yz) - y(zx)"),
                  e("y(zx) - z(xy)")},
                 field);
    if (name == "ab") return V("ab", {e("xy")}, field);
    if (name == "triv") return V("triv", {e("x")}, field);
    if (name == "alt") return V("alt", {e("xx"), e("(xy)z + x(yz)")}, field);
    if (name == "bool")
        return V("bool", {e("xy - yx"), e("(xy)z - x(yz)"), e("xx - x")}, field);
    if (name == "cap") {
        std::uint64_t p = field.characteristic();
        if (p == 0) throw error("cap requires a prime field (the exponent is the characteristic)");
        NAPolynomial<F> xp(field);
        xp.add_term(left_power(Generator("x"), static_cast<int>(p)), field.one());
        return V("cap", {e("xy - yx"), e("(xy)z - x(yz)"), xp}, field);
    }
    throw error("unknown builtin variety '" + name_in + "'");
}

inline const std::vector<std::string>& builtin_variety_names() {
    static const std::vector<std::string> names = {
        "mag", "ca", "anti", "lie", "assoc", "perm", "nil2",
        "cyclic", "ab", "triv", "alt", "cap", "bool"};
    return names;
}

// Variety file format: a "variety <name> over <field>" header line, then one
// identity expression per line. Blank lines and # comments are skipped.
template <class F>
VarietyPresentation<F> parse_variety_file(const std::string& text, F field = F{}) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);

    std::string name;
    std::vector<NAPolynomial<F>> ids;
    bool header_seen = false;
    for (const auto& raw : lines) {
        std::string line = raw;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
            ++start;
        line = line.substr(start);
        if (line.empty()) continue;
        if (!header_seen) {
            if (line.rfind("variety ", 0) != 0)
                throw error("variety file must start with 'variety <name> over <field>'");
            std::string rest = line.substr(8);
            auto over = rest.find(" over ");
            if (over == std::string::npos) throw error("variety header missing 'over <field>'");
            name = rest.substr(0, over);
            std::string fspec = rest.substr(over + 6);
            FieldSpec spec = parse_field_spec(fspec);
            bool matches = std::visit(
                [&](const auto& f) {
                    if constexpr (std::is_same_v<std::decay_t<decltype(f)>, F>)
                        return f == field;
                    else
                        return false;
                },
                spec);
            if (!matches)
                throw error("variety file is over " + fspec + ", not the requested field");
            header_seen = true;
            continue;
        }
        ids.push_back(parse_expression<F>(line, field));
    }
    if (!header_seen) throw error("empty variety file");
    return VarietyPresentation<F>(name, std::move(ids), field);
}

namespace vdetail {

// Fresh variable names for polarization: y, z, w, t, u, v, s, r, q, p, then
// indexed fallbacks, skipping anything already in use.
inline std::vector<Generator> fresh_variables(std::set<Generator> used, std::size_t count) {
    static const char* pool = "yzwtuvsrqp";
    std::vector<Generator> out;
    for (const char* c = pool; *c && out.size() < count; ++c) {
        Generator g(std::string(1, *c));
        if (!used.count(g)) {
            out.push_back(g);
            used.insert(g);
        }
    }
    int idx = 1;
    while (out.size() < count) {
        Generator g("y", idx++);
        if (!used.count(g)) {
            out.push_back(g);
            used.insert(g);
        }
    }
    return out;
}

// Multidegree of phi in its own variables; nullopt when monomials disagree
// (phi is not type-homogeneous).
template <class F>
std::optional<MultiDegree> type_of(const NAPolynomial<F>& phi) {
    std::optional<MultiDegree> type;
    for (const auto& [m, c] : phi.terms()) {
        MultiDegree d = multidegree(m);
        if (!type) type = d;
        else if (*type != d) return std::nullopt;
    }
    return type ? type : std::optional<MultiDegree>(MultiDegree{});
}

} // namespace vdetail

// Full polarization: each variable of multiplicity k is replaced by a sum of
// k fresh variables and the multilinear component extracted. The result is a
// consequence of phi over any field (it is an integer combination of
// substitution instances). Returns an empty list when the polarization
// collapses to zero, and {phi} when phi is already multilinear.
template <class F>
std::vector<NAPolynomial<F>> multilinearise(const NAPolynomial<F>& phi) {
    if (phi.is_zero()) return {};
    auto type = vdetail::type_of(phi);
    if (!type) throw error("multilinearise requires a type-homogeneous polynomial");

    NAPolynomial<F> cur = phi;
    std::set<Generator> used = phi.generators();
    for (const auto& [var, mult] : *type) {
        if (mult == 1) continue;
        std::vector<Generator> fresh = vdetail::fresh_variables(used, mult);
        for (const auto& g : fresh) used.insert(g);
        NAPolynomial<F> sum(phi.ring());
        for (const auto& g : fresh) sum.add_term(MagmaMonomial::leaf(g), phi.ring().one());
        std::map<Generator, NAPolynomial<F>> images;
        images[var] = sum;
        for (const auto& g : cur.generators())
            if (g != var) images[g] = NAPolynomial<F>::monomial(MagmaMonomial::leaf(g), phi.ring());
        NAPolynomial<F> expanded = substitute(cur, images);
        // keep the part where each fresh variable appears exactly once
        NAPolynomial<F> plucked(phi.ring());
        for (const auto& [m, c] : expanded.terms()) {
            MultiDegree d = multidegree(m);
            bool ok = true;
            for (const auto& g : fresh)
                if (!d.count(g) || d.at(g) != 1) ok = false;
            if (ok) plucked.add_term(m, c);
        }
        cur = plucked;
        if (cur.is_zero()) return {};
    }
    return {cur};
}

namespace vdetail {

// One-step split of variable x: phi(x -> y + z) - phi(x -> y) - phi(x -> z).
// Monomials linear in x cancel; the mixed components of higher powers
// survive as a genuine consequence over any field.
template <class F>
NAPolynomial<F> split_variable(const NAPolynomial<F>& phi, const Generator& x,
                               const Generator& y, const Generator& z) {
    const F& ring = phi.ring();
    auto leaf_poly = [&](const Generator& g) {
        return NAPolynomial<F>::monomial(MagmaMonomial::leaf(g), ring);
    };
    std::map<Generator, NAPolynomial<F>> base;
    for (const auto& g : phi.generators())
        if (g != x) base[g] = leaf_poly(g);

    auto with_x = [&](const NAPolynomial<F>& image) {
        auto images = base;
        images[x] = image;
        return substitute(phi, images);
    };
    NAPolynomial<F> sum = leaf_poly(y) + leaf_poly(z);
    return with_x(sum) - with_x(leaf_poly(y)) - with_x(leaf_poly(z));
}

// Canonical renaming of variables by first occurrence in the sorted term
// list, used to deduplicate polarization products.
template <class F>
std::string closure_key(const NAPolynomial<F>& p) {
    std::map<Generator, Generator> rename;
    int next = 0;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Generator> order;
        std::function<void(const MagmaMonomial&)> walk = [&](const MagmaMonomial& mm) {
            if (mm.is_leaf()) {
                order.push_back(mm.gen());
                return;
            }
            walk(mm.left());
            walk(mm.right());
        };
        walk(m);
        for (const auto& g : order)
            if (!rename.count(g)) rename.emplace(g, Generator("v", next++));
    }
    std::map<Generator, NAPolynomial<F>> images;
    for (const auto& [g, r] : rename)
        images[g] = NAPolynomial<F>::monomial(MagmaMonomial::leaf(r), p.ring());
    return print_expression(substitute(p, images));
}

// The polarization closure of the presentation's identities: the original
// identities plus every iterated one-step split. Over a characteristic-zero
// field the multihomogeneous components of each element are added as well
// (over an infinite field each component of an identity is an identity).
template <class F>
std::vector<NAPolynomial<F>> identity_closure(const VarietyPresentation<F>& v) {
    std::vector<NAPolynomial<F>> out;
    std::set<std::string> seen;

    auto push = [&](const NAPolynomial<F>& p) {
        if (p.is_zero()) return;
        if (seen.insert(closure_key(p)).second) out.push_back(p);
    };

    if (v.field.characteristic() == 0) {
        // over an infinite field each multihomogeneous component of an
        // identity is itself an identity; seed with the components
        for (const auto& id : v.identities) {
            std::map<std::string, NAPolynomial<F>> by_type;
            for (const auto& [m, c] : id.terms()) {
                std::string key;
                for (const auto& [g, k] : multidegree(m))
                    key += g.str() + "^" + std::to_string(k) + " ";
                auto it = by_type.find(key);
                if (it == by_type.end())
                    it = by_type.emplace(key, NAPolynomial<F>(v.field)).first;
                it->second.add_term(m, c);
            }
            for (auto& [key, comp] : by_type) push(comp);
        }
    } else {
        for (const auto& id : v.identities) push(id);
    }

    std::size_t cursor = 0;
    while (cursor < out.size()) {
        if (out.size() > 200) throw error("polarization closure unexpectedly large");
        NAPolynomial<F> p = out[cursor++];
        std::set<Generator> used = p.generators();
        for (const auto& x : p.generators()) {
            int max_mult = 0;
            for (const auto& [m, c] : p.terms()) {
                MultiDegree d = multidegree(m);
                auto it = d.find(x);
                if (it != d.end()) max_mult = std::max(max_mult, it->second);
            }
            if (max_mult < 2) continue;
            auto fresh = fresh_variables(used, 2);
            push(split_variable(p, x, fresh[0], fresh[1]));
        }
    }
    return out;
}

// True when every element of the closure is multidegree-homogeneous, which
// makes the T-ideal graded and lets membership questions slice by
// multidegree.
template <class F>
bool closure_is_homogeneous(const std::vector<NAPolynomial<F>>& closure) {
    for (const auto& p : closure)
        if (!type_of(p)) return false;
    return true;
}

} // namespace vdetail

} // namespace cosmash

#endif
