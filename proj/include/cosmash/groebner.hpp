#ifndef COSMASH_GROEBNER_HPP
#define COSMASH_GROEBNER_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cosmash/commpoly.hpp"

namespace cosmash {

// Generators of a polynomial ideal over a field, with the order the basis
// computation will use. Zero generators are dropped.
template <class F>
struct Ideal {
    std::vector<CommPolynomial<F>> generators;
    MonomialOrder order;

    Ideal(std::vector<CommPolynomial<F>> gens, MonomialOrder ord = MonomialOrder())
        : order(ord) {
        for (auto& g : gens)
            if (!g.is_zero()) generators.push_back(std::move(g));
    }
};

struct GroebnerStats {
    std::size_t pairs_considered = 0;
    std::size_t pairs_reduced = 0;
    std::size_t basis_size_peak = 0;
    int max_degree = 0;
};

template <class F>
struct GroebnerBasis {
    std::vector<CommPolynomial<F>> elements; // reduced, monic, sorted
    MonomialOrder order;
    GroebnerStats stats;

    bool is_unit_ideal() const {
        return elements.size() == 1 && elements[0].is_constant() &&
               !elements[0].is_zero();
    }
};

// Thrown when the configured S-pair budget runs out. Carries the partial
// basis: feeding it back as a generator set resumes the computation (the
// processed part of the pair queue is re-derived, the mathematical state is
// not lost). When cofactors were being tracked, partial_cofactors[k] writes
// partial_basis[k] as a combination of the original generators, so a
// resumed lift can compose its cofactors back to the originals.
template <class F>
struct budget_exceeded_error : error {
    std::vector<CommPolynomial<F>> partial_basis;
    std::vector<std::vector<CommPolynomial<F>>> partial_cofactors;
    GroebnerStats stats;
    budget_exceeded_error(std::vector<CommPolynomial<F>> basis,
                          std::vector<std::vector<CommPolynomial<F>>> cofactors,
                          GroebnerStats s)
        : error("S-pair budget exceeded after " + std::to_string(s.pairs_reduced) +
                " reductions; partial basis of " + std::to_string(basis.size()) +
                " elements can be resumed"),
          partial_basis(std::move(basis)), partial_cofactors(std::move(cofactors)),
          stats(s) {}
};

namespace gbdetail {

constexpr int kMaxVars = 32;

struct Mono {
    std::array<std::uint8_t, kMaxVars> e{};
    int deg = 0;

    bool operator==(const Mono& o) const { return deg == o.deg && e == o.e; }
};

inline Mono mono_mul(const Mono& a, const Mono& b, int nvars) {
    Mono r;
    for (int i = 0; i < nvars; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] + b.e[i]);
    r.deg = a.deg + b.deg;
    return r;
}

inline bool mono_divides(const Mono& a, const Mono& b, int nvars) {
    if (a.deg > b.deg) return false;
    for (int i = 0; i < nvars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Mono mono_div(const Mono& a, const Mono& b, int nvars) { // a / b
    Mono r;
    for (int i = 0; i < nvars; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    r.deg = a.deg - b.deg;
    return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b, int nvars) {
    Mono r;
    r.deg = 0;
    for (int i = 0; i < nvars; ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

inline bool mono_coprime(const Mono& a, const Mono& b, int nvars) {
    for (int i = 0; i < nvars; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

// <0, 0, >0 comparison of a vs b in the chosen order; variables are indexed
// in the canonical indeterminate order.
inline int mono_cmp(const Mono& a, const Mono& b, int nvars, const MonomialOrder& order) {
    if (order.kind == MonomialOrder::lex) {
        for (int i = 0; i < nvars; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        return 0;
    }
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (int i = nvars - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
}

template <class F>
struct Engine {
    using Scalar = typename F::Scalar;
    using Term = std::pair<Mono, Scalar>;
    using Poly = std::vector<Term>; // sorted descending in the order

    F field;
    int nvars;
    MonomialOrder order;
    std::vector<Indeterminate> vars;

    struct MonoDesc {
        const Engine* eng;
        bool operator()(const Mono& a, const Mono& b) const {
            return mono_cmp(a, b, eng->nvars, eng->order) > 0;
        }
    };
    using Accum = std::map<Mono, Scalar, MonoDesc>;

    Accum make_accum() const { return Accum(MonoDesc{this}); }

    Engine(F f, std::vector<Indeterminate> vs, MonomialOrder ord)
        : field(f), nvars(static_cast<int>(vs.size())), order(ord), vars(std::move(vs)) {
        if (nvars > kMaxVars)
            throw error("too many indeterminates for the basis engine (" +
                        std::to_string(nvars) + " > " + std::to_string(kMaxVars) + ")");
    }

    Poly import(const CommPolynomial<F>& p) const {
        auto accum = make_accum();
        for (const auto& [pp, c] : p.terms()) {
            Mono m;
            for (const auto& [v, e] : pp.entries()) {
                auto it = std::lower_bound(vars.begin(), vars.end(), v);
                if (it == vars.end() || *it != v) throw error("unknown indeterminate " + v.str());
                m.e[it - vars.begin()] = static_cast<std::uint8_t>(e);
                m.deg += e;
            }
            accum[m] = c;
        }
        return Poly(accum.begin(), accum.end());
    }

    CommPolynomial<F> export_poly(const Poly& p) const {
        CommPolynomial<F> out(field);
        for (const auto& [m, c] : p) {
            PowerProduct pp;
            for (int i = 0; i < nvars; ++i)
                if (m.e[i]) pp = pp * PowerProduct(vars[i], m.e[i]);
            out.add_term(pp, c);
        }
        return out;
    }

    void accum_add(Accum& acc, const Poly& p, const Mono& shift, const Scalar& coef) const {
        for (const auto& [m, c] : p) {
            Mono key = mono_mul(m, shift, nvars);
            auto [it, inserted] = acc.emplace(key, field.mul(c, coef));
            if (!inserted) {
                it->second = field.add(it->second, field.mul(c, coef));
                if (field.is_zero(it->second)) acc.erase(it);
            }
        }
    }

    Poly to_poly(const Accum& acc) const { return Poly(acc.begin(), acc.end()); }

    Poly make_monic(Poly p) const {
        if (p.empty()) return p;
        if (field.is_one(p.front().second)) return p;
        Scalar inv = field.inv(p.front().second);
        for (auto& [m, c] : p) c = field.mul(c, inv);
        return p;
    }

    // Over the rationals, basis elements are kept primitive integer with a
    // positive leading coefficient, so that reduction can stay fraction-free.
    Poly normalize_element(Poly p) const {
        if constexpr (std::is_same_v<F, RationalField>) {
            if (p.empty()) return p;
            Integer den(1);
            for (const auto& [m, c] : p) den = lcm(den, c.denominator());
            Integer g(0);
            for (const auto& [m, c] : p)
                g = gcd(g, c.numerator() * den.div_exact(c.denominator()));
            Rational scale = Rational(den, g);
            if (p.front().second.sign() < 0) scale = -scale;
            for (auto& [m, c] : p) c = c * scale;
            return p;
        } else {
            return make_monic(std::move(p));
        }
    }

    // Full normal form against the current basis. Optionally accumulates the
    // cofactors of the reducers used: f = sum used[k] * basis[k] + nf.
    //
    // fraction_free (rationals only, incompatible with cofactor tracking)
    // keeps the working polynomial integral by rescaling it with positive
    // integers as needed; the result is then the exact normal form times an
    // unrecorded positive scalar, which is all the basis construction needs.
    Poly normal_form(const Poly& f, const std::vector<Poly>& basis,
                     const std::vector<bool>& usable,
                     std::vector<std::pair<std::size_t, Poly>>* used = nullptr,
                     bool fraction_free = false) const {
        auto work = make_accum();
        for (const auto& [m, c] : f) work.emplace(m, c);
        auto out = make_accum();

        if constexpr (std::is_same_v<F, RationalField>) {
            if (fraction_free && used == nullptr && !work.empty()) {
                Integer den(1);
                for (const auto& [m, c] : work) den = lcm(den, c.denominator());
                if (!den.is_one()) {
                    Rational scale(den);
                    for (auto& [m, c] : work) c = c * scale;
                }
            }
        }

        std::map<std::size_t, Accum> cof;
        while (!work.empty()) {
            auto lead = *work.begin();
            bool reduced = false;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (!usable[k] || basis[k].empty()) continue;
                const Mono& lt = basis[k].front().first;
                if (!mono_divides(lt, lead.first, nvars)) continue;
                Mono shift = mono_div(lead.first, lt, nvars);
                Scalar coef;
                bool handled = false;
                if constexpr (std::is_same_v<F, RationalField>) {
                    if (fraction_free && used == nullptr) {
                        // scale the work so the cancellation stays integral
                        Integer cn = lead.second.numerator();
                        Integer dn = basis[k].front().second.numerator();
                        Integer g = gcd(cn, dn);
                        Integer factor = dn.div_exact(g).abs();
                        if (!factor.is_one()) {
                            Rational scale(factor);
                            for (auto& [m, c] : work) c = c * scale;
                            for (auto& [m, c] : out) c = c * scale;
                            lead.second = work.begin()->second;
                        }
                        coef = lead.second / basis[k].front().second;
                        handled = true;
                    }
                }
                if (!handled) coef = field.div(lead.second, basis[k].front().second);
                accum_add(work, basis[k], shift, field.neg(coef));
                if (used) {
                    auto it = cof.find(k);
                    if (it == cof.end()) it = cof.emplace(k, make_accum()).first;
                    auto [cit, ins] = it->second.emplace(shift, coef);
                    if (!ins) {
                        cit->second = field.add(cit->second, coef);
                        if (field.is_zero(cit->second)) it->second.erase(cit);
                    }
                }
                reduced = true;
                break;
            }
            if (!reduced) {
                out.emplace(lead.first, lead.second);
                work.erase(work.begin());
            }
        }
        if (used)
            for (auto& [k, acc] : cof) used->emplace_back(k, to_poly(acc));
        return to_poly(out);
    }
};

} // namespace gbdetail

// The lcm-cancellation combination of two nonzero polynomials; the leading
// terms cancel by construction.
template <class F>
CommPolynomial<F> s_polynomial(const CommPolynomial<F>& f, const CommPolynomial<F>& g,
                               const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero()) throw error("s_polynomial of zero");
    const F& field = f.ring();
    auto [lf, cf] = f.leading_term(order);
    auto [lg, cg] = g.leading_term(order);
    PowerProduct l = PowerProduct::lcm(lf, lg);
    CommPolynomial<F> left = f.times_term(lf.quotient_of(l), field.inv(cf));
    CommPolynomial<F> right = g.times_term(lg.quotient_of(l), field.inv(cg));
    return left - right;
}

// Normal form of f against G: no term of the result is divisible by any
// leading term of G, and f - result lies in the ideal generated by G.
template <class F>
CommPolynomial<F> reduce(const CommPolynomial<F>& f, const std::vector<CommPolynomial<F>>& g,
                         const MonomialOrder& order) {
    std::set<Indeterminate> vs;
    for (const auto& v : f.indeterminates()) vs.insert(v);
    for (const auto& p : g)
        for (const auto& v : p.indeterminates()) vs.insert(v);
    gbdetail::Engine<F> eng(f.ring(), std::vector<Indeterminate>(vs.begin(), vs.end()), order);
    std::vector<typename gbdetail::Engine<F>::Poly> basis;
    for (const auto& p : g)
        if (!p.is_zero()) basis.push_back(eng.import(p));
    std::vector<bool> usable(basis.size(), true);
    return eng.export_poly(eng.normal_form(eng.import(f), basis, usable));
}

template <class F>
struct BuchbergerOptions {
    std::size_t pair_budget = static_cast<std::size_t>(-1);
    bool track_cofactors = false;
};

template <class F>
struct BuchbergerOutput {
    GroebnerBasis<F> basis;
    // cofactors[k][i]: basis element k = sum_i cofactors[k][i] * generator i
    std::vector<std::vector<CommPolynomial<F>>> cofactors;
};

namespace gbdetail {

template <class F>
struct Pair {
    std::size_t i, j;
    Mono lcm;
    int sugar;
};

// Buchberger with the Gebauer-Moeller pair criteria and sugar selection.
template <class F>
BuchbergerOutput<F> buchberger_engine(const Ideal<F>& ideal, const BuchbergerOptions<F>& opt) {
    if (ideal.generators.empty()) {
        GroebnerBasis<F> out;
        out.order = ideal.order;
        return {out, {}};
    }
    const F field = ideal.generators[0].ring();
    std::set<Indeterminate> vs;
    for (const auto& p : ideal.generators)
        for (const auto& v : p.indeterminates()) vs.insert(v);
    Engine<F> eng(field, std::vector<Indeterminate>(vs.begin(), vs.end()), ideal.order);
    const int nvars = eng.nvars;

    using Poly = typename Engine<F>::Poly;
    std::vector<Poly> basis;
    std::vector<Poly> reps; // flattened cofactor rows when tracking
    const std::size_t ngens = ideal.generators.size();

    // cofactor row for basis element k is a vector of ngens polynomials;
    // store as one Poly per (k, i) in a matrix
    std::vector<std::vector<Poly>> cof;

    std::vector<int> sugar;
    std::vector<bool> usable;

    GroebnerStats stats;
    std::vector<Pair<F>> pairs;

    auto pair_less = [&](const Pair<F>& a, const Pair<F>& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = mono_cmp(a.lcm, b.lcm, nvars, ideal.order);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    auto add_to_basis = [&](Poly h, int h_sugar, std::vector<Poly> h_cof) {
        std::size_t t = basis.size();
        // Gebauer-Moeller update of the pair set
        std::vector<Pair<F>> fresh;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].empty()) continue;
            Pair<F> p;
            p.i = k;
            p.j = t;
            p.lcm = mono_lcm(basis[k].front().first, h.front().first, nvars);
            int shift_k = p.lcm.deg - basis[k].front().first.deg;
            int shift_t = p.lcm.deg - h.front().first.deg;
            p.sugar = std::max(sugar[k] + shift_k, h_sugar + shift_t);
            fresh.push_back(p);
        }
        // criterion M: drop a fresh pair whose lcm is a proper multiple of
        // another fresh pair's lcm
        std::vector<bool> drop(fresh.size(), false);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[a]) continue;
                if (drop[b]) continue;
                if (!(fresh[b].lcm == fresh[a].lcm) &&
                    mono_divides(fresh[b].lcm, fresh[a].lcm, nvars))
                    drop[a] = true;
            }
        // criterion F: keep a single pair per surviving lcm
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            for (std::size_t b = a + 1; b < fresh.size(); ++b) {
                if (drop[b]) continue;
                if (fresh[a].lcm == fresh[b].lcm) drop[b] = true;
            }
        }
        // product criterion
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            if (mono_coprime(basis[fresh[a].i].front().first, h.front().first, nvars))
                drop[a] = true;
        }
        // chain criterion on the old pairs
        std::vector<Pair<F>> kept;
        for (const auto& p : pairs) {
            const Mono& lij = p.lcm;
            bool removable = mono_divides(h.front().first, lij, nvars);
            if (removable) {
                Mono lit = mono_lcm(basis[p.i].front().first, h.front().first, nvars);
                Mono ljt = mono_lcm(basis[p.j].front().first, h.front().first, nvars);
                if (lit == lij || ljt == lij) removable = false;
            }
            if (!removable) kept.push_back(p);
        }
        pairs = std::move(kept);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (!drop[a]) pairs.push_back(fresh[a]);

        // retire basis elements whose leading term the newcomer divides
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (usable[k] && !basis[k].empty() &&
                mono_divides(h.front().first, basis[k].front().first, nvars) )
                usable[k] = false;

        basis.push_back(std::move(h));
        sugar.push_back(h_sugar);
        usable.push_back(true);
        if (opt.track_cofactors) cof.push_back(std::move(h_cof));
        stats.basis_size_peak = std::max(stats.basis_size_peak, basis.size());
    };

    // seed the basis with the normalized generators
    for (std::size_t i = 0; i < ngens; ++i) {
        Poly raw = eng.import(ideal.generators[i]);
        if (raw.empty()) continue;
        typename F::Scalar old_lead = raw.front().second;
        Poly g = eng.normalize_element(std::move(raw));
        std::vector<Poly> row;
        if (opt.track_cofactors) {
            row.assign(ngens, Poly{});
            row[i] = Poly{{Mono{}, field.div(g.front().second, old_lead)}};
        }
        int deg = g.front().first.deg;
        stats.max_degree = std::max(stats.max_degree, deg);
        add_to_basis(std::move(g), deg, std::move(row));
    }

    while (!pairs.empty()) {
        if (stats.pairs_reduced >= opt.pair_budget) {
            std::vector<CommPolynomial<F>> partial;
            std::vector<std::vector<CommPolynomial<F>>> partial_cof;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (!usable[k]) continue;
                partial.push_back(eng.export_poly(basis[k]));
                if (opt.track_cofactors) {
                    std::vector<CommPolynomial<F>> row;
                    for (const auto& cp : cof[k]) row.push_back(eng.export_poly(cp));
                    partial_cof.push_back(std::move(row));
                }
            }
            throw budget_exceeded_error<F>(std::move(partial), std::move(partial_cof), stats);
        }
        auto best = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair<F> p = *best;
        pairs.erase(best);
        ++stats.pairs_considered;

        const Poly& fi = basis[p.i];
        const Poly& fj = basis[p.j];
        if (fi.empty() || fj.empty()) continue;

        Mono si = mono_div(p.lcm, fi.front().first, nvars);
        Mono sj = mono_div(p.lcm, fj.front().first, nvars);
        auto acc = eng.make_accum();
        eng.accum_add(acc, fi, si, field.inv(fi.front().second));
        eng.accum_add(acc, fj, sj, field.neg(field.inv(fj.front().second)));
        Poly spoly = eng.to_poly(acc);
        ++stats.pairs_reduced;
        if (spoly.empty()) continue;

        std::vector<std::pair<std::size_t, Poly>> used;
        Poly nf = eng.normal_form(spoly, basis, usable, opt.track_cofactors ? &used : nullptr,
                                  /*fraction_free=*/!opt.track_cofactors);
        if (nf.empty()) continue;

        std::vector<Poly> row;
        if (opt.track_cofactors) {
            row.assign(ngens, Poly{});
            auto axpy_row = [&](const std::vector<Poly>& src, const Mono& shift,
                                const typename F::Scalar& c) {
                for (std::size_t g = 0; g < ngens; ++g) {
                    if (src[g].empty()) continue;
                    auto acc2 = eng.make_accum();
                    eng.accum_add(acc2, row[g], Mono{}, field.one());
                    eng.accum_add(acc2, src[g], shift, c);
                    row[g] = eng.to_poly(acc2);
                }
            };
            axpy_row(cof[p.i], si, field.inv(fi.front().second));
            axpy_row(cof[p.j], sj, field.neg(field.inv(fj.front().second)));
            for (const auto& [k, mult] : used)
                for (const auto& [m, c] : mult) axpy_row(cof[k], m, field.neg(c));
        }

        typename F::Scalar old_lead = nf.front().second;
        int nf_sugar = std::max(p.sugar, nf.front().first.deg);
        Poly normalized = eng.normalize_element(std::move(nf));
        if (opt.track_cofactors) {
            typename F::Scalar scale = field.div(normalized.front().second, old_lead);
            if (!field.is_one(scale))
                for (auto& cp : row)
                    for (auto& [m, c] : cp) c = field.mul(c, scale);
        }
        stats.max_degree = std::max(stats.max_degree, normalized.front().first.deg);
        add_to_basis(std::move(normalized), nf_sugar, std::move(row));

        // a unit in the basis ends the computation early
        if (basis.back().size() == 1 && basis.back().front().first.deg == 0) break;
    }

    // final interreduction to the unique reduced basis
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].empty() || !usable[k]) continue;
        bool dominated = false;
        for (std::size_t l = 0; l < basis.size(); ++l) {
            if (l == k || basis[l].empty() || !usable[l]) continue;
            if (mono_divides(basis[l].front().first, basis[k].front().first, nvars)) {
                if (basis[l].front().first == basis[k].front().first && l > k) continue;
                dominated = true;
                break;
            }
        }
        if (!dominated) keep.push_back(k);
    }

    GroebnerBasis<F> out;
    out.order = ideal.order;
    out.stats = stats;
    std::vector<std::vector<CommPolynomial<F>>> out_cof;
    for (std::size_t idx : keep) {
        std::vector<bool> others(basis.size(), false);
        for (std::size_t l : keep) others[l] = (l != idx);
        std::vector<std::pair<std::size_t, Poly>> used;
        Poly nf = eng.normal_form(basis[idx], basis, others,
                                  opt.track_cofactors ? &used : nullptr,
                                  /*fraction_free=*/!opt.track_cofactors);
        if (nf.empty()) continue;
        typename F::Scalar lead = nf.front().second;
        Poly monic = eng.make_monic(nf);
        if (opt.track_cofactors) {
            std::vector<Poly> row = cof[idx];
            auto axpy_row = [&](const std::vector<Poly>& src, const Mono& shift,
                                const typename F::Scalar& c) {
                for (std::size_t g = 0; g < ngens; ++g) {
                    if (src[g].empty()) continue;
                    auto acc2 = eng.make_accum();
                    eng.accum_add(acc2, row[g], Mono{}, field.one());
                    eng.accum_add(acc2, src[g], shift, c);
                    row[g] = eng.to_poly(acc2);
                }
            };
            for (const auto& [k, mult] : used)
                for (const auto& [m, c] : mult) axpy_row(cof[k], m, field.neg(c));
            if (!field.is_one(lead)) {
                typename F::Scalar inv = field.inv(lead);
                for (auto& cp : row)
                    for (auto& [m, c] : cp) c = field.mul(c, inv);
            }
            std::vector<CommPolynomial<F>> row_out;
            for (const auto& cp : row) row_out.push_back(eng.export_poly(cp));
            out_cof.push_back(std::move(row_out));
        }
        out.elements.push_back(eng.export_poly(monic));
    }

    // canonical layout: ascending leading terms
    std::vector<std::size_t> perm(out.elements.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        auto la = out.elements[a].leading_term(ideal.order).first;
        auto lb = out.elements[b].leading_term(ideal.order).first;
        return ideal.order.less(la, lb);
    });
    GroebnerBasis<F> sorted;
    sorted.order = out.order;
    sorted.stats = out.stats;
    std::vector<std::vector<CommPolynomial<F>>> sorted_cof;
    for (std::size_t i : perm) {
        sorted.elements.push_back(out.elements[i]);
        if (opt.track_cofactors) sorted_cof.push_back(out_cof[i]);
    }
    return {std::move(sorted), std::move(sorted_cof)};
}

} // namespace gbdetail

template <class F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal,
                            const BuchbergerOptions<F>& opt = BuchbergerOptions<F>{}) {
    return gbdetail::buchberger_engine(ideal, opt).basis;
}

template <class F>
bool is_inconsistent(const Ideal<F>& ideal,
                     const BuchbergerOptions<F>& opt = BuchbergerOptions<F>{}) {
    return buchberger(ideal, opt).is_unit_ideal();
}

// Cofactors h_i with sum h_i * generators[i] = target; requires the target
// to reduce to zero modulo the basis.
template <class F>
std::vector<CommPolynomial<F>> lift(const Ideal<F>& ideal, const CommPolynomial<F>& target,
                                    const BuchbergerOptions<F>& opt_in = BuchbergerOptions<F>{}) {
    BuchbergerOptions<F> opt = opt_in;
    opt.track_cofactors = true;
    auto out = gbdetail::buchberger_engine(ideal, opt);
    const F field = target.ring();

    // reduce the target against the basis, collecting multipliers
    std::set<Indeterminate> vs;
    for (const auto& p : ideal.generators)
        for (const auto& v : p.indeterminates()) vs.insert(v);
    for (const auto& v : target.indeterminates()) vs.insert(v);
    gbdetail::Engine<F> eng(field, std::vector<Indeterminate>(vs.begin(), vs.end()),
                            ideal.order);
    std::vector<typename gbdetail::Engine<F>::Poly> basis;
    for (const auto& b : out.basis.elements) basis.push_back(eng.import(b));
    std::vector<bool> usable(basis.size(), true);
    std::vector<std::pair<std::size_t, typename gbdetail::Engine<F>::Poly>> used;
    auto nf = eng.normal_form(eng.import(target), basis, usable, &used);
    if (!nf.empty()) throw error("target is not in the ideal");

    std::vector<CommPolynomial<F>> cofactors(ideal.generators.size(),
                                             CommPolynomial<F>(field));
    for (const auto& [k, mult] : used) {
        CommPolynomial<F> m = eng.export_poly(mult);
        for (std::size_t g = 0; g < ideal.generators.size(); ++g)
            cofactors[g] = cofactors[g] + m * out.cofactors[k][g];
    }
    // verify exactly
    CommPolynomial<F> check(field);
    for (std::size_t g = 0; g < ideal.generators.size(); ++g)
        check = check + cofactors[g] * ideal.generators[g];
    if (!(check == target)) throw error("lift verification failed");
    return cofactors;
}

} // namespace cosmash

#endif
