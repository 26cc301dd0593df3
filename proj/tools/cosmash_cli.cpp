// Batch command-line surface over the library: equation-system generation
// and checks, Groebner runs, variety and cosmash reports. Every command
// prints a deterministic result block (use --json for machine parsing) and
// exits 0 on success, 1 on check failure, 2 on usage errors.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosmash/ca_tensor.hpp"
#include "cosmash/cosmash.hpp"
#include "cosmash/eqsys.hpp"
#include "cosmash/eqsys_io.hpp"
#include "cosmash/groebner.hpp"
#include "cosmash/higgins.hpp"
#include "cosmash/t_ideal.hpp"
#include "cosmash/truncated.hpp"

using namespace cosmash;
using nlohmann::json;

namespace {

struct Output {
    bool as_json = false;
    std::string out_path;
    json payload = json::object();
    std::string text;

    void line(const std::string& s) {
        text += s;
        text += "\n";
    }

    int finish(int code) {
        payload["status"] = code;
        std::string rendered = as_json ? payload.dump(2) + "\n" : text;
        if (!out_path.empty()) write_file(out_path, rendered);
        std::cout << rendered;
        return code;
    }
};

json parse_json_arg(const std::string& arg) {
    std::string text = (!arg.empty() && arg.front() == '{') ? arg : read_file(arg);
    return json::parse(text);
}

template <class Fn>
int with_field(const std::string& spec, Fn&& fn) {
    return std::visit([&](auto field) { return fn(field); }, parse_field_spec(spec));
}

template <class F>
VarietyPresentation<F> load_variety(const std::string& name_or_file, F field) {
    for (const auto& n : builtin_variety_names())
        if (n == name_or_file) return builtin_variety<F>(name_or_file, field);
    return parse_variety_file<F>(read_file(name_or_file), field);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

EquationSystem load_system(const std::string& file, bool swap) {
    EquationSystem sys;
    if (file.empty()) {
        sys = generate_system();
    } else {
        json j = parse_json_arg(file);
        sys.equations = equations_from_json<IntegerRing>(j);
    }
    return swap ? swap_delta(sys) : sys;
}

int cmd_gen_eqs(bool check, Output& out, const std::string& dump_path) {
    EquationSystem sys = generate_system();
    if (!dump_path.empty())
        write_file(dump_path, equation_system_to_json(sys).dump(2) + "\n");
    if (check) {
        FixtureReport rep = check_against_fixture(sys);
        out.payload["matched"] = rep.matched;
        out.payload["missing"] = rep.missing;
        out.payload["extra"] = rep.extra;
        out.payload["blocks_aligned"] = rep.blocks_aligned;
        out.line(std::to_string(rep.matched) + "/96 matched");
        if (!rep.missing.empty())
            out.line("missing: " + std::to_string(rep.missing.size()));
        if (!rep.extra.empty()) out.line("extra: " + std::to_string(rep.extra.size()));
        out.line(rep.blocks_aligned ? "block index alignment: identity"
                                    : "block index alignment: none");
        return out.finish(rep.perfect() ? 0 : 1);
    }
    out.payload["system"] = equation_system_to_json(sys);
    for (std::size_t i = 0; i < sys.equations.size(); ++i)
        out.line("f" + std::to_string(i + 1) + " = " + print_commpoly(sys.equations[i]));
    return out.finish(0);
}

int cmd_gcd_check(Output& out) {
    Integer m = Integer::parse(appendix_m());
    Integer mp = Integer::parse(appendix_m_prime());
    bool round_trips = m.str() == appendix_m() && mp.str() == appendix_m_prime();
    Integer g = gcd(m, mp);
    out.payload["gcd"] = g.str();
    out.payload["round_trips"] = round_trips;
    out.payload["digits_m"] = m.str().size();
    out.payload["digits_m_prime"] = mp.str().size();
    out.line("gcd(m, m') = " + g.str());
    out.line(std::string("decimal round-trip: ") + (round_trips ? "ok" : "FAILED"));
    return out.finish(g == Integer(2) && round_trips ? 0 : 1);
}

template <class F>
int run_groebner(F field, const std::string& file, bool swap, const MonomialOrder& order,
                 std::size_t budget, bool expect_unit, Output& out) {
    EquationSystem sys = load_system(file, swap);
    std::vector<CommPolynomial<F>> gens;
    for (const auto& e : sys.equations)
        gens.push_back(change_ring(e, field, [&](const Integer& c) {
            return field.from_integer(c);
        }));
    Ideal<F> ideal(std::move(gens), order);
    BuchbergerOptions<F> opt;
    opt.pair_budget = budget;
    try {
        GroebnerBasis<F> g = buchberger(ideal, opt);
        out.payload["field"] = field.name();
        out.payload["order"] = order.str();
        out.payload["basis_size"] = g.elements.size();
        out.payload["pairs_reduced"] = g.stats.pairs_reduced;
        out.payload["max_degree"] = g.stats.max_degree;
        out.payload["unit_ideal"] = g.is_unit_ideal();
        json basis = json::array();
        for (const auto& e : g.elements) basis.push_back(print_commpoly(e));
        out.payload["basis"] = basis;
        if (g.is_unit_ideal()) {
            out.line("reduced basis = {1}");
        } else {
            out.line("reduced basis (" + std::to_string(g.elements.size()) + " elements):");
            for (const auto& e : g.elements) out.line("  " + print_commpoly(e));
        }
        out.line("pairs reduced: " + std::to_string(g.stats.pairs_reduced) +
                 ", max degree: " + std::to_string(g.stats.max_degree));
        if (expect_unit) return out.finish(g.is_unit_ideal() ? 0 : 1);
        return out.finish(0);
    } catch (const budget_exceeded_error<F>& e) {
        out.payload["budget_exceeded"] = true;
        out.payload["partial_basis_size"] = e.partial_basis.size();
        json partial = json::array();
        for (const auto& p : e.partial_basis) partial.push_back(print_commpoly(p));
        out.payload["partial_basis"] = partial;
        out.line("budget exceeded after " + std::to_string(e.stats.pairs_reduced) +
                 " reductions; partial basis of " + std::to_string(e.partial_basis.size()) +
                 " elements (resume by feeding it back as generators)");
        return out.finish(1);
    }
}

template <class F>
int run_eval_assignment(F field, const std::string& assign_arg, const std::string& file,
                        bool swap, Output& out) {
    EquationSystem sys = load_system(file, swap);
    auto a = assignment_from_json(parse_json_arg(assign_arg), field);
    auto violations = evaluate_assignment(sys, a, field);
    json v = json::array();
    for (const auto& viol : violations)
        v.push_back({{"index", viol.index}, {"value", field.str(viol.value)}});
    out.payload["violations"] = v;
    out.line("violated equations: " + std::to_string(violations.size()) + "/96");
    for (const auto& viol : violations)
        out.line("  f" + std::to_string(viol.index) + " = " + field.str(viol.value));
    // the system is inconsistent, so a full assignment must violate something
    return out.finish(violations.empty() ? 1 : 0);
}

int cmd_certificate_verify(const std::string& mu_file, const std::string& expect,
                           const std::string& file, bool swap, Output& out) {
    EquationSystem sys = load_system(file, swap);
    CertificateFile cert = certificate_from_json(parse_json_arg(mu_file));
    Integer expected = expect.empty() ? cert.expected : Integer::parse(expect);
    bool ok = verify_certificate(sys, cert.mu, expected);
    out.payload["expected"] = expected.str();
    out.payload["verified"] = ok;
    out.line(std::string("certificate ") + (ok ? "verified: sum mu_i f_i = " : "FAILED against ") +
             expected.str());
    return out.finish(ok ? 0 : 1);
}

int cmd_certificate_lift(std::size_t budget, const std::string& file, bool swap,
                         const std::string& save, Output& out) {
    EquationSystem sys = load_system(file, swap);
    std::vector<CommPolynomial<RationalField>> gens;
    for (const auto& e : sys.equations) gens.push_back(to_rationals(e));
    Ideal<RationalField> ideal(std::move(gens), MonomialOrder());
    BuchbergerOptions<RationalField> opt;
    opt.pair_budget = budget;
    opt.track_cofactors = true;
    try {
        auto cof = lift(ideal, CommPolynomial<RationalField>::constant(Rational(1)), opt);
        // clear denominators: sum (D h_i) f_i = D
        Integer den(1);
        for (const auto& h : cof)
            for (const auto& [pp, c] : h.terms()) den = lcm(den, c.denominator());
        std::vector<IntPoly> mu;
        for (const auto& h : cof) {
            IntPoly m{IntegerRing{}};
            for (const auto& [pp, c] : h.terms())
                m.add_term(pp, c.numerator() * den.div_exact(c.denominator()));
            mu.push_back(std::move(m));
        }
        bool ok = verify_certificate(sys, mu, den);
        out.payload["integer"] = den.str();
        out.payload["verified"] = ok;
        if (!save.empty()) write_file(save, certificate_to_json(mu, den).dump() + "\n");
        out.line("lift succeeded: sum mu_i f_i = " + den.str() +
                 (ok ? " (verified)" : " (verification FAILED)"));
        return out.finish(ok ? 0 : 1);
    } catch (const budget_exceeded_error<RationalField>& e) {
        out.payload["budget_exceeded"] = true;
        out.line("lift budget exceeded after " + std::to_string(e.stats.pairs_reduced) +
                 " reductions; rerun with a larger --budget or use the certificate checker "
                 "on externally produced cofactors");
        return out.finish(1);
    }
}

template <class F>
int run_variety_sub(F field, const std::string& sub, const std::string& vname,
                    const std::string& expr, std::size_t limit, Output& out) {
    if (sub == "multilinearise") {
        auto results = multilinearise(parse_expression<F>(expr, field));
        json rs = json::array();
        for (const auto& r : results) rs.push_back(print_expression(r));
        out.payload["result"] = rs;
        if (results.empty()) out.line("0");
        for (const auto& r : results) out.line(print_expression(r));
        return out.finish(0);
    }
    VarietyPresentation<F> v = load_variety(vname, field);
    if (sub == "check-identity") {
        bool ok = is_identity(v, parse_expression<F>(expr, field), limit);
        out.payload["identity"] = ok;
        out.line(std::string(ok ? "identity" : "not an identity") + " of " + v.name);
        return out.finish(ok ? 0 : 1);
    }
    if (sub == "classify") {
        Degree2Class c = classify_degree2(v, limit);
        out.payload["class"] = to_string(c);
        out.line(v.name + ": " + to_string(c));
        return out.finish(0);
    }
    if (sub == "lambda-solve") {
        auto sol = solve_lambda_rules(v, limit);
        if (!sol) {
            out.payload["solvable"] = false;
            out.line("Empty: the pull-out rules have no solution in " + v.name);
            return out.finish(0);
        }
        out.payload["solvable"] = true;
        json part = json::object();
        for (const auto& [var, val] : sol->particular) part[var.str()] = field.str(val);
        out.payload["particular"] = part;
        out.payload["kernel_dimension"] = sol->kernel.size();
        std::string line = "particular:";
        for (const auto& [var, val] : sol->particular)
            if (!field.is_zero(val)) line += " " + var.str() + "=" + field.str(val);
        out.line("solvable in " + v.name);
        out.line(line);
        out.line("solution family dimension: " + std::to_string(sol->kernel.size()));
        return out.finish(0);
    }
    throw CLI::ValidationError("unknown variety subcommand " + sub);
}

template <class F>
std::vector<CoproductFactor<F>> parse_blocks(const std::string& blocks_arg) {
    std::vector<CoproductFactor<F>> factors;
    for (const auto& block : split(blocks_arg, ';'))
        factors.push_back(CoproductFactor<F>::free_factor(split(block, ',')));
    return factors;
}

void report_comparison(const ComparisonReport& rep, Output& out) {
    json degs = json::array();
    for (const auto& d : rep.degrees) {
        json jd;
        jd["weight"] = d.weight;
        jd["domain_dim"] = d.domain_dim;
        jd["codomain_dim"] = d.codomain_dim;
        jd["rank"] = d.rank;
        jd["injective"] = d.injective;
        jd["surjective"] = d.surjective;
        if (!d.kernel_witness.empty()) jd["kernel_witness"] = d.kernel_witness;
        if (!d.cokernel_witness.empty()) jd["cokernel_witness"] = d.cokernel_witness;
        degs.push_back(jd);
        std::string line = "degree " + std::to_string(d.weight) + ": domain " +
                           std::to_string(d.domain_dim) + ", codomain " +
                           std::to_string(d.codomain_dim) + ", rank " +
                           std::to_string(d.rank);
        if (!d.injective) line += " [not injective: " + d.kernel_witness + " maps to 0]";
        if (!d.surjective) line += " [not surjective: " + d.cokernel_witness + " not hit]";
        out.line(line);
    }
    out.payload["degrees"] = degs;
    out.payload["injective"] = rep.injective;
    out.payload["surjective"] = rep.surjective;
    out.line(std::string("injective: ") + (rep.injective ? "yes" : "no") +
             ", surjective: " + (rep.surjective ? "yes" : "no"));
}

template <class F>
int run_cosmash_report(F field, const std::string& vname, const std::string& blocks_arg,
                       int degree, const std::string& map, std::size_t limit, Output& out) {
    VarietyPresentation<F> v = load_variety(vname, field);
    auto factors = parse_blocks<F>(blocks_arg);
    if (map.empty()) {
        auto cos = cosmash_product(v, factors, degree, limit);
        json dims = json::object();
        for (const auto& [w, d] : cos.dim_by_weight()) dims[std::to_string(w)] = d;
        out.payload["dimension"] = cos.dim();
        out.payload["dims_by_weight"] = dims;
        out.line("cosmash dimension " + std::to_string(cos.dim()) + " at degree <= " +
                 std::to_string(degree));
        for (const auto& [w, d] : cos.dim_by_weight())
            out.line("  degree " + std::to_string(w) + ": " + std::to_string(d));
        json elems = json::array();
        for (std::size_t i = 0; i < cos.dim(); ++i)
            elems.push_back(print_expression(cos.element(i)));
        out.payload["kernel"] = elems;
        return out.finish(0);
    }
    if (factors.size() != 3)
        throw CLI::ValidationError("--map needs exactly three blocks");
    auto names = [&](std::size_t i) {
        std::vector<std::string> out_names;
        for (const auto& g : factors[i].gens) out_names.push_back(g.str());
        return out_names;
    };
    ComparisonReport rep;
    if (map == "phi")
        rep = comparison_phi(v, names(0), names(1), names(2), degree, limit);
    else if (map == "psi")
        rep = comparison_psi(v, names(0), names(1), names(2), degree, limit);
    else
        throw CLI::ValidationError("--map must be phi or psi");
    out.payload["map"] = map;
    report_comparison(rep, out);
    return out.finish(0);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cosmash-product and rewriting toolkit"};
    app.require_subcommand(1);

    std::string field_spec = "q";
    std::string order_spec = "degrevlex";
    std::string variety_name = "mag";
    std::string system_file;
    std::string assign_arg, mu_file, expect_str, out_file, identity_expr, blocks, map_kind,
        ambient_arg;
    std::size_t budget = static_cast<std::size_t>(-1);
    std::size_t limit = 20000;
    int degree = 3;
    bool as_json = false, check_appendix = false, do_swap = false, do_lift = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "emit a JSON result block");
        cmd->add_option("--out", out_file, "write the result block to a file");
    };

    auto* gen = app.add_subcommand("gen-eqs", "generate the 96-equation system");
    gen->add_flag("--check-appendix", check_appendix, "compare against the embedded fixture");
    std::string dump_file;
    gen->add_option("--dump", dump_file, "write the full system JSON to a file");
    add_common(gen);

    auto* gcd_cmd = app.add_subcommand("gcd-check", "gcd of the two certificate integers");
    add_common(gcd_cmd);

    auto* gb = app.add_subcommand("groebner", "reduced Groebner basis of an ideal");
    gb->add_option("file", system_file, "ideal JSON (defaults to the 96-equation system)");
    gb->add_option("--field", field_spec, "q or fp:<p>");
    gb->add_option("--order", order_spec, "degrevlex or lex");
    gb->add_option("--budget", budget, "S-pair reduction budget");
    gb->add_flag("--swap-delta", do_swap, "swap delta3 and delta4 first");
    add_common(gb);

    auto* inc = app.add_subcommand("inconsistency", "check that the reduced basis is {1}");
    inc->add_option("file", system_file, "ideal JSON (defaults to the 96-equation system)");
    inc->add_option("--field", field_spec)->required();
    inc->add_option("--order", order_spec);
    inc->add_option("--budget", budget);
    inc->add_flag("--swap-delta", do_swap);
    add_common(inc);

    auto* ev = app.add_subcommand("eval-assignment", "evaluate all 96 equations");
    ev->add_option("--assign", assign_arg, "assignment JSON (file or inline)")->required();
    ev->add_option("--field", field_spec);
    ev->add_option("file", system_file);
    ev->add_flag("--swap-delta", do_swap);
    add_common(ev);

    auto* cert = app.add_subcommand("certificate", "verify or produce a cofactor certificate");
    cert->add_option("--mu", mu_file, "certificate JSON with cofactors");
    cert->add_option("--expect", expect_str, "expected integer (decimal)");
    cert->add_flag("--lift", do_lift, "lift 1 from the system over Q (budgeted)");
    cert->add_option("--budget", budget);
    cert->add_option("file", system_file);
    cert->add_flag("--swap-delta", do_swap);
    std::string save_file;
    cert->add_option("--save", save_file, "write the lifted certificate JSON here");
    add_common(cert);

    auto* var = app.add_subcommand("variety", "identity oracle and classifications");
    std::string var_sub;
    var->add_option("sub", var_sub, "check-identity | classify | lambda-solve | multilinearise")
        ->required();
    std::string var_expr;
    var->add_option("expression", var_expr, "polynomial expression when applicable");
    var->add_option("--variety", variety_name, "builtin name or variety file");
    var->add_option("--field", field_spec);
    var->add_option("--limit", limit, "enumeration row limit");
    add_common(var);

    auto* cos = app.add_subcommand("cosmash", "cosmash products and comparison maps");
    std::string cos_sub;
    cos->add_option("sub", cos_sub, "report | independence | quaternary")->required();
    std::vector<std::string> cos_monos;
    cos->add_option("monomials", cos_monos, "monomials for the independence check");
    cos->add_option("--variety", variety_name);
    cos->add_option("--field", field_spec);
    cos->add_option("--degree", degree, "truncation degree");
    cos->add_option("--blocks", blocks, "factor blocks, e.g. 'a;b;c'");
    cos->add_option("--map", map_kind, "phi or psi (with report)");
    cos->add_option("--ambient", ambient_arg, "ambient generators for independence, e.g. 'a,b,c'");
    cos->add_option("--limit", limit);
    add_common(cos);

    auto* ca = app.add_subcommand("ca", "commutative associative coproduct checks");
    std::string ca_sub;
    ca->add_option("sub", ca_sub, "tensor-check | closure-check")->required();
    std::vector<std::string> ca_files;
    ca->add_option("algebras", ca_files, "structure-constant JSON files (two or three)");
    ca->add_option("--identity", identity_expr, "extra identity for closure-check");
    ca->add_option("--field", field_spec);
    add_common(ca);

    auto* hig = app.add_subcommand("higgins", "Higgins commutator of subalgebras");
    std::string ambient_file;
    std::vector<std::string> block_specs;
    hig->add_option("--ambient", ambient_file, "ambient algebra JSON")->required();
    hig->add_option("--block", block_specs, "basis indices spanning one subobject, e.g. 0,1")
        ->required();
    hig->add_option("--degree", degree);
    hig->add_option("--field", field_spec);
    add_common(hig);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Output out;
    out.as_json = as_json;
    out.out_path = out_file;

    try {
        if (gen->parsed()) return cmd_gen_eqs(check_appendix, out, dump_file);
        if (gcd_cmd->parsed()) return cmd_gcd_check(out);
        if (gb->parsed())
            return with_field(field_spec, [&](auto field) {
                return run_groebner(field, system_file, do_swap, MonomialOrder::parse(order_spec),
                                    budget, false, out);
            });
        if (inc->parsed())
            return with_field(field_spec, [&](auto field) {
                return run_groebner(field, system_file, do_swap, MonomialOrder::parse(order_spec),
                                    budget, true, out);
            });
        if (ev->parsed())
            return with_field(field_spec, [&](auto field) {
                return run_eval_assignment(field, assign_arg, system_file, do_swap, out);
            });
        if (cert->parsed()) {
            if (do_lift) return cmd_certificate_lift(budget, system_file, do_swap, save_file, out);
            if (mu_file.empty())
                throw CLI::ValidationError("certificate needs --mu or --lift");
            return cmd_certificate_verify(mu_file, expect_str, system_file, do_swap, out);
        }
        if (var->parsed())
            return with_field(field_spec, [&](auto field) {
                return run_variety_sub(field, var_sub, variety_name, var_expr, limit, out);
            });
        if (cos->parsed()) {
            if (cos_sub == "report")
                return with_field(field_spec, [&](auto field) {
                    return run_cosmash_report(field, variety_name, blocks, degree, map_kind,
                                              limit, out);
                });
            if (cos_sub == "independence")
                return with_field(field_spec, [&](auto field) {
                    auto v = load_variety(variety_name, field);
                    std::vector<MagmaMonomial> monos;
                    for (const auto& s : cos_monos) monos.push_back(parse_monomial(s));
                    auto r = independence_check(v, monos, split(ambient_arg, ','), degree, limit);
                    out.payload["independent"] = r.independent;
                    if (!r.independent) {
                        out.payload["witness"] = print_expression(r.witness);
                        out.line("dependent; witness: " + print_expression(r.witness));
                    } else {
                        out.line("independent");
                    }
                    return out.finish(r.independent ? 0 : 1);
                });
            if (cos_sub == "quaternary")
                return with_field(field_spec, [&](auto field) {
                    auto v = load_variety(variety_name, field);
                    auto rep = comparison_quaternary(v, {"a"}, {"b"}, {"c"}, {"d"}, degree, limit);
                    out.payload["map"] = "quaternary";
                    report_comparison(rep, out);
                    return out.finish(0);
                });
            throw CLI::ValidationError("unknown cosmash subcommand " + cos_sub);
        }
        if (ca->parsed())
            return with_field(field_spec, [&](auto field) {
                using F = decltype(field);
                std::vector<FDAlgebra<F>> algs;
                for (const auto& f : ca_files)
                    algs.push_back(FDAlgebra<F>::from_json(parse_json_arg(f), field));
                if (ca_sub == "tensor-check") {
                    if (algs.size() == 2) {
                        bool ok = ca_cosmash_tensor_check(algs[0], algs[1]);
                        out.payload["isomorphic"] = ok;
                        out.line(ok ? "A <> B = A (x) B verified" : "tensor check FAILED");
                        return out.finish(ok ? 0 : 1);
                    }
                    if (algs.size() == 3) {
                        std::size_t dim = ca_ternary_kernel_dimension(algs[0], algs[1], algs[2]);
                        std::size_t expected = static_cast<std::size_t>(algs[0].dim()) *
                                               algs[1].dim() * algs[2].dim();
                        out.payload["kernel_dimension"] = dim;
                        out.payload["expected"] = expected;
                        out.line("ternary kernel dimension " + std::to_string(dim) +
                                 " (expected " + std::to_string(expected) + ")");
                        return out.finish(dim == expected ? 0 : 1);
                    }
                    throw CLI::ValidationError("tensor-check takes two or three algebras");
                }
                if (ca_sub == "closure-check") {
                    if (algs.size() != 2 || identity_expr.empty())
                        throw CLI::ValidationError(
                            "closure-check takes --identity and two algebras");
                    bool ok = closure_check(parse_expression<F>(identity_expr, field), algs[0],
                                            algs[1]);
                    out.payload["closed"] = ok;
                    out.line(ok ? "the coproduct satisfies the identity"
                                : "closure FAILED: the coproduct breaks the identity");
                    return out.finish(ok ? 0 : 1);
                }
                throw CLI::ValidationError("unknown ca subcommand " + ca_sub);
            });
        if (hig->parsed())
            return with_field(field_spec, [&](auto field) {
                using F = decltype(field);
                auto amb = FDAlgebra<F>::from_json(parse_json_arg(ambient_file), field);
                std::vector<std::vector<std::vector<typename F::Scalar>>> blocks_v;
                for (const auto& spec : block_specs) {
                    std::vector<std::vector<typename F::Scalar>> vecs;
                    for (const auto& idx : split(spec, ','))
                        vecs.push_back(amb.unit_vector(std::stoi(idx)));
                    blocks_v.push_back(std::move(vecs));
                }
                auto r = higgins_commutator(amb, blocks_v, degree);
                out.payload["dimension"] = r.basis.size();
                out.payload["exact"] = r.exact;
                out.line("commutator dimension " + std::to_string(r.basis.size()) +
                         (r.exact ? " (exact)" : " (approximate at the bound)"));
                return out.finish(0);
            });
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const limit_exceeded_error& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
