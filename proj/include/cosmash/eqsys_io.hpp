#ifndef COSMASH_EQSYS_IO_HPP
#define COSMASH_EQSYS_IO_HPP

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cosmash/eqsys.hpp"

namespace cosmash {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw error("cannot write " + path);
    out << content;
}

inline nlohmann::json equation_system_to_json(const EquationSystem& sys) {
    nlohmann::json j;
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& v : rule_indeterminates()) vars.push_back(v.str());
    j["indeterminates"] = vars;
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& e : sys.equations) eqs.push_back(commpoly_to_json(e));
    j["equations"] = eqs;
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : sys.blocks) {
        const Recipe& r = equation_recipes()[b.recipe_index];
        nlohmann::json jb;
        jb["first"] = b.first_index;
        jb["last"] = b.last_index;
        jb["p"] = r.p;
        jb["lhs"] = r.lhs;
        jb["rhs"] = r.rhs;
        nlohmann::json support = nlohmann::json::array();
        for (const auto& m : b.support) support.push_back(m.str());
        jb["support"] = support;
        blocks.push_back(jb);
    }
    j["blocks"] = blocks;
    return j;
}

// Generic ideal files reuse the polynomial records: {"equations": [...]}.
template <class R>
std::vector<CommPolynomial<R>> equations_from_json(const nlohmann::json& j, R ring = R{}) {
    std::vector<CommPolynomial<R>> out;
    const nlohmann::json& eqs = j.contains("equations") ? j.at("equations") : j;
    for (const auto& e : eqs) {
        if (e.is_string())
            out.push_back(parse_commpoly<R>(e.template get<std::string>(), ring));
        else
            out.push_back(commpoly_from_json<R>(e, ring));
    }
    return out;
}

// Assignment JSON: an object of sixteen named scalars, e.g. {"a1": "1", ...};
// missing names default to zero only when allow_partial is set.
template <class F>
std::map<Indeterminate, typename F::Scalar> assignment_from_json(const nlohmann::json& j,
                                                                 F field,
                                                                 bool allow_partial = true) {
    std::map<Indeterminate, typename F::Scalar> out;
    if (allow_partial)
        for (const auto& v : rule_indeterminates()) out[v] = field.zero();
    for (const auto& [name, value] : j.items()) {
        typename F::Scalar s = value.is_string()
                                   ? field.parse(value.template get<std::string>())
                                   : field.from_long(value.template get<long>());
        out[parse_indeterminate_name(name)] = s;
    }
    return out;
}

// Certificate file: {"mu": [96 polynomial records or strings], "expected": "<decimal>"}.
struct CertificateFile {
    std::vector<IntPoly> mu;
    Integer expected;
};

inline CertificateFile certificate_from_json(const nlohmann::json& j) {
    CertificateFile out;
    for (const auto& e : j.at("mu")) {
        if (e.is_string())
            out.mu.push_back(parse_commpoly<IntegerRing>(e.template get<std::string>()));
        else
            out.mu.push_back(commpoly_from_json<IntegerRing>(e));
    }
    out.expected = Integer::parse(j.at("expected").template get<std::string>());
    return out;
}

inline nlohmann::json certificate_to_json(const std::vector<IntPoly>& mu,
                                          const Integer& expected) {
    nlohmann::json j;
    nlohmann::json jmu = nlohmann::json::array();
    for (const auto& m : mu) jmu.push_back(commpoly_to_json(m));
    j["mu"] = jmu;
    j["expected"] = expected.str();
    return j;
}

} // namespace cosmash

#endif
