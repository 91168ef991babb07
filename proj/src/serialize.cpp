#include "derivkernel/serialize.hpp"

#include <nlohmann/json.hpp>

#include "derivkernel/errors.hpp"
#include "derivkernel/parser.hpp"

namespace dk {

Json polynomial_to_json(const Polynomial& p) {
    Json j;
    j["vars"] = p.vars()->names();
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json term;
        term["coeff"] = c.str();
        Json exps = Json::object();
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) exps[p.vars()->name(i)] = m[i];
        term["exps"] = exps;
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j;
}

Polynomial polynomial_from_json(const Json& j) {
    VarSetPtr vars = VarSet::create(j.at("vars").get<std::vector<std::string>>());
    Polynomial p(vars);
    for (const auto& term : j.at("terms")) {
        Rational c = Rational::parse(term.at("coeff").get<std::string>());
        Monomial m(vars->size(), 0);
        for (const auto& [name, e] : term.at("exps").items()) {
            auto idx = vars->index(name);
            if (!idx) throw DomainError("exponent for unknown variable: " + name);
            m[*idx] = e.get<unsigned>();
        }
        p.add_term(m, c);
    }
    return p;
}

Json derivation_to_json(const Derivation& d) {
    Json j;
    j["name"] = d.name();
    j["vars"] = d.vars()->names();
    Json images = Json::object();
    for (std::size_t i = 0; i < d.vars()->size(); ++i)
        if (!d.image(i).is_zero()) images[d.vars()->name(i)] = d.image(i).str();
    j["images"] = images;
    return j;
}

Derivation derivation_from_json(const Json& j) {
    VarSetPtr vars = VarSet::create(j.at("vars").get<std::vector<std::string>>());
    std::map<std::string, Polynomial> images;
    for (const auto& [name, text] : j.at("images").items())
        images.emplace(name, parse_polynomial(text.get<std::string>(), vars));
    std::string name = j.value("name", "");
    return Derivation(vars, std::move(images), std::move(name));
}

Json curve_to_json(const HyperCurve& c) {
    Json j;
    j["d"] = c.d;
    Json coeffs = Json::array();
    for (const auto& x : c.coeffs) coeffs.push_back(x.str());
    j["coeffs"] = coeffs;
    return j;
}

HyperCurve curve_from_json(const Json& j) {
    int d = j.at("d").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& x : j.at("coeffs")) coeffs.push_back(Rational::parse(x.get<std::string>()));
    return HyperCurve::make(d, std::move(coeffs));
}

Json moduli_to_json(const ModuliVector& m) {
    Json j;
    j["d"] = m.d;
    Json vals = Json::array();
    for (const auto& x : m.j) vals.push_back(x.str());
    j["j"] = vals;
    return j;
}

ModuliVector moduli_from_json(const Json& j) {
    ModuliVector m{j.at("d").get<int>(), {}};
    for (const auto& x : j.at("j")) m.j.push_back(Rational::parse(x.get<std::string>()));
    if (m.j.size() != static_cast<std::size_t>(m.d) - 1)
        throw DomainError("moduli vector must hold j_2..j_d");
    return m;
}

Json report_to_json(const KernelReport& r) {
    Json j;
    Json basis = Json::array();
    for (const auto& p : r.basis) basis.push_back(p.str());
    j["basis"] = basis;
    Json flags = Json::object();
    for (const auto& [name, ok] : r.in_kernel) flags[name] = ok;
    j["in_kernel"] = flags;
    j["jacobian_rank"] = r.jacobian_rank;
    if (r.bound)
        j["bound"] = *r.bound;
    else
        j["bound"] = nullptr;
    return j;
}

}  // namespace dk
