// Command-line surface over the derivation-kernel library. Exit codes:
// 0 success / check passed, 1 check failed, 2 usage error, 3 parse error,
// 4 math-domain error (inconsistent specialization, non-monic input, ...).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "derivkernel/curves.hpp"
#include "derivkernel/derivation.hpp"
#include "derivkernel/errors.hpp"
#include "derivkernel/invariants.hpp"
#include "derivkernel/kernelsearch.hpp"
#include "derivkernel/parser.hpp"
#include "derivkernel/serialize.hpp"
#include "derivkernel/transform.hpp"

namespace {

using dk::Json;

struct Options {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

void emit(const Options& opts, const Json& j, const std::string& text) {
    if (opts.json())
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

Json parse_json_arg(const std::string& arg) {
    std::string payload = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw dk::DomainError("cannot open file: " + arg.substr(1));
        std::ostringstream buf;
        buf << in.rdbuf();
        payload = buf.str();
    }
    try {
        return Json::parse(payload);
    } catch (const nlohmann::json::exception& e) {
        throw dk::ParseError(std::string("bad JSON: ") + e.what(), 0);
    }
}

std::vector<std::string> split_names(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// Resolves a comma-separated derivation list. Hyperelliptic names are
// D{d}/E{d}; with --case the ternary names D1..D3, DH1..DH3, E1..E3 resolve
// within the (possibly specialized) case set. Returns the derivations plus
// the varset the polynomials live over.
struct ResolvedDerivations {
    std::vector<dk::Derivation> derivations;
    dk::VarSetPtr vars;
};

ResolvedDerivations resolve_derivations(const std::string& list, std::optional<int> d,
                                        const std::string& case_name) {
    ResolvedDerivations out;
    auto names = split_names(list);
    if (names.empty()) throw dk::DomainError("empty derivation list");

    if (!case_name.empty()) {
        if (!d) throw dk::DomainError("--case requires --d");
        if (case_name == "full") {
            dk::Gl3Derivations gl3 = dk::gl3_derivations(*d);
            out.vars = gl3.space.vars;
            for (const auto& n : names) out.derivations.push_back(gl3.by_name(n));
            return out;
        }
        dk::CurveDerivationSet set = dk::curve_derivation_set(*d, dk::curve_case_from_name(case_name));
        out.vars = set.vars;
        for (const auto& n : names) {
            bool found = false;
            for (const auto& der : set.derivations) {
                if (der.name() == n) {
                    out.derivations.push_back(der);
                    found = true;
                    break;
                }
            }
            if (!found) throw dk::DomainError("derivation " + n + " is not part of case " + case_name);
        }
        return out;
    }

    // Hyperelliptic names: the digits give d.
    for (const auto& n : names) {
        if (n.size() < 2 || (n[0] != 'D' && n[0] != 'E'))
            throw dk::DomainError("unknown derivation name: " + n);
        int nd;
        try {
            nd = std::stoi(n.substr(1));
        } catch (...) {
            throw dk::DomainError("unknown derivation name: " + n);
        }
        if (d && *d != nd)
            throw dk::DomainError("derivation " + n + " does not match --d " + std::to_string(*d));
        d = nd;
        out.derivations.push_back(n[0] == 'D' ? dk::weitzenbock(nd) : dk::euler_weight(nd));
    }
    out.vars = out.derivations.front().vars();
    return out;
}

std::uint64_t jacobian_seed() {
    if (const char* env = std::getenv("DERIVKERNEL_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw dk::DomainError("DERIVKERNEL_SEED must be an unsigned integer");
        }
    }
    return dk::kDefaultJacobianSeed;
}

std::vector<std::pair<std::string, dk::Polynomial>> load_generators(const std::string& path,
                                                                    const dk::VarSetPtr& vars) {
    std::ifstream in(path);
    if (!in) throw dk::DomainError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();

    std::vector<std::string> texts;
    std::size_t first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '[') {
        for (const auto& item : Json::parse(content)) texts.push_back(item.get<std::string>());
    } else {
        std::stringstream ss(content);
        std::string line;
        while (std::getline(ss, line)) {
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            texts.push_back(line);
        }
    }
    std::vector<std::pair<std::string, dk::Polynomial>> gens;
    for (std::size_t k = 0; k < texts.size(); ++k)
        gens.emplace_back("g" + std::to_string(k + 1), dk::parse_polynomial(texts[k], vars));
    return gens;
}

int dispatch(int argc, char** argv) {
    Options opts;
    CLI::App app{"invariants of plane algebraic curves via derivation kernels"};
    app.require_subcommand(1);
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // ---- invariants ----
    auto* invariants = app.add_subcommand("invariants", "closed-form invariants");
    invariants->require_subcommand(1);
    struct {
        int d = 0;
        int i = -1;
    } inv_z;
    auto* inv_z_cmd = invariants->add_subcommand("z", "kernel generators z_i");
    inv_z_cmd->add_option("--d", inv_z.d, "curve degree")->required();
    inv_z_cmd->add_option("--i", inv_z.i, "single index");
    int inv_field_d = 0;
    auto* inv_field_cmd = invariants->add_subcommand("field", "rational invariant field generators");
    inv_field_cmd->add_option("--d", inv_field_d, "curve degree")->required();
    auto* inv_j3_cmd = invariants->add_subcommand("j3", "j-invariant of the cubic");

    // ---- derive apply ----
    auto* derive = app.add_subcommand("derive", "apply derivations");
    derive->require_subcommand(1);
    struct {
        std::string derivation, poly, case_name;
        std::optional<int> d;
    } dapply;
    auto* dapply_cmd = derive->add_subcommand("apply", "apply a derivation to an expression");
    dapply_cmd->add_option("--derivation", dapply.derivation, "derivation name or JSON file")->required();
    dapply_cmd->add_option("--poly", dapply.poly, "polynomial or rational function")->required();
    dapply_cmd->add_option("--d", dapply.d, "degree");
    dapply_cmd->add_option("--case", dapply.case_name, "curve case for ternary names");

    // ---- check ----
    auto* check = app.add_subcommand("check", "membership and invariance checks");
    check->require_subcommand(1);
    struct {
        std::string derivations, poly, case_name;
        std::optional<int> d;
    } ck;
    auto* ck_cmd = check->add_subcommand("kernel", "kernel membership");
    ck_cmd->add_option("--derivations", ck.derivations, "comma-separated names")->required();
    ck_cmd->add_option("--poly", ck.poly, "expression")->required();
    ck_cmd->add_option("--d", ck.d, "degree");
    ck_cmd->add_option("--case", ck.case_name, "curve case for ternary names");
    struct {
        std::string poly, family;
        int d = 0;
    } ci;
    auto* ci_cmd = check->add_subcommand("invariance", "substitution-oracle invariance");
    ci_cmd->add_option("--poly", ci.poly, "expression")->required();
    ci_cmd->add_option("--family", ci.family, "group family")->required();
    ci_cmd->add_option("--d", ci.d, "degree")->required();

    // ---- kernel ----
    auto* kernel = app.add_subcommand("kernel", "ansatz kernel computations");
    kernel->require_subcommand(1);
    struct {
        int d = 0;
        std::string case_name, derivations;
        unsigned degree = 0;
        std::optional<long> weight;
    } ks;
    auto* ks_cmd = kernel->add_subcommand("search", "joint kernel at bounded degree");
    ks_cmd->add_option("--d", ks.d, "degree")->required();
    ks_cmd->add_option("--case", ks.case_name, "curve case");
    ks_cmd->add_option("--derivations", ks.derivations, "explicit derivation list");
    ks_cmd->add_option("--degree", ks.degree, "ansatz degree bound")->required();
    ks_cmd->add_option("--weight", ks.weight, "isobaric weight (hyperelliptic only)");
    struct {
        int d = 0;
        std::string gens, case_name, derivations;
        std::optional<int> bound;
    } kv;
    auto* kv_cmd = kernel->add_subcommand("verify", "verify a generator file");
    kv_cmd->add_option("--gens", kv.gens, "file with one polynomial per line")->required();
    kv_cmd->add_option("--d", kv.d, "degree")->required();
    kv_cmd->add_option("--case", kv.case_name, "curve case");
    kv_cmd->add_option("--derivations", kv.derivations, "explicit derivation list");
    kv_cmd->add_option("--bound", kv.bound, "transcendence-degree bound");

    // ---- curve ----
    auto* curve = app.add_subcommand("curve", "moduli of monic curves");
    curve->require_subcommand(1);
    std::string curve_arg, curve2_arg, moduli_arg;
    auto* cm_cmd = curve->add_subcommand("moduli", "moduli vector of a curve");
    cm_cmd->add_option("--curve", curve_arg, "curve JSON or @file")->required();
    auto* cf_cmd = curve->add_subcommand("from-moduli", "reconstruct a curve");
    cf_cmd->add_option("--moduli", moduli_arg, "moduli JSON or @file")->required();
    auto* cn_cmd = curve->add_subcommand("normalize", "translate a1 to zero");
    cn_cmd->add_option("--curve", curve_arg, "curve JSON or @file")->required();
    auto* ciso_cmd = curve->add_subcommand("isomorphic", "translation isomorphism test");
    ciso_cmd->add_option("--curve", curve_arg, "curve JSON or @file")->required();
    ciso_cmd->add_option("--curve2", curve2_arg, "curve JSON or @file")->required();

    // ---- gl3 ----
    auto* gl3 = app.add_subcommand("gl3", "ternary coefficient derivations");
    gl3->require_subcommand(1);
    struct {
        int d = 0;
        std::string case_name = "full";
    } g3;
    auto* g3_cmd = gl3->add_subcommand("derivations", "list the induced derivations");
    g3_cmd->add_option("--d", g3.d, "form degree")->required();
    g3_cmd->add_option("--case", g3.case_name, "i|ii|cprime|cprime-g0|full")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // ---- execution ----
    if (*inv_z_cmd) {
        Json z = Json::object();
        std::string text;
        int lo = inv_z.i < 0 ? 2 : inv_z.i, hi = inv_z.i < 0 ? inv_z.d : inv_z.i;
        for (int i = lo; i <= hi; ++i) {
            dk::Polynomial zi = dk::z_invariant(inv_z.d, i);
            z["z" + std::to_string(i)] = zi.str();
            if (!text.empty()) text += "\n";
            text += zi.str();
        }
        emit(opts, Json{{"d", inv_z.d}, {"z", z}}, text);
        return 0;
    }
    if (*inv_field_cmd) {
        Json gens = Json::array();
        std::string text;
        for (const auto& g : dk::rational_invariant_generators(inv_field_d)) {
            gens.push_back(g.str());
            if (!text.empty()) text += "\n";
            text += g.str();
        }
        emit(opts, Json{{"d", inv_field_d}, {"generators", gens}}, text);
        return 0;
    }
    if (*inv_j3_cmd) {
        dk::RationalFunction j = dk::j_invariant_c3();
        emit(opts, Json{{"j", j.str()}}, j.str());
        return 0;
    }

    if (*dapply_cmd) {
        dk::RationalFunction result = [&] {
            if (dapply.derivation.find(".json") != std::string::npos) {
                std::string arg = dapply.derivation[0] == '@' ? dapply.derivation
                                                              : "@" + dapply.derivation;
                dk::Derivation der = dk::derivation_from_json(parse_json_arg(arg));
                return der.apply(dk::parse_rational_function(dapply.poly, der.vars()));
            }
            ResolvedDerivations r =
                resolve_derivations(dapply.derivation, dapply.d, dapply.case_name);
            return r.derivations.front().apply(dk::parse_rational_function(dapply.poly, r.vars));
        }();
        emit(opts, Json{{"result", result.str()}}, result.str());
        return 0;
    }

    if (*ck_cmd) {
        ResolvedDerivations r = resolve_derivations(ck.derivations, ck.d, ck.case_name);
        dk::RationalFunction phi = dk::parse_rational_function(ck.poly, r.vars);
        bool member = dk::in_kernel(r.derivations, phi);
        emit(opts, Json{{"in_kernel", member}}, member ? "true" : "false");
        return member ? 0 : 1;
    }
    if (*ci_cmd) {
        dk::GroupFamily fam = dk::family_from_name(ci.family);
        dk::VarSetPtr vars;
        switch (fam) {
            case dk::GroupFamily::Translations:
            case dk::GroupFamily::Scalings:
            case dk::GroupFamily::AffineX:
                vars = dk::HyperCoeffSpace::make(ci.d).vars;
                break;
            case dk::GroupFamily::CaseI:
            case dk::GroupFamily::CaseII:
                vars = dk::TernaryCoeffSpace::make(ci.d).vars;
                break;
            case dk::GroupFamily::CPrime:
                vars = dk::curve_derivation_set(ci.d, dk::CurveCase::CPrimeFull).vars;
                break;
            case dk::GroupFamily::CPrimeG0:
                vars = dk::curve_derivation_set(ci.d, dk::CurveCase::CPrimeTranslations).vars;
                break;
        }
        dk::RationalFunction phi = dk::parse_rational_function(ci.poly, vars);
        bool invariant = dk::check_invariance(phi, fam, ci.d);
        emit(opts, Json{{"invariant", invariant}}, invariant ? "true" : "false");
        return invariant ? 0 : 1;
    }

    if (*ks_cmd) {
        dk::AnsatzSpec spec;
        if (!ks.derivations.empty()) {
            ResolvedDerivations r = resolve_derivations(ks.derivations, ks.d, ks.case_name);
            spec.vars = r.vars;
            spec.derivations = r.derivations;
        } else if (!ks.case_name.empty()) {
            dk::CurveDerivationSet set =
                dk::curve_derivation_set(ks.d, dk::curve_case_from_name(ks.case_name));
            spec.vars = set.vars;
            spec.derivations = set.derivations;
        } else {
            spec.vars = dk::HyperCoeffSpace::make(ks.d).vars;
            spec.derivations = {dk::weitzenbock(ks.d)};
        }
        spec.degree = ks.degree;
        if (ks.weight) {
            dk::HyperCoeffSpace hs = dk::HyperCoeffSpace::make(ks.d);
            if (!dk::same_varset(spec.vars, hs.vars))
                throw dk::DomainError("--weight needs the hyperelliptic grading");
            spec.weight = ks.weight;
            spec.var_weights = hs.weights();
        }
        dk::KernelReport report = dk::joint_kernel(spec);
        std::string text;
        for (const auto& p : report.basis) {
            if (!text.empty()) text += "\n";
            text += p.str();
        }
        if (report.basis.empty()) text = "(empty)";
        emit(opts, dk::report_to_json(report), text);
        return 0;
    }
    if (*kv_cmd) {
        std::vector<dk::Derivation> ds;
        dk::VarSetPtr vars;
        std::optional<int> bound = kv.bound;
        if (!kv.derivations.empty()) {
            ResolvedDerivations r = resolve_derivations(kv.derivations, kv.d, kv.case_name);
            ds = r.derivations;
            vars = r.vars;
        } else {
            std::string cname = kv.case_name.empty() ? "cprime-g0" : kv.case_name;
            dk::CurveDerivationSet set =
                dk::curve_derivation_set(kv.d, dk::curve_case_from_name(cname));
            ds = set.derivations;
            vars = set.vars;
            if (!bound && (cname == "cprime" || cname == "cprime-g0")) bound = 2 * kv.d - 3;
        }
        auto gens = load_generators(kv.gens, vars);
        dk::KernelReport report = dk::verify_generator_set(gens, ds, bound, jacobian_seed());
        std::string text;
        for (const auto& [name, ok] : report.in_kernel)
            text += name + ": " + (ok ? "in kernel" : "NOT in kernel") + "\n";
        text += "jacobian rank: " + std::to_string(report.jacobian_rank);
        if (report.bound) text += " (bound " + std::to_string(*report.bound) + ")";
        emit(opts, dk::report_to_json(report), text);
        return (report.all_in_kernel() && !report.rank_exceeds_bound()) ? 0 : 1;
    }

    if (*cm_cmd) {
        dk::HyperCurve c = dk::curve_from_json(parse_json_arg(curve_arg));
        dk::ModuliVector m = dk::moduli_vector(c);
        std::string text;
        for (std::size_t k = 0; k < m.j.size(); ++k) {
            if (!text.empty()) text += "\n";
            text += "j" + std::to_string(k + 2) + " = " + m.j[k].str();
        }
        emit(opts, dk::moduli_to_json(m), text);
        return 0;
    }
    if (*cf_cmd) {
        dk::HyperCurve c = dk::curve_from_moduli(dk::moduli_from_json(parse_json_arg(moduli_arg)));
        std::string text;
        for (const auto& x : c.coeffs) text += (text.empty() ? "" : " ") + x.str();
        emit(opts, dk::curve_to_json(c), text);
        return 0;
    }
    if (*cn_cmd) {
        dk::NormalizedCurve n = dk::normalize(dk::curve_from_json(parse_json_arg(curve_arg)));
        Json j{{"curve", dk::curve_to_json(n.curve)}, {"shift", n.shift.str()}};
        std::string text;
        for (const auto& x : n.curve.coeffs) text += (text.empty() ? "" : " ") + x.str();
        text += "\nshift = " + n.shift.str();
        emit(opts, j, text);
        return 0;
    }
    if (*ciso_cmd) {
        dk::HyperCurve c1 = dk::curve_from_json(parse_json_arg(curve_arg));
        dk::HyperCurve c2 = dk::curve_from_json(parse_json_arg(curve2_arg));
        auto shift = dk::isomorphic(c1, c2);
        if (shift) {
            emit(opts, Json{{"isomorphic", true}, {"shift", shift->str()}},
                 "shift = " + shift->str());
            return 0;
        }
        emit(opts, Json{{"isomorphic", false}, {"shift", nullptr}}, "not isomorphic");
        return 1;
    }

    if (*g3_cmd) {
        Json out;
        out["case"] = g3.case_name;
        out["d"] = g3.d;
        std::vector<dk::Derivation> ds;
        if (g3.case_name == "full") {
            dk::Gl3Derivations gl3s = dk::gl3_derivations(g3.d);
            ds = gl3s.all;
            out["vars"] = gl3s.space.vars->names();
        } else {
            dk::CurveDerivationSet set =
                dk::curve_derivation_set(g3.d, dk::curve_case_from_name(g3.case_name));
            ds = set.derivations;
            out["vars"] = set.vars->names();
            // How each ternary coefficient embeds into the family: a pinned
            // constant or a signed free variable.
            Json pins = Json::object();
            Json embedding = Json::object();
            for (std::size_t k = 0; k < set.embedding.bindings.size(); ++k) {
                const dk::VarBinding& b = set.embedding.bindings[k];
                const std::string& cvar = set.embedding.space.vars->name(k);
                if (b.pinned()) {
                    pins[cvar] = std::get<dk::Rational>(b.v).str();
                } else {
                    auto sv = std::get<dk::VarBinding::SignedVar>(b.v);
                    std::string name = set.embedding.free_vars->name(sv.index);
                    embedding[cvar] = (sv.sign < 0 ? "-" : "") + name;
                }
            }
            out["pins"] = pins;
            out["embedding"] = embedding;
        }
        Json arr = Json::array();
        std::string text;
        for (const auto& der : ds) {
            arr.push_back(dk::derivation_to_json(der));
            if (!text.empty()) text += "\n";
            text += der.name() + ":";
            for (std::size_t i = 0; i < der.vars()->size(); ++i)
                if (!der.image(i).is_zero())
                    text += "\n  " + der.vars()->name(i) + " -> " + der.image(i).str();
        }
        out["derivations"] = arr;
        emit(opts, out, text);
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const dk::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const dk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
