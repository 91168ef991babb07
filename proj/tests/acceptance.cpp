// Acceptance suite: one criterion per entry, each printed as a pass/fail
// line with its runtime. Exit code = number of failed criteria.
// Usage: dkacceptance [N ...]  (default: run all)

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "derivkernel/curves.hpp"
#include "derivkernel/derivation.hpp"
#include "derivkernel/invariants.hpp"
#include "derivkernel/kernelsearch.hpp"
#include "derivkernel/matrix.hpp"
#include "derivkernel/parser.hpp"
#include "derivkernel/transform.hpp"

using namespace dk;

namespace {

struct Checker {
    bool ok = true;
    std::string first_failure;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
};

Polynomial pp(const std::string& text, const VarSetPtr& vars) {
    return parse_polynomial(text, vars);
}

bool in_span(const std::vector<Polynomial>& basis, const Polynomial& p) {
    std::map<Monomial, std::size_t> rows;
    for (const auto& q : basis)
        for (const auto& [m, c] : q.terms()) rows.emplace(m, 0);
    for (const auto& [m, c] : p.terms()) rows.emplace(m, 0);
    std::size_t r = 0;
    for (auto& [m, idx] : rows) idx = r++;
    ExactMatrix without(rows.size(), basis.size());
    ExactMatrix with(rows.size(), basis.size() + 1);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        for (const auto& [m, c] : basis[col].terms()) {
            without.at(rows.at(m), col) = c;
            with.at(rows.at(m), col) = c;
        }
    }
    for (const auto& [m, c] : p.terms()) with.at(rows.at(m), basis.size()) = c;
    return rank(with) == rank(without);
}

// --- criterion 1: z generators against the degree-5 closed forms ---------

void criterion1(Checker& c) {
    for (int d = 2; d <= 8; ++d) {
        Derivation dd = weitzenbock(d);
        Derivation ed = euler_weight(d);
        for (int i = 2; i <= d; ++i) {
            Polynomial z = z_invariant(d, i);
            c.require(dd.apply(z).is_zero(),
                      "D_" + std::to_string(d) + " does not kill z_" + std::to_string(i));
            c.require(ed.weight_eigenvalue(z) == Rational(i * (d - 1)),
                      "weight of z_" + std::to_string(i) + " at d=" + std::to_string(d));
        }
    }
    VarSetPtr v5 = HyperCoeffSpace::make(5).vars;
    c.require(z_invariant(5, 2) == pp("a2*a0 - a1^2", v5), "z2 list entry");
    c.require(z_invariant(5, 3) == pp("a3*a0^2 + 2*a1^3 - 3*a1*a2*a0", v5), "z3 list entry");
    c.require(z_invariant(5, 4) == pp("a4*a0^3 - 3*a1^4 + 6*a1^2*a2*a0 - 4*a1*a3*a0^2", v5),
              "z4 list entry");
    c.require(z_invariant(5, 5) ==
                  pp("a5*a0^4 + 4*a1^5 - 10*a1^3*a2*a0 + 10*a1^2*a3*a0^2 - 5*a1*a4*a0^3", v5),
              "z5 list entry");
}

// --- criterion 2: weight-zero field generators -----------------------------

void criterion2(Checker& c) {
    for (int d = 2; d <= 6; ++d) {
        std::vector<Derivation> ds{weitzenbock(d), euler_weight(d)};
        auto gens = rational_invariant_generators(d);
        for (std::size_t k = 0; k < gens.size(); ++k) {
            c.require(in_kernel(ds, gens[k]),
                      "generator " + std::to_string(k + 2) + " at d=" + std::to_string(d) +
                          " not in the joint kernel");
            c.require(check_invariance(gens[k], GroupFamily::AffineX, d),
                      "generator " + std::to_string(k + 2) + " at d=" + std::to_string(d) +
                          " not invariant under x -> alpha x + b");
        }
    }
}

// --- criterion 3: the cubic j-invariant and the weight erratum -------------

void criterion3(Checker& c) {
    RationalFunction j = j_invariant_c3();
    VarSetPtr vars = j.vars();
    c.require(j.num() == pp("6912*(a0*a2 - a1^2)^3", vars), "j numerator");
    Polynomial quartic =
        pp("4*a1^3*a3 - 6*a3*a0*a1*a2 - 3*a1^2*a2^2 + a3^2*a0^2 + 4*a0*a2^3", vars);
    c.require(j.den() == pp("a0^2", vars) * quartic, "j denominator");
    c.require(weitzenbock(3).apply(j).num().is_zero(), "down-shift does not kill j");
    c.require(euler_weight(3).apply(j).num().is_zero(), "weight derivation does not kill j");
    Polynomial z2 = pp("a0*a2 - a1^2", vars);
    c.require(rf_equal(j, RationalFunction(z2.pow(3) * Rational(6912), pp("a0^2", vars) * quartic)),
              "j as 6912 z2^3 / (a0^2 T)");

    // z2^3/a0^3 has weight 3, so it fails the weight kernel; the weight-zero
    // form z2^3/a0^4 passes. Both directions asserted.
    Derivation h3 = euler_weight(3);
    Derivation d3 = weitzenbock(3);
    RationalFunction displayed(z2.pow(3), pp("a0^3", vars));
    c.require(d3.apply(displayed).num().is_zero(), "z2^3/a0^3 should survive the down-shift");
    c.require(!h3.apply(displayed).num().is_zero(), "z2^3/a0^3 should fail the weight kernel");
    c.require(rf_equal(h3.apply(displayed),
                       displayed * RationalFunction::constant(vars, Rational(3))),
              "z2^3/a0^3 should have weight eigenvalue 3");
    RationalFunction corrected(z2.pow(3), pp("a0^4", vars));
    c.require(in_kernel({d3, h3}, corrected), "z2^3/a0^4 should pass both kernels");
}

// --- criterion 4: graded kernel search reproduces the z family -------------

void criterion4(Checker& c) {
    HyperCoeffSpace s5 = HyperCoeffSpace::make(5);
    Derivation d5 = weitzenbock(5);
    AnsatzSpec cell{s5.vars, 2, 8, s5.weights(), {d5}};
    KernelReport r = joint_kernel(cell);
    c.require(r.basis.size() == 1, "degree 2 weight 8 kernel should be one-dimensional");
    if (r.basis.size() == 1) {
        c.require(in_span(r.basis, z_invariant(5, 2)) && in_span({z_invariant(5, 2)}, r.basis[0]),
                  "degree 2 weight 8 kernel should be spanned by z2");
    }
    for (int i = 3; i <= 5; ++i) {
        AnsatzSpec spec{s5.vars, static_cast<unsigned>(i), static_cast<long>(4 * i), s5.weights(),
                        {d5}};
        KernelReport ri = joint_kernel(spec);
        c.require(in_span(ri.basis, z_invariant(5, i)),
                  "z_" + std::to_string(i) + " missing from its graded search");
    }
}

// --- criterion 5: the C'_5 worked example ----------------------------------

const char* kG[] = {
    "a1_0",
    "a1_0^2*a0_2 + a1_1^2 - 2*a1_1*a1_0*a0_1",
    "a1_2 - 2*a1_1*a0_1 + a1_0*a0_2",
    "6*a1_1^2*a0_1*a1_0 - 4*a1_1^3 - 3*a1_0^2*a0_2*a1_1 - 3*a1_2*a1_0^2*a0_1"
    " + 3*a1_0*a1_1*a1_2 + a0_3*a1_0^3",
    "2*a1_1^3 - 3*a1_0*a1_1*a1_2 + a1_3*a1_0^2",
    "3*a1_0^4*a0_2^2 + a1_0^4*a0_4 - 12*a1_0^3*a1_1*a0_1*a0_2 - 4*a1_0^3*a1_1*a0_3"
    " - 4*a1_0^3*a1_3*a0_1 - 12*a1_0^3*a0_2*a1_2 + 12*a1_1^2*a1_0^2*a0_1^2"
    " + 24*a1_1^2*a1_0^2*a0_2 + 4*a1_1*a1_0^2*a1_3 + 36*a1_1*a1_0^2*a0_1*a1_2"
    " - 24*a1_0*a1_2*a1_1^2 - 48*a1_0*a1_1^3*a0_1 + 24*a1_1^4",
    "a1_0^4*a0_2^2 + a1_0^3*a1_4 - 4*a1_0^3*a1_1*a0_1*a0_2 + 6*a1_0^3*a0_2*a1_2"
    " + 4*a1_1^2*a1_0^2*a0_1^2 - 4*a1_1^2*a1_0^2*a0_2 - 12*a1_1*a1_0^2*a0_1*a1_2"
    " - 4*a1_1*a1_0^2*a1_3 + 4*a1_0^2*a0_1 - 4*a1_1*a1_0 + 12*a1_0*a1_2*a1_1^2"
    " + 8*a1_0*a1_1^3*a0_1 - 8*a1_1^4",
};

// Reference images of the specialized translation action on C'_5. A few
// entries of the published blocks carry the wrong derivation label; they
// are reattributed here by their block position.
std::map<std::string, std::string> d2_table() {
    return {{"a1_1", "0"},        {"a1_0", "0"},        {"a0_1", "-a1_0"},
            {"a1_2", "0"},        {"a0_2", "-2*a1_1"},  {"a0_3", "-3*a1_2"},
            {"a0_5", "-5*a1_4"},  {"a0_4", "-4*a1_3"},  {"a1_3", "0"},
            {"a1_4", "4"}};
}

std::map<std::string, std::string> d3_table() {
    return {{"a1_2", "2*a1_1"},   {"a1_1", "a1_0"},     {"a1_0", "0"},
            {"a0_2", "2*a0_1"},   {"a0_1", "1"},        {"a0_3", "3*a0_2"},
            {"a0_5", "5*a0_4"},   {"a0_4", "4*a0_3"},   {"a1_3", "3*a1_2"},
            {"a1_4", "4*a1_3"}};
}

bool matches_up_to_global_sign(const Derivation& d,
                               const std::map<std::string, std::string>& table) {
    for (int sign : {1, -1}) {
        bool all = true;
        for (const auto& [var, image_text] : table) {
            Polynomial expect = pp(image_text, d.vars()) * Rational(sign);
            auto idx = d.vars()->index(var);
            if (!idx || d.image(*idx) != expect) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

// Erratum protocol: reproduce a failed membership through the substitution
// oracle, then search the same-degree ansatz for the nearest passing
// replacement.
void erratum_protocol(const CurveDerivationSet& set, const std::string& name,
                      const Polynomial& g, Checker& c) {
    bool oracle_invariant = check_invariance(RationalFunction(g), GroupFamily::CPrimeG0, set.d);
    std::cerr << "  erratum: " << name << " fails membership; substitution oracle says "
              << (oracle_invariant ? "invariant (disagreement!)" : "not invariant (confirmed)")
              << "\n";
    c.require(!oracle_invariant, name + ": oracle disagrees with the derivation check");

    AnsatzSpec spec{set.vars, g.total_degree(), std::nullopt, {}, set.derivations};
    KernelReport fix = joint_kernel(spec);
    const Polynomial* best = nullptr;
    std::size_t best_shared = 0;
    for (const auto& candidate : fix.basis) {
        std::size_t shared = 0;
        for (const auto& [m, coeff] : candidate.terms())
            if (g.terms().count(m)) ++shared;
        if (best == nullptr || shared > best_shared) {
            best = &candidate;
            best_shared = shared;
        }
    }
    if (best) std::cerr << "  erratum: nearest same-degree generator: " << best->str() << "\n";
}

void criterion5(Checker& c) {
    CurveDerivationSet set = curve_derivation_set(5, CurveCase::CPrimeTranslations);
    c.require(set.derivations.size() == 2 && set.vars->size() == 10,
              "normalized C'_5 family shape");

    c.require(matches_up_to_global_sign(set.derivations[0], d2_table()),
              "specialized D2 does not match its reference table up to global sign");
    c.require(matches_up_to_global_sign(set.derivations[1], d3_table()),
              "specialized D3 does not match its reference table up to global sign");

    std::vector<std::pair<std::string, Polynomial>> gens;
    for (int k = 0; k < 7; ++k)
        gens.emplace_back("g" + std::to_string(k + 1), pp(kG[k], set.vars));

    KernelReport report = verify_generator_set(gens, set.derivations, 7, kDefaultJacobianSeed);
    for (std::size_t k = 0; k < report.in_kernel.size(); ++k) {
        const auto& [name, ok] = report.in_kernel[k];
        if (!ok) erratum_protocol(set, name, gens[k].second, c);
        c.require(ok, name + " fails joint-kernel membership");
    }
    c.require(report.jacobian_rank == 7, "jacobian rank of g1..g7 should be 7 = 2d-3, got " +
                                             std::to_string(report.jacobian_rank));
    c.require(!report.rank_exceeds_bound(), "rank exceeds the transcendence bound");
}

// --- criterion 6: moduli property suite ------------------------------------

void criterion6(Checker& c) {
    std::mt19937_64 rng(917);
    auto rnd = [&](long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    };
    auto random_rational = [&] { return Rational(rnd(-8, 8), rnd(1, 4)); };
    for (int d : {3, 4, 5}) {
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Rational> coeffs{Rational(1)};
            for (int i = 1; i <= d; ++i) coeffs.push_back(random_rational());
            HyperCurve curve = HyperCurve::make(d, coeffs);

            // Round-trip: reconstruction equals a1-normalization.
            HyperCurve rebuilt = curve_from_moduli(moduli_vector(curve));
            c.require(rebuilt.coeffs == normalize(curve).curve.coeffs,
                      "moduli round-trip mismatch at d=" + std::to_string(d));

            // Translation invariance of the moduli vector.
            Rational b = random_rational();
            HyperCurve moved =
                HyperCurve::make(d, transform_coeff_values(d, curve.coeffs, Rational(1), b));
            c.require(moduli_vector(moved) == moduli_vector(curve),
                      "moduli changed under translation at d=" + std::to_string(d));

            // isomorphic() returns a shift exactly when the moduli agree.
            auto shift = isomorphic(curve, moved);
            c.require(shift.has_value() && *shift == b,
                      "translated pair not recognized at d=" + std::to_string(d));
            if (shift) {
                HyperCurve back =
                    HyperCurve::make(d, transform_coeff_values(d, curve.coeffs, Rational(1), *shift));
                c.require(back.coeffs == moved.coeffs, "returned shift is not the witness");
            }

            HyperCurve other = curve;
            other.coeffs[2] += Rational(rnd(1, 3));
            bool same_moduli = moduli_vector(other) == moduli_vector(curve);
            c.require(isomorphic(curve, other).has_value() == same_moduli,
                      "isomorphic() disagrees with moduli equality");
        }
    }
}

// --- criterion 7: closed formula vs the substitution oracle ----------------

void criterion7(Checker& c) {
    for (int d = 1; d <= 8; ++d) {
        VarSetPtr work = affine_x_vars(d);
        std::vector<Polynomial> coeffs;
        for (int i = 0; i <= d; ++i)
            coeffs.push_back(Polynomial::variable(work, *work->index("a" + std::to_string(i))));
        auto moved = transform_coeffs_hyper(
            d, coeffs, AffineMap2::x_affine(MapParam::symbol("alpha"), MapParam::symbol("b")));
        std::size_t alpha = *work->index("alpha"), b = *work->index("b");
        std::vector<Polynomial> at_identity;
        for (std::size_t v = 0; v < work->size(); ++v) {
            if (v == alpha)
                at_identity.push_back(Polynomial::constant(work, Rational(1)));
            else if (v == b)
                at_identity.push_back(Polynomial::constant(work, Rational(0)));
            else
                at_identity.push_back(Polynomial::variable(work, v));
        }
        for (int i = 0; i <= d; ++i) {
            c.require(moved[i] == translation_formula(d, i),
                      "closed formula mismatch at d=" + std::to_string(d) +
                          ", i=" + std::to_string(i));
            Polynomial db = moved[i].derivative(b).substitute(work, at_identity);
            Polynomial da = moved[i].derivative(alpha).substitute(work, at_identity);
            Polynomial expect_db =
                i > 0 ? Polynomial::variable(work, i - 1) * Rational(i) : Polynomial::zero(work);
            c.require(db == expect_db, "d/db fact at i=" + std::to_string(i));
            c.require(da == Polynomial::variable(work, i) * Rational(d - i),
                      "d/dalpha fact at i=" + std::to_string(i));
        }
    }
}

// --- criterion 8: the nine induced derivations ------------------------------

void criterion8(Checker& c) {
    for (int d = 1; d <= 6; ++d) {
        Gl3Derivations gl3 = gl3_derivations(d);
        const TernaryCoeffSpace& s = gl3.space;

        // Total annihilation of the generic form.
        std::vector<std::string> names = s.vars->names();
        names.insert(names.end(), {"x", "y", "z"});
        VarSetPtr universe = VarSet::create(std::move(names));
        Polynomial u = s.generic_form(universe);
        for (std::size_t k = 0; k < gl3.all.size(); ++k) {
            std::vector<Polynomial> images(universe->size(), Polynomial::zero(universe));
            for (std::size_t i = 0; i < s.vars->size(); ++i)
                images[*universe->index(s.vars->name(i))] = gl3.all[k].image(i).lift(universe);
            images[*universe->index("x")] = gl3.fields[k].px.lift(universe);
            images[*universe->index("y")] = gl3.fields[k].py.lift(universe);
            images[*universe->index("z")] = gl3.fields[k].pz.lift(universe);
            Derivation total(universe, std::move(images));
            c.require(total.apply(u).is_zero(), gl3.all[k].name() + " + field does not kill the form");
        }

        // [D1, D2] = D3 up to sign.
        Derivation bracket = commutator(gl3.by_name("D1"), gl3.by_name("D2"));
        bool plus = true, minus = true;
        for (std::size_t i = 0; i < s.vars->size(); ++i) {
            if (bracket.image(i) != gl3.by_name("D3").image(i)) plus = false;
            if (bracket.image(i) != -gl3.by_name("D3").image(i)) minus = false;
        }
        c.require(plus || minus, "[D1, D2] is not D3 up to sign at d=" + std::to_string(d));

        // Closed-form images, checked exactly.
        auto var = [&](int i, int j) { return Polynomial::variable(s.vars, s.index(i, j)); };
        for (int i = 0; i <= d; ++i) {
            for (int j = 0; i + j <= d; ++j) {
                std::size_t k = s.index(i, j);
                Polynomial zero = Polynomial::zero(s.vars);
                c.require(gl3.by_name("D1").image(k) ==
                              (i > 0 ? var(i - 1, j) * Rational(i) : zero),
                          "D1 image");
                c.require(gl3.by_name("D2").image(k) ==
                              (j > 0 ? var(i + 1, j - 1) * Rational(j) : zero),
                          "D2 image");
                c.require(gl3.by_name("D3").image(k) ==
                              (j > 0 ? var(i, j - 1) * Rational(j) : zero),
                          "D3 image");
                c.require(gl3.by_name("DH1").image(k) ==
                              (i + j < d ? var(i + 1, j) * Rational(d - i - j) : zero),
                          "DH1 image");
                c.require(gl3.by_name("E2").image(k) == var(i, j) * Rational(i), "E2 image");

                // The induced diagonal action is (d - (i+j)) a_{i,j}; the
                // alternative (d - (2i+j)) reading does not kill the form.
                c.require(gl3.by_name("E1").image(k) == var(i, j) * Rational(d - i - j),
                          "derived E1 image");
            }
        }

        // The (d - (2i+j)) variant genuinely differs and fails kill-the-form.
        if (d >= 1) {
            std::vector<Polynomial> variant_images;
            bool differs = false;
            for (int i = 0; i <= d; ++i)
                for (int j = 0; i + j <= d; ++j) {
                    variant_images.push_back(var(i, j) * Rational(d - 2 * i - j));
                    if (d - 2 * i - j != d - i - j) differs = true;
                }
            // Order of construction must match the varset order.
            Derivation variant(s.vars, variant_images, "E1variant");
            c.require(differs, "variant reading should differ somewhere");
            std::vector<Polynomial> images(universe->size(), Polynomial::zero(universe));
            for (std::size_t i = 0; i < s.vars->size(); ++i)
                images[*universe->index(s.vars->name(i))] = variant.image(i).lift(universe);
            images[*universe->index("x")] =
                VectorField3::linear(-1, "x", "x").px.lift(universe);
            Derivation total(universe, std::move(images));
            c.require(!total.apply(u).is_zero(),
                      "the variant diagonal reading should not kill the form");
        }
    }
}

struct Criterion {
    int number;
    const char* label;
    double limit_seconds;
    std::function<void(Checker&)> body;
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria{
        {1, "z-kernel suite (d = 2..8) and the degree-5 closed forms", 1.0, criterion1},
        {2, "weight-zero field generators in kernel and oracle-invariant (d = 2..6)", 30.0,
         criterion2},
        {3, "cubic j-invariant, both kernels, and the weight-zero erratum", 1.0, criterion3},
        {4, "graded kernel search reproduces z2..z5", 10.0, criterion4},
        {5, "C'_5: regenerated tables, g1..g7 membership, jacobian rank 7", 60.0, criterion5},
        {6, "moduli round-trip, translation invariance, isomorphism (300 curves)", 30.0,
         criterion6},
        {7, "closed translation formula vs the substitution oracle (d <= 8)", 10.0, criterion7},
        {8, "induced gl3 derivations: kill-the-form, brackets, closed forms", 30.0, criterion8},
    };

    std::vector<int> selected;
    for (int k = 1; k < argc; ++k) selected.push_back(std::atoi(argv[k]));

    int failures = 0;
    for (const auto& crit : criteria) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), crit.number) == selected.end())
            continue;
        Checker checker;
        auto start = std::chrono::steady_clock::now();
        crit.body(checker);
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = seconds < crit.limit_seconds;
        bool pass = checker.ok && in_time;
        std::ostringstream line;
        line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << crit.number << ": " << crit.label
             << " (" << static_cast<long>(seconds * 1000) << " ms, limit "
             << static_cast<long>(crit.limit_seconds * 1000) << " ms)";
        if (!checker.ok) line << " -- " << checker.first_failure;
        if (checker.ok && !in_time) line << " -- over time limit";
        std::cout << line.str() << std::endl;
        if (!pass) ++failures;
    }
    return failures;
}
