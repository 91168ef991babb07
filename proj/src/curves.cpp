#include "derivkernel/curves.hpp"

#include "derivkernel/errors.hpp"

namespace dk {

namespace {

std::string hyper_var(int i) { return "a" + std::to_string(i); }

std::string ternary_var(int i, int j) {
    return "a" + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace

HyperCoeffSpace HyperCoeffSpace::make(int d) {
    if (d < 1) throw DomainError("degree must be >= 1");
    std::vector<std::string> names;
    names.reserve(d + 1);
    for (int i = 0; i <= d; ++i) names.push_back(hyper_var(i));
    return HyperCoeffSpace{d, VarSet::create(std::move(names))};
}

std::vector<long> HyperCoeffSpace::weights() const {
    std::vector<long> w(vars->size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = var_weight(i);
    return w;
}

Derivation weitzenbock(int d) {
    HyperCoeffSpace s = HyperCoeffSpace::make(d);
    std::vector<Polynomial> images;
    images.reserve(d + 1);
    images.push_back(Polynomial::zero(s.vars));
    for (int i = 1; i <= d; ++i)
        images.push_back(Polynomial::variable(s.vars, i - 1) * Rational(i));
    return Derivation(s.vars, std::move(images), "D" + std::to_string(d));
}

Derivation euler_weight(int d) {
    HyperCoeffSpace s = HyperCoeffSpace::make(d);
    std::vector<Polynomial> images;
    images.reserve(d + 1);
    for (int i = 0; i <= d; ++i)
        images.push_back(Polynomial::variable(s.vars, i) * Rational(d - i));
    return Derivation(s.vars, std::move(images), "E" + std::to_string(d));
}

long monomial_weight(const Monomial& m, int d) {
    long w = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        w += static_cast<long>(m[i]) * (d - static_cast<long>(i));
    return w;
}

TernaryCoeffSpace TernaryCoeffSpace::make(int d) {
    if (d < 1) throw DomainError("degree must be >= 1");
    std::vector<std::string> names;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) names.push_back(ternary_var(i, j));
    return TernaryCoeffSpace{d, VarSet::create(std::move(names))};
}

std::size_t TernaryCoeffSpace::index(int i, int j) const {
    if (i < 0 || j < 0 || i + j > d) throw DomainError("ternary index out of range");
    auto idx = vars->index(ternary_var(i, j));
    return *idx;
}

std::pair<int, int> TernaryCoeffSpace::exponents(std::size_t index) const {
    std::size_t k = 0;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j, ++k)
            if (k == index) return {i, j};
    throw DomainError("ternary variable index out of range");
}

Polynomial TernaryCoeffSpace::generic_form(const VarSetPtr& universe) const {
    auto x = universe->index("x"), y = universe->index("y"), z = universe->index("z");
    if (!x || !y || !z) throw VarsetError("universe must contain x, y, z");
    Polynomial u(universe);
    for (int i = 0; i <= d; ++i) {
        for (int j = 0; i + j <= d; ++j) {
            auto a = universe->index(ternary_var(i, j));
            if (!a) throw VarsetError("universe missing " + ternary_var(i, j));
            Monomial m(universe->size(), 0);
            m[*a] = 1;
            m[*x] = static_cast<unsigned>(d - i - j);
            m[*y] = static_cast<unsigned>(i);
            m[*z] = static_cast<unsigned>(j);
            u.add_term(m, multiplier(i, j));
        }
    }
    return u;
}

VarSetPtr VectorField3::xyz_vars() {
    static VarSetPtr vars = VarSet::create({"x", "y", "z"});
    return vars;
}

VectorField3 VectorField3::linear(long c, const std::string& from, const std::string& to) {
    VarSetPtr vars = xyz_vars();
    Polynomial zero = Polynomial::zero(vars);
    VectorField3 vf{zero, zero, zero};
    Polynomial img = Polynomial::variable(vars, *vars->index(from)) * Rational(c);
    if (to == "x")
        vf.px = img;
    else if (to == "y")
        vf.py = img;
    else if (to == "z")
        vf.pz = img;
    else
        throw DomainError("vector field component must be x, y or z");
    return vf;
}

Derivation induce_coefficient_derivation(const VectorField3& vf, const TernaryCoeffSpace& space) {
    // Work over the combined universe {a_{i,j}} + {x, y, z}.
    std::vector<std::string> names = space.vars->names();
    names.insert(names.end(), {"x", "y", "z"});
    VarSetPtr universe = VarSet::create(std::move(names));

    Polynomial u = space.generic_form(universe);

    std::vector<Polynomial> xyz_images(universe->size(), Polynomial::zero(universe));
    xyz_images[*universe->index("x")] = vf.px.lift(universe);
    xyz_images[*universe->index("y")] = vf.py.lift(universe);
    xyz_images[*universe->index("z")] = vf.pz.lift(universe);
    Derivation motion(universe, std::move(xyz_images));

    Polynomial moved = motion.apply(u);

    // Collect the coefficient polynomial of each form monomial x^a y^i z^j.
    std::size_t xi = *universe->index("x"), yi = *universe->index("y"), zi = *universe->index("z");
    std::vector<Polynomial> images(space.vars->size(), Polynomial::zero(space.vars));
    std::vector<Polynomial> grouped(space.vars->size(), Polynomial::zero(universe));
    for (const auto& [m, c] : moved.terms()) {
        unsigned ex = m[xi], ey = m[yi], ez = m[zi];
        if (ex + ey + ez != static_cast<unsigned>(space.d))
            throw DomainError("vector field does not preserve the form degree");
        Monomial rest = m;
        rest[xi] = rest[yi] = rest[zi] = 0;
        grouped[space.index(static_cast<int>(ey), static_cast<int>(ez))].add_term(rest, c);
    }
    // Projection back onto the coefficient varset; x, y, z never occur in the
    // grouped coefficients, so their (zero) images are never used.
    std::vector<Polynomial> project;
    project.reserve(universe->size());
    for (std::size_t v = 0; v < universe->size(); ++v) {
        auto idx = space.vars->index(universe->name(v));
        project.push_back(idx ? Polynomial::variable(space.vars, *idx)
                              : Polynomial::zero(space.vars));
    }
    for (std::size_t k = 0; k < space.vars->size(); ++k) {
        if (grouped[k].is_zero()) continue;
        auto [i, j] = space.exponents(k);
        images[k] = (grouped[k] * (-space.multiplier(i, j).inverse()))
                        .substitute(space.vars, project);
    }
    return Derivation(space.vars, std::move(images));
}

Gl3Derivations gl3_derivations(int d) {
    TernaryCoeffSpace space = TernaryCoeffSpace::make(d);
    struct Spec {
        const char* name;
        const char* from;
        const char* to;
    };
    static const Spec specs[] = {
        {"D1", "y", "x"}, {"D2", "z", "y"}, {"D3", "z", "x"},
        {"DH1", "x", "y"}, {"DH2", "y", "z"}, {"DH3", "x", "z"},
        {"E1", "x", "x"}, {"E2", "y", "y"}, {"E3", "z", "z"},
    };
    Gl3Derivations out{space, {}, {}};
    for (const Spec& s : specs) {
        VectorField3 vf = VectorField3::linear(-1, s.from, s.to);
        out.all.push_back(induce_coefficient_derivation(vf, space).with_name(s.name));
        out.fields.push_back(vf);
    }
    return out;
}

const Derivation& Gl3Derivations::by_name(const std::string& name) const {
    for (const auto& d : all)
        if (d.name() == name) return d;
    throw DomainError("no such derivation: " + name);
}

Polynomial CoeffEmbedding::coefficient(std::size_t ternary_index, const VarSetPtr& target) const {
    const VarBinding& b = bindings[ternary_index];
    if (b.pinned()) return Polynomial::constant(target, std::get<Rational>(b.v));
    auto sv = std::get<VarBinding::SignedVar>(b.v);
    auto idx = target->index(free_vars->name(sv.index));
    if (!idx) throw VarsetError("target varset missing " + free_vars->name(sv.index));
    return Polynomial::variable(target, *idx) * Rational(static_cast<long>(sv.sign));
}

CurveCase curve_case_from_name(const std::string& name) {
    if (name == "i") return CurveCase::GeneralI;
    if (name == "ii") return CurveCase::GeneralII;
    if (name == "cprime") return CurveCase::CPrimeFull;
    if (name == "cprime-g0") return CurveCase::CPrimeTranslations;
    throw DomainError("unknown curve case: " + name);
}

std::string curve_case_name(CurveCase c) {
    switch (c) {
        case CurveCase::GeneralI: return "i";
        case CurveCase::GeneralII: return "ii";
        case CurveCase::CPrimeFull: return "cprime";
        case CurveCase::CPrimeTranslations: return "cprime-g0";
    }
    throw DomainError("unknown curve case");
}

namespace {

// The C'_d coefficient embedding. Free variables (in order): a2_{d-2},
// a1_0..a1_{d-1}, a0_0..a0_d for the full family; the translation-normalized
// family pins a2_{d-2} = 1 and a0_0 = 1. The a0 row carries sign -1: the
// x-polynomial sits on the other side of the equation from the y-terms.
CoeffEmbedding cprime_embedding(int d, bool normalized) {
    if (d < 3) throw DomainError("C' family needs degree >= 3");
    TernaryCoeffSpace space = TernaryCoeffSpace::make(d);

    std::vector<std::string> free_names;
    if (!normalized) free_names.push_back("a2_" + std::to_string(d - 2));
    for (int i = 0; i < d; ++i) free_names.push_back("a1_" + std::to_string(i));
    for (int j = normalized ? 1 : 0; j <= d; ++j)
        free_names.push_back("a0_" + std::to_string(j));
    VarSetPtr free_vars = VarSet::create(free_names);

    std::vector<VarBinding> bindings(space.vars->size(), VarBinding::pin(Rational(0)));
    auto bind = [&](int i, int j, const std::string& name, int sign) {
        bindings[space.index(i, j)] = VarBinding::var(*free_vars->index(name), sign);
    };
    if (normalized) {
        bindings[space.index(2, d - 2)] = VarBinding::pin(Rational(1));
        bindings[space.index(0, 0)] = VarBinding::pin(Rational(-1));
    } else {
        bind(2, d - 2, "a2_" + std::to_string(d - 2), 1);
        bind(0, 0, "a0_0", -1);
    }
    for (int i = 0; i < d; ++i) bind(1, i, "a1_" + std::to_string(i), 1);
    for (int j = 1; j <= d; ++j) bind(0, j, "a0_" + std::to_string(j), -1);

    return CoeffEmbedding{space, free_vars, std::move(bindings)};
}

CoeffEmbedding identity_embedding(const TernaryCoeffSpace& space) {
    std::vector<VarBinding> bindings;
    for (std::size_t i = 0; i < space.vars->size(); ++i) bindings.push_back(VarBinding::var(i));
    return CoeffEmbedding{space, space.vars, std::move(bindings)};
}

}  // namespace

CurveDerivationSet curve_derivation_set(int d, CurveCase c) {
    Gl3Derivations gl3 = gl3_derivations(d);
    auto pick = [&](std::initializer_list<const char*> names) {
        std::vector<Derivation> ds;
        for (const char* n : names) ds.push_back(gl3.by_name(n));
        return ds;
    };

    switch (c) {
        case CurveCase::GeneralI:
            return {c, d, gl3.space.vars, pick({"D1", "D2", "DH1", "E1", "E2"}),
                    identity_embedding(gl3.space)};
        case CurveCase::GeneralII:
            return {c, d, gl3.space.vars, pick({"D2", "D3", "DH1", "E1", "E2"}),
                    identity_embedding(gl3.space)};
        case CurveCase::CPrimeFull: {
            CoeffEmbedding emb = cprime_embedding(d, false);
            std::vector<Derivation> ds;
            for (const auto& D : pick({"D2", "D3", "DH1", "E1", "E2"}))
                ds.push_back(D.pullback(emb.free_vars, emb.bindings));
            return {c, d, emb.free_vars, std::move(ds), std::move(emb)};
        }
        case CurveCase::CPrimeTranslations: {
            CoeffEmbedding emb = cprime_embedding(d, true);
            std::vector<Derivation> ds;
            for (const auto& D : pick({"D2", "D3"}))
                ds.push_back(D.pullback(emb.free_vars, emb.bindings));
            return {c, d, emb.free_vars, std::move(ds), std::move(emb)};
        }
    }
    throw DomainError("unknown curve case");
}

}  // namespace dk
