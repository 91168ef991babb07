#include "derivkernel/transform.hpp"

#include <algorithm>
#include <set>

#include "derivkernel/errors.hpp"

namespace dk {

namespace {

bool param_is(const MapParam& p, long value) {
    return !p.symbolic() && std::get<Rational>(p.v) == Rational(value);
}

Polynomial param_poly(const MapParam& p, const VarSetPtr& vars) {
    if (p.symbolic()) {
        const std::string& name = std::get<std::string>(p.v);
        auto idx = vars->index(name);
        if (!idx) throw VarsetError("map parameter not in varset: " + name);
        return Polynomial::variable(vars, *idx);
    }
    return Polynomial::constant(vars, std::get<Rational>(p.v));
}

void collect_symbols(const MapParam& p, std::set<std::string>& out) {
    if (p.symbolic()) out.insert(std::get<std::string>(p.v));
}

VarSetPtr extend_varset(const VarSetPtr& base, const std::vector<std::string>& extra) {
    std::vector<std::string> names = base->names();
    for (const auto& n : extra)
        if (!base->index(n)) names.push_back(n);
    return VarSet::create(std::move(names));
}

}  // namespace

AffineMap2 AffineMap2::identity() {
    return {MapParam::constant(1), MapParam::constant(0), MapParam::constant(0),
            MapParam::constant(0), MapParam::constant(1), MapParam::constant(0)};
}

AffineMap2 AffineMap2::x_affine(MapParam alpha, MapParam b) {
    AffineMap2 m = identity();
    m.alpha = std::move(alpha);
    m.b = std::move(b);
    return m;
}

bool AffineMap2::fixes_y() const {
    return param_is(gamma, 0) && param_is(delta, 1) && param_is(a, 0);
}

std::vector<Polynomial> transform_coeffs_hyper(int d, const std::vector<Polynomial>& coeffs,
                                               const AffineMap2& map) {
    if (coeffs.size() != static_cast<std::size_t>(d) + 1)
        throw DomainError("expected d + 1 coefficients");
    if (!map.fixes_y() || !param_is(map.beta, 0))
        throw DomainError("shape violation: hyperelliptic transform must fix y");
    if (param_is(map.alpha, 0)) throw DomainError("singular map: alpha = 0");

    VarSetPtr base = coeffs.front().vars();
    if (base->index("x")) throw VarsetError("coefficient varset must not contain x");
    VarSetPtr universe = extend_varset(base, {"x"});
    std::size_t xi = *universe->index("x");

    Polynomial image_x = param_poly(map.alpha, universe) * Polynomial::variable(universe, xi) +
                         param_poly(map.b, universe);

    // f(x) = sum C(d,i) a_i x^(d-i), then substitute x -> image.
    Polynomial f(universe);
    for (int i = 0; i <= d; ++i) {
        Polynomial xi_pow = Polynomial::variable(universe, xi).pow(static_cast<unsigned>(d - i));
        f += coeffs[i].lift(universe) * xi_pow * binomial(d, i);
    }
    std::vector<Polynomial> subst;
    subst.reserve(universe->size());
    for (std::size_t v = 0; v < universe->size(); ++v)
        subst.push_back(v == xi ? image_x : Polynomial::variable(universe, v));
    Polynomial moved = f.substitute(universe, subst);

    // Collect by powers of x and divide the binomials back out.
    auto groups = moved.collect(xi);
    std::vector<Polynomial> project;
    project.reserve(universe->size());
    for (std::size_t v = 0; v < universe->size(); ++v) {
        auto idx = base->index(universe->name(v));
        project.push_back(idx ? Polynomial::variable(base, *idx) : Polynomial::zero(base));
    }
    std::vector<Polynomial> out;
    out.reserve(d + 1);
    for (int i = 0; i <= d; ++i) {
        auto it = groups.find(static_cast<unsigned>(d - i));
        Polynomial g = it == groups.end() ? Polynomial::zero(universe) : it->second;
        out.push_back((g * binomial(d, i).inverse()).substitute(base, project));
    }
    return out;
}

std::vector<Rational> transform_coeff_values(int d, const std::vector<Rational>& coeffs,
                                             const Rational& alpha, const Rational& b) {
    VarSetPtr empty = VarSet::create({});
    std::vector<Polynomial> cp;
    cp.reserve(coeffs.size());
    for (const auto& c : coeffs) cp.push_back(Polynomial::constant(empty, c));
    auto moved = transform_coeffs_hyper(
        d, cp, AffineMap2::x_affine(MapParam::constant(alpha), MapParam::constant(b)));
    std::vector<Rational> out;
    out.reserve(moved.size());
    for (const auto& p : moved) out.push_back(p.constant_value());
    return out;
}

std::vector<Polynomial> transform_coeffs_ternary(const TernaryCoeffSpace& space,
                                                 const std::vector<Polynomial>& coeffs,
                                                 const AffineMap2& map) {
    if (coeffs.size() != space.vars->size())
        throw DomainError("expected one coefficient per ternary variable");
    if (!map.alpha.symbolic() && !map.beta.symbolic() && !map.gamma.symbolic() &&
        !map.delta.symbolic()) {
        Rational det = std::get<Rational>(map.alpha.v) * std::get<Rational>(map.delta.v) -
                       std::get<Rational>(map.beta.v) * std::get<Rational>(map.gamma.v);
        if (det.is_zero()) throw DomainError("singular map: zero determinant");
    }
    VarSetPtr base = coeffs.front().vars();
    for (const char* n : {"x", "y", "z"})
        if (base->index(n)) throw VarsetError("coefficient varset must not contain x, y, z");
    VarSetPtr universe = extend_varset(base, {"x", "y", "z"});
    std::size_t xi = *universe->index("x"), yi = *universe->index("y"), zi = *universe->index("z");
    Polynomial X = Polynomial::variable(universe, xi), Y = Polynomial::variable(universe, yi),
               Z = Polynomial::variable(universe, zi);

    Polynomial image_x = param_poly(map.alpha, universe) * X + param_poly(map.beta, universe) * Y +
                         param_poly(map.b, universe) * Z;
    Polynomial image_y = param_poly(map.gamma, universe) * X + param_poly(map.delta, universe) * Y +
                         param_poly(map.a, universe) * Z;

    Polynomial form(universe);
    for (int i = 0; i <= space.d; ++i) {
        for (int j = 0; i + j <= space.d; ++j) {
            Polynomial mono = X.pow(static_cast<unsigned>(space.d - i - j)) *
                              Y.pow(static_cast<unsigned>(i)) * Z.pow(static_cast<unsigned>(j));
            form += coeffs[space.index(i, j)].lift(universe) * mono * space.multiplier(i, j);
        }
    }
    std::vector<Polynomial> subst;
    subst.reserve(universe->size());
    for (std::size_t v = 0; v < universe->size(); ++v) {
        if (v == xi)
            subst.push_back(image_x);
        else if (v == yi)
            subst.push_back(image_y);
        else
            subst.push_back(Polynomial::variable(universe, v));
    }
    Polynomial moved = form.substitute(universe, subst);

    std::vector<Polynomial> grouped(space.vars->size(), Polynomial(universe));
    for (const auto& [m, c] : moved.terms()) {
        unsigned ex = m[xi], ey = m[yi], ez = m[zi];
        if (ex + ey + ez != static_cast<unsigned>(space.d))
            throw DomainError("transform does not preserve the form degree");
        Monomial rest = m;
        rest[xi] = rest[yi] = rest[zi] = 0;
        grouped[space.index(static_cast<int>(ey), static_cast<int>(ez))].add_term(rest, c);
    }

    std::vector<Polynomial> project;
    project.reserve(universe->size());
    for (std::size_t v = 0; v < universe->size(); ++v) {
        auto idx = base->index(universe->name(v));
        project.push_back(idx ? Polynomial::variable(base, *idx) : Polynomial::zero(base));
    }
    std::vector<Polynomial> out(space.vars->size(), Polynomial(base));
    for (std::size_t k = 0; k < grouped.size(); ++k) {
        auto [i, j] = space.exponents(k);
        out[k] = (grouped[k] * space.multiplier(i, j).inverse()).substitute(base, project);
    }
    return out;
}

namespace {

// first(second(.)) on the linear parts; parameters must be numeric.
Rational num(const MapParam& p) {
    if (p.symbolic()) throw DomainError("compose requires numeric maps");
    return std::get<Rational>(p.v);
}

}  // namespace

AffineMap2 compose(const AffineMap2& first, const AffineMap2& second) {
    Rational a1 = num(first.alpha), b1 = num(first.beta), t1 = num(first.b);
    Rational g1 = num(first.gamma), d1 = num(first.delta), s1 = num(first.a);
    Rational a2 = num(second.alpha), b2 = num(second.beta), t2 = num(second.b);
    Rational g2 = num(second.gamma), d2 = num(second.delta), s2 = num(second.a);
    AffineMap2 m;
    m.alpha = MapParam::constant(a1 * a2 + b1 * g2);
    m.beta = MapParam::constant(a1 * b2 + b1 * d2);
    m.b = MapParam::constant(a1 * t2 + b1 * s2 + t1);
    m.gamma = MapParam::constant(g1 * a2 + d1 * g2);
    m.delta = MapParam::constant(g1 * b2 + d1 * d2);
    m.a = MapParam::constant(g1 * t2 + d1 * s2 + s1);
    return m;
}

VarSetPtr affine_x_vars(int d) {
    std::vector<std::string> names;
    for (int i = 0; i <= d; ++i) names.push_back("a" + std::to_string(i));
    names.push_back("alpha");
    names.push_back("b");
    return VarSet::create(std::move(names));
}

Polynomial translation_formula(int d, int i) {
    if (i < 0 || i > d) throw DomainError("coefficient index out of range");
    VarSetPtr vars = affine_x_vars(d);
    std::size_t alpha = *vars->index("alpha"), b = *vars->index("b");
    Polynomial sum(vars);
    for (int k = 0; k <= i; ++k) {
        Polynomial term = Polynomial::variable(vars, i - k) *
                          Polynomial::variable(vars, b).pow(static_cast<unsigned>(k)) *
                          binomial(i, k);
        sum += term;
    }
    return Polynomial::variable(vars, alpha).pow(static_cast<unsigned>(d - i)) * sum;
}

GroupFamily family_from_name(const std::string& name) {
    if (name == "translations") return GroupFamily::Translations;
    if (name == "scalings") return GroupFamily::Scalings;
    if (name == "affine_x" || name == "affine-x") return GroupFamily::AffineX;
    if (name == "case_i" || name == "i") return GroupFamily::CaseI;
    if (name == "case_ii" || name == "ii") return GroupFamily::CaseII;
    if (name == "cprime") return GroupFamily::CPrime;
    if (name == "cprime-g0" || name == "cprime_g0") return GroupFamily::CPrimeG0;
    throw DomainError("unknown group family: " + name);
}

std::string family_name(GroupFamily f) {
    switch (f) {
        case GroupFamily::Translations: return "translations";
        case GroupFamily::Scalings: return "scalings";
        case GroupFamily::AffineX: return "affine_x";
        case GroupFamily::CaseI: return "case_i";
        case GroupFamily::CaseII: return "case_ii";
        case GroupFamily::CPrime: return "cprime";
        case GroupFamily::CPrimeG0: return "cprime-g0";
    }
    throw DomainError("unknown group family");
}

namespace {

bool check_invariance_hyper(const RationalFunction& phi, GroupFamily family, int d) {
    HyperCoeffSpace space = HyperCoeffSpace::make(d);
    if (!same_varset(phi.vars(), space.vars))
        throw VarsetError("invariant must live over the a0..a" + std::to_string(d) + " varset");

    AffineMap2 map = AffineMap2::identity();
    std::vector<std::string> params;
    switch (family) {
        case GroupFamily::Translations:
            map = AffineMap2::translation_x(MapParam::symbol("b"));
            params = {"b"};
            break;
        case GroupFamily::Scalings:
            map = AffineMap2::scaling_x(MapParam::symbol("alpha"));
            params = {"alpha"};
            break;
        case GroupFamily::AffineX:
            map = AffineMap2::x_affine(MapParam::symbol("alpha"), MapParam::symbol("b"));
            params = {"alpha", "b"};
            break;
        default:
            throw DomainError("not a hyperelliptic family");
    }
    VarSetPtr work = extend_varset(space.vars, params);

    std::vector<Polynomial> coeffs;
    coeffs.reserve(d + 1);
    for (int i = 0; i <= d; ++i)
        coeffs.push_back(Polynomial::variable(work, *work->index("a" + std::to_string(i))));
    std::vector<Polynomial> moved = transform_coeffs_hyper(d, coeffs, map);

    std::vector<Polynomial> subst;
    subst.reserve(work->size());
    for (std::size_t v = 0; v < work->size(); ++v) {
        auto orig = space.vars->index(work->name(v));
        subst.push_back(orig ? moved[*orig] : Polynomial::variable(work, v));
    }
    RationalFunction lifted = phi.lift(work);
    RationalFunction transformed(lifted.num().substitute(work, subst),
                                 lifted.den().substitute(work, subst));
    return rf_equal(transformed, lifted);
}

bool check_invariance_ternary(const RationalFunction& phi, GroupFamily family, int d) {
    CoeffEmbedding emb;
    AffineMap2 map = AffineMap2::identity();
    std::vector<std::string> params;
    switch (family) {
        case GroupFamily::CaseI:
            emb = curve_derivation_set(d, CurveCase::GeneralI).embedding;
            map.alpha = MapParam::symbol("alpha");
            map.beta = MapParam::symbol("beta");
            map.b = MapParam::symbol("b");
            map.gamma = MapParam::symbol("gamma");
            map.delta = MapParam::symbol("delta");
            map.a = MapParam::symbol("a");
            params = {"alpha", "beta", "b", "gamma", "delta", "a"};
            break;
        case GroupFamily::CaseII:
            emb = curve_derivation_set(d, CurveCase::GeneralII).embedding;
            map.alpha = MapParam::symbol("alpha");
            map.b = MapParam::symbol("b");
            map.gamma = MapParam::symbol("gamma");
            map.delta = MapParam::symbol("delta");
            map.a = MapParam::symbol("a");
            params = {"alpha", "b", "gamma", "delta", "a"};
            break;
        case GroupFamily::CPrime:
            // X -> alpha X + a Z, Y -> beta Y + bsh Z.
            emb = curve_derivation_set(d, CurveCase::CPrimeFull).embedding;
            map.alpha = MapParam::symbol("alpha");
            map.b = MapParam::symbol("a");
            map.delta = MapParam::symbol("beta");
            map.a = MapParam::symbol("bsh");
            params = {"alpha", "a", "beta", "bsh"};
            break;
        case GroupFamily::CPrimeG0:
            // X -> X + a Z, Y -> Y + bsh Z.
            emb = curve_derivation_set(d, CurveCase::CPrimeTranslations).embedding;
            map.b = MapParam::symbol("a");
            map.a = MapParam::symbol("bsh");
            params = {"a", "bsh"};
            break;
        default:
            throw DomainError("not a ternary family");
    }

    if (!same_varset(phi.vars(), emb.free_vars))
        throw VarsetError("invariant does not live over the family's coefficient varset");

    VarSetPtr work = extend_varset(emb.free_vars, params);

    std::vector<Polynomial> coeffs;
    coeffs.reserve(emb.space.vars->size());
    for (std::size_t k = 0; k < emb.space.vars->size(); ++k)
        coeffs.push_back(emb.coefficient(k, work));
    std::vector<Polynomial> moved = transform_coeffs_ternary(emb.space, coeffs, map);

    // Pinned coordinates must stay pinned (the family keeps its shape).
    std::vector<Polynomial> images(work->size(), Polynomial::zero(work));
    for (std::size_t v = 0; v < work->size(); ++v)
        images[v] = Polynomial::variable(work, v);
    for (std::size_t k = 0; k < emb.bindings.size(); ++k) {
        const VarBinding& bind = emb.bindings[k];
        if (bind.pinned()) {
            Polynomial expect = Polynomial::constant(work, std::get<Rational>(bind.v));
            if (!(moved[k] - expect).is_zero())
                throw DomainError("family shape not preserved at coefficient " +
                                  emb.space.vars->name(k));
        } else {
            auto sv = std::get<VarBinding::SignedVar>(bind.v);
            std::size_t target = *work->index(emb.free_vars->name(sv.index));
            images[target] = moved[k] * Rational(static_cast<long>(sv.sign));
        }
    }

    RationalFunction lifted = phi.lift(work);
    RationalFunction transformed(lifted.num().substitute(work, images),
                                 lifted.den().substitute(work, images));
    return rf_equal(transformed, lifted);
}

}  // namespace

bool check_invariance(const RationalFunction& phi, GroupFamily family, int d) {
    switch (family) {
        case GroupFamily::Translations:
        case GroupFamily::Scalings:
        case GroupFamily::AffineX:
            return check_invariance_hyper(phi, family, d);
        default:
            return check_invariance_ternary(phi, family, d);
    }
}

}  // namespace dk
